"""Dense univariate polynomials over a FieldSpec.

Provides exact division, extended gcd, evaluation, and full factorization
into irreducibles with multiplicities. Factorization runs squarefree
decomposition (with p-th-root descent when the derivative vanishes), then
distinct-degree splitting, then equal-degree splitting whose random choices
come from a PRNG seeded by a canonical hash of the input, so results are
identical run to run.
"""

from __future__ import annotations

import hashlib
import random
from typing import Iterable, Optional, Sequence

from .errors import BothZero, ParseError, UnknownGenerator, ZeroPolynomial
from .fields import FieldElement, FieldSpec
from .parsing import parse_arithmetic


class Polynomial:
    """Coefficients low degree first, no trailing zeros; immutable."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: Iterable[FieldElement]):
        cs = list(coeffs)
        while cs and cs[-1].is_zero():
            cs.pop()
        self.spec = spec
        self.coeffs = tuple(cs)

    # -- constructors --

    @classmethod
    def zero(cls, spec: FieldSpec) -> "Polynomial":
        return cls(spec, ())

    @classmethod
    def one(cls, spec: FieldSpec) -> "Polynomial":
        return cls(spec, (spec.one(),))

    @classmethod
    def x(cls, spec: FieldSpec) -> "Polynomial":
        return cls(spec, (spec.zero(), spec.one()))

    @classmethod
    def constant(cls, c: FieldElement) -> "Polynomial":
        return cls(c.spec, (c,))

    @classmethod
    def from_ints(cls, spec: FieldSpec, ints: Sequence[int]) -> "Polynomial":
        return cls(spec, tuple(spec.from_int(n) for n in ints))

    @classmethod
    def monomial(cls, spec: FieldSpec, degree: int, c: Optional[FieldElement] = None) -> "Polynomial":
        c = spec.one() if c is None else c
        return cls(spec, (spec.zero(),) * degree + (c,))

    # -- basic queries --

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return len(self.coeffs) == 1 and self.coeffs[0] == self.spec.one()

    def leading(self) -> FieldElement:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> FieldElement:
        return self.coeffs[i] if i < len(self.coeffs) else self.spec.zero()

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.spec.one()

    # -- arithmetic --

    def _check(self, other: "Polynomial") -> None:
        if self.spec != other.spec:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.spec, (self.coeff(i) + other.coeff(i) for i in range(n)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.spec, (self.coeff(i) - other.coeff(i) for i in range(n)))

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.spec, (-c for c in self.coeffs))

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, FieldElement):
            return Polynomial(self.spec, (c * other for c in self.coeffs))
        self._check(other)
        if self.is_zero() or other.is_zero():
            return Polynomial.zero(self.spec)
        out = [self.spec.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Polynomial(self.spec, out)

    def __rmul__(self, other):
        if isinstance(other, FieldElement):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = Polynomial.one(self.spec)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        self._check(other)
        if other.is_zero():
            raise ZeroPolynomial("division by the zero polynomial")
        rem = list(self.coeffs)
        dg = other.degree
        inv_lead = other.leading().inverse()
        q = [self.spec.zero()] * max(len(rem) - dg, 0)
        while len(rem) - 1 >= dg and rem:
            c = rem[-1] * inv_lead
            shift = len(rem) - 1 - dg
            q[shift] = c
            for i, b in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - c * b
            while rem and rem[-1].is_zero():
                rem.pop()
        return Polynomial(self.spec, q), Polynomial(self.spec, rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def monic(self) -> "Polynomial":
        if self.is_zero() or self.is_monic():
            return self
        inv = self.leading().inverse()
        return self * inv

    def derivative(self) -> "Polynomial":
        return Polynomial(
            self.spec, (self.coeffs[i] * i for i in range(1, len(self.coeffs)))
        )

    def evaluate(self, value: FieldElement) -> FieldElement:
        acc = self.spec.zero()
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def shift_down(self, n: int) -> "Polynomial":
        """Exact division by x^n; requires the low n coefficients to vanish."""
        if any(not c.is_zero() for c in self.coeffs[:n]):
            raise ValueError("polynomial is not divisible by x^n")
        return Polynomial(self.spec, self.coeffs[n:])

    # -- ordering key & text --

    def sort_key(self) -> tuple:
        return (self.degree, tuple(c.coeffs for c in self.coeffs))

    def text(self) -> str:
        """Canonical expanded form, low degree first."""
        if self.is_zero():
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            lit = c.literal()
            if i == 0:
                terms.append(lit)
                continue
            var = "x" if i == 1 else f"x^{i}"
            if lit == "1":
                terms.append(var)
            elif "+" in lit:
                terms.append(f"({lit})*{var}")
            else:
                terms.append(f"{lit}*{var}")
        return " + ".join(terms)

    def __repr__(self) -> str:
        return self.text()


def factored_text(factors: Sequence[tuple[Polynomial, int]]) -> str:
    parts = []
    for f, mult in factors:
        base = f.text()
        if f.degree > 0 and len([c for c in f.coeffs if not c.is_zero()]) > 1:
            base = f"({base})"
        parts.append(base if mult == 1 else f"{base}^{mult}")
    return "*".join(parts) if parts else "1"


# --- gcd family ---------------------------------------------------------------


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def poly_xgcd(f: Polynomial, g: Polynomial) -> tuple[Polynomial, Polynomial, Polynomial]:
    """(d, u, v) with u*f + v*g = d, d the monic gcd."""
    if f.is_zero() and g.is_zero():
        raise BothZero("xgcd(0, 0) is undefined")
    spec = f.spec
    r0, r1 = f, g
    s0, s1 = Polynomial.one(spec), Polynomial.zero(spec)
    t0, t1 = Polynomial.zero(spec), Polynomial.one(spec)
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lead_inv = r0.leading().inverse()
    return r0 * lead_inv, s0 * lead_inv, t0 * lead_inv


def poly_lcm(f: Polynomial, g: Polynomial) -> Polynomial:
    if f.is_zero() or g.is_zero():
        return Polynomial.zero(f.spec)
    return ((f * g) // poly_gcd(f, g)).monic()


def x_multiplicity(f: Polynomial) -> int:
    """Exact power of x dividing f."""
    if f.is_zero():
        raise ZeroPolynomial("x-multiplicity of the zero polynomial")
    for i, c in enumerate(f.coeffs):
        if not c.is_zero():
            return i
    raise AssertionError("unreachable")


# --- factorization -------------------------------------------------------------


def _canonical_seed(f: Polynomial) -> int:
    spec = f.spec
    payload = repr((spec.p, spec.k, spec.modulus, tuple(c.coeffs for c in f.coeffs)))
    return int.from_bytes(hashlib.sha256(payload.encode()).digest()[:8], "big")


def _pth_root(f: Polynomial) -> Polynomial:
    """For f with zero derivative (f = g(x^p)), recover g.

    Coefficient c of x^(pi) maps to its p-th root c^(q/p) at position i.
    """
    spec = f.spec
    p = spec.p
    root_exp = spec.order // p
    out = []
    for i in range(0, len(f.coeffs), p):
        out.append(f.coeffs[i] ** root_exp)
    return Polynomial(spec, out)


def squarefree_decomposition(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """[(g, m)] with f = lead * prod g^m, each g monic squarefree, m distinct."""
    if f.is_zero():
        raise ZeroPolynomial("cannot decompose the zero polynomial")
    f = f.monic()
    out: dict[int, Polynomial] = {}

    def accumulate(g: Polynomial, mult: int) -> None:
        if g.degree < 1:
            return
        if mult in out:
            out[mult] = out[mult] * g
        else:
            out[mult] = g

    def recurse(f: Polynomial, scale: int) -> None:
        if f.degree < 1:
            return
        df = f.derivative()
        if df.is_zero():
            recurse(_pth_root(f), scale * f.spec.p)
            return
        w = poly_gcd(f, df)
        v = f // w  # product of squarefree part
        m = 1
        while v.degree >= 1:
            nxt = poly_gcd(w, v)
            piece = v // nxt
            accumulate(piece, m * scale)
            w = w // nxt
            v = nxt
            m += 1
        recurse(w, scale)  # leftover p-th power part

    recurse(f, 1)
    return sorted(((g.monic(), m) for m, g in out.items()), key=lambda t: t[1])


def _distinct_degree(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Split squarefree monic f into [(product of degree-d irreducibles, d)]."""
    spec = f.spec
    q = spec.order
    out = []
    h = Polynomial.x(spec) % f
    x = Polynomial.x(spec)
    d = 0
    rest = f
    while rest.degree > 2 * (d + 1) - 1 and rest.degree > 0:
        d += 1
        h = _pow_mod(h, q, rest)
        g = poly_gcd(rest, h - x)
        if g.degree > 0:
            out.append((g, d))
            rest = rest // g
            h = h % rest
    if rest.degree > 0:
        # at most one factor of degree > d can remain, so rest is irreducible
        out.append((rest, rest.degree))
    return out


def _pow_mod(base: Polynomial, e: int, mod: Polynomial) -> Polynomial:
    result = Polynomial.one(base.spec) % mod
    base = base % mod
    while e:
        if e & 1:
            result = (result * base) % mod
        base = (base * base) % mod
        e >>= 1
    return result


def _equal_degree_split(f: Polynomial, d: int, rng: random.Random) -> list[Polynomial]:
    """Cantor-Zassenhaus: factor monic squarefree f whose irreducible factors
    all have degree d."""
    spec = f.spec
    if f.degree == d:
        return [f]
    q = spec.order
    n = f.degree
    while True:
        r = Polynomial(
            spec,
            tuple(spec.random_element(rng) for _ in range(n)),
        )
        if r.degree < 1:
            continue
        g = poly_gcd(f, r)
        if 0 < g.degree < n:
            pass  # lucky gcd split
        elif q % 2 == 1:
            h = _pow_mod(r, (q**d - 1) // 2, f)
            g = poly_gcd(f, h - Polynomial.one(spec))
        else:
            # char 2: use the trace map sum r^(2^i), i < k*d
            t = r % f
            acc = t
            steps = spec.k * d
            for _ in range(steps - 1):
                t = (t * t) % f
                acc = (acc + t) % f
            g = poly_gcd(f, acc)
        if 0 < g.degree < n:
            left = _equal_degree_split(g.monic(), d, rng)
            right = _equal_degree_split((f // g).monic(), d, rng)
            return left + right


def poly_factor(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Factor into monic irreducibles with multiplicities.

    The product of factors times the leading unit reproduces f exactly;
    ordering is deterministic (degree, then coefficient tuples).
    """
    if f.is_zero():
        raise ZeroPolynomial("cannot factor the zero polynomial")
    if f.degree < 1:
        raise ZeroPolynomial("cannot factor a constant polynomial")
    rng = random.Random(_canonical_seed(f))
    factors: dict[Polynomial, int] = {}
    for squarefree, mult in squarefree_decomposition(f):
        for same_degree, d in _distinct_degree(squarefree):
            for irreducible in _equal_degree_split(same_degree.monic(), d, rng):
                key = irreducible.monic()
                factors[key] = factors.get(key, 0) + mult
    return sorted(factors.items(), key=lambda t: t[0].sort_key())


def is_irreducible(f: Polynomial) -> bool:
    if f.degree < 1:
        return False
    fs = poly_factor(f)
    return len(fs) == 1 and fs[0][1] == 1


# --- text parsing ---------------------------------------------------------------


def parse_polynomial(text: str, spec: FieldSpec) -> Polynomial:
    """Parse ``x^4*(x^2+x+1)^4`` style text (products of powers or expanded
    forms) over the given field; ``a`` denotes the field generator."""

    def resolve(name: str, pos: int):
        if name == "x":
            return Polynomial.x(spec)
        if name == "a" and spec.k > 1:
            return Polynomial.constant(spec.gen())
        raise UnknownGenerator(f"unknown symbol {name!r}", pos)

    def lift(n: int):
        return Polynomial.constant(spec.from_int(n))

    value = parse_arithmetic(text, resolve, lift)
    if not isinstance(value, Polynomial):
        raise ParseError("expected a polynomial expression")
    return value
