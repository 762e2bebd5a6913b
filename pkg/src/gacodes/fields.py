"""Exact arithmetic in GF(p) and GF(p^k) with an explicit irreducible modulus.

Elements are reduced coefficient vectors (low degree first) modulo a monic
irreducible polynomial chosen by the caller, so examples that pin a specific
minimal polynomial of the generator reproduce bit-exactly. Text literals use
the letter ``a`` for the generator: ``2*a+1``, ``a^2``; prime-field elements
are plain integers.
"""

from __future__ import annotations

import random
from typing import Iterator, Optional, Sequence

from .errors import (
    MixedFields,
    NonPrimeCharacteristic,
    ParseError,
    ReducibleModulus,
    UnknownGenerator,
    ZeroElement,
    ZeroInversion,
)
from .parsing import parse_arithmetic

ORDER_GUARD = 1 << 31  # soft cap on p^k; desk-scale fields only


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- dense polynomials over GF(p) as int lists (internal helpers) -----------
# Used only for modulus validation/search; the public Polynomial type lives in
# polynomials.py and works over any FieldSpec.


def _ptrim(f: list[int]) -> list[int]:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _ptrim(out)

def _pdivmod(f: Sequence[int], g: Sequence[int], p: int) -> tuple[list[int], list[int]]:
    f = list(f)
    dg = len(g) - 1
    inv_lead = pow(g[-1], p - 2, p)
    q = [0] * max(len(f) - dg, 0)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv_lead % p
        shift = len(f) - 1 - dg
        q[shift] = c
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _ptrim(f)
    return q, f


def _pgcd(f: Sequence[int], g: Sequence[int], p: int) -> list[int]:
    f, g = list(f), list(g)
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
    if f:
        inv = pow(f[-1], p - 2, p)
        f = [c * inv % p for c in f]
    return f


def _ppow_x_mod(e: int, m: Sequence[int], p: int) -> list[int]:
    """x^e mod m over GF(p), by square and multiply."""
    result = [1]
    base = _pdivmod([0, 1], m, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), m, p)[1]
        base = _pdivmod(_pmul(base, base, p), m, p)[1]
        e >>= 1
    return result


def _find_factor(f: Sequence[int], p: int) -> Optional[list[int]]:
    """Return a monic nontrivial factor of monic ``f`` over GF(p), or None.

    Root/trial-division search for degree <= 4, a distinct-degree power check
    for higher degrees (with trial division as the factor extractor when the
    gcd route does not expose one).
    """
    deg = len(f) - 1
    if deg <= 1:
        return None
    # Root search covers degrees 2 and 3 completely.
    for c in range(p):
        acc = 0
        for coef in reversed(f):
            acc = (acc * c + coef) % p
        if acc == 0:
            return [(-c) % p, 1]
    if deg <= 3:
        return None
    if deg == 4:
        return _trial_division_factor(f, p)
    # Rabin's test: f irreducible iff x^(p^deg) = x (mod f) and
    # gcd(x^(p^(deg/l)) - x, f) = 1 for every prime l dividing deg.
    xq = _ppow_x_mod(p**deg, f, p)
    top_ok = _ptrim([(a - b) % p for a, b in zip_pad(xq, [0, 1])]) == []
    for ell in _prime_divisors(deg):
        h = _ppow_x_mod(p ** (deg // ell), f, p)
        diff = _ptrim([(a - b) % p for a, b in zip_pad(h, [0, 1])])
        g = _pgcd(f, diff, p) if diff else list(f)
        if len(g) - 1 not in (0, deg):
            return g
        if len(g) - 1 == deg:
            return _trial_division_factor(f, p)
    if not top_ok:
        return _trial_division_factor(f, p)
    return None


def _trial_division_factor(f: Sequence[int], p: int) -> Optional[list[int]]:
    deg = len(f) - 1
    for d in range(2, deg // 2 + 1):
        for idx in range(p**d):
            cand = [0] * (d + 1)
            rem = idx
            for i in range(d):
                cand[i] = rem % p
                rem //= p
            cand[d] = 1
            if not _pdivmod(f, cand, p)[1]:
                return cand
    return None


def zip_pad(f: Sequence[int], g: Sequence[int]) -> Iterator[tuple[int, int]]:
    n = max(len(f), len(g))
    for i in range(n):
        yield (f[i] if i < len(f) else 0, g[i] if i < len(g) else 0)


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _default_modulus(p: int, k: int) -> tuple[int, ...]:
    """Smallest monic irreducible of degree k, by lexicographic coefficient
    order on (c_0, ..., c_{k-1})."""
    for idx in range(p**k):
        coeffs = [0] * (k + 1)
        rem = idx
        for i in range(k - 1, -1, -1):
            coeffs[i] = rem % p
            rem //= p
        coeffs[k] = 1
        if _find_factor(coeffs, p) is None:
            return tuple(coeffs)
    raise AssertionError(f"no irreducible of degree {k} over GF({p})")


# --- field spec & elements ---------------------------------------------------


class FieldSpec:
    """GF(p^k) presented by a monic irreducible modulus of degree k.

    Immutable; all element operations are pure, so specs and elements may be
    shared freely between threads.
    """

    __slots__ = ("p", "k", "order", "modulus", "_reduction", "_inv_cache")

    def __init__(self, p: int, k: int = 1, modulus: Optional[Sequence[int]] = None):
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
        if k < 1:
            raise ValueError(f"extension degree must be >= 1, got {k}")
        if p**k >= ORDER_GUARD:
            raise ValueError(f"field order {p}^{k} exceeds the desk-scale guard 2^31")
        self.p = p
        self.k = k
        self.order = p**k
        if k == 1:
            if modulus is not None:
                raise ValueError("prime fields take no modulus")
            self.modulus = None
        else:
            if modulus is None:
                mod = _default_modulus(p, k)
            else:
                mod = tuple(int(c) % p for c in modulus)
                if len(mod) != k + 1 or mod[-1] != 1:
                    raise ValueError(f"modulus must be monic of degree {k}")
                factor = _find_factor(list(mod), p)
                if factor is not None:
                    raise ReducibleModulus(
                        f"modulus {_poly_text(mod)} over GF({p}) has factor "
                        f"{_poly_text(tuple(factor))}",
                        factor=tuple(factor),
                    )
            self.modulus = mod
        # reduction[i] = coefficients of x^(k+i) mod modulus, i = 0..k-2
        if k > 1:
            rows = []
            cur = [(-c) % p for c in self.modulus[:k]]
            rows.append(tuple(cur))
            for _ in range(k - 2):
                top = cur[-1]
                cur = [0] + cur[:-1]
                if top:
                    for i in range(k):
                        cur[i] = (cur[i] + top * rows[0][i]) % p
                rows.append(tuple(cur))
            self._reduction = tuple(rows)
        else:
            self._reduction = ()
        self._inv_cache: dict[tuple[int, ...], tuple[int, ...]] = {}

    # -- identity / comparison --

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, FieldSpec)
            and self.p == other.p
            and self.k == other.k
            and self.modulus == other.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.order}) = GF({self.p})[a]/({_poly_text(self.modulus)})"

    def describe(self) -> dict:
        out = {"p": self.p, "k": self.k, "order": self.order}
        if self.modulus is not None:
            out["modulus"] = _poly_text(self.modulus)
        return out

    # -- element constructors --

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        c = [int(x) % self.p for x in coeffs]
        if len(c) > self.k:
            raise ValueError(f"expected at most {self.k} coefficients")
        c += [0] * (self.k - len(c))
        return FieldElement(self, tuple(c))

    def from_int(self, n: int) -> "FieldElement":
        return FieldElement(self, (n % self.p,) + (0,) * (self.k - 1))

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.k)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.k - 1))

    def gen(self) -> "FieldElement":
        """The residue of x: the generator the literal letter ``a`` denotes."""
        if self.k == 1:
            raise ValueError("prime fields have no extension generator")
        return FieldElement(self, (0, 1) + (0,) * (self.k - 2))

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in lexicographic coefficient order
        (c_0 major)."""
        for idx in range(self.order):
            coeffs = [0] * self.k
            rem = idx
            for i in range(self.k - 1, -1, -1):
                coeffs[i] = rem % self.p
                rem //= self.p
            yield FieldElement(self, tuple(coeffs))

    def random_element(self, rng: random.Random) -> "FieldElement":
        return FieldElement(
            self, tuple(rng.randrange(self.p) for _ in range(self.k))
        )

    def generator_of_units(self) -> "FieldElement":
        """Deterministic multiplicative generator: first element in
        lexicographic order with order q - 1."""
        for x in self.elements():
            if not x.is_zero() and x.multiplicative_order() == self.order - 1:
                return x
        raise AssertionError("no multiplicative generator found")

    # -- raw tuple arithmetic (hot path) --

    def _add(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def _sub(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def _neg(self, a: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        return tuple((-x) % p for x in a)

    def _mul(self, a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        p = self.p
        k = self.k
        if k == 1:
            return (a[0] * b[0] % p,)
        conv = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    conv[i + j] += x * y
        red = self._reduction
        for i in range(2 * k - 2, k - 1, -1):
            c = conv[i] % p
            if c:
                row = red[i - k]
                for j in range(k):
                    conv[j] += c * row[j]
        return tuple(c % p for c in conv[:k])

    def _inv(self, a: tuple[int, ...]) -> tuple[int, ...]:
        if all(c == 0 for c in a):
            raise ZeroInversion("cannot invert zero")
        cached = self._inv_cache.get(a)
        if cached is not None:
            return cached
        out = self._pow(a, self.order - 2)
        self._inv_cache[a] = out
        return out

    def _pow(self, a: tuple[int, ...], e: int) -> tuple[int, ...]:
        if e < 0:
            return self._pow(self._inv(a), -e)
        result = (1,) + (0,) * (self.k - 1)
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result


class FieldElement:
    """Immutable residue in a FieldSpec; supports +, -, *, ** and inverse()."""

    __slots__ = ("spec", "coeffs")

    def __init__(self, spec: FieldSpec, coeffs: tuple[int, ...]):
        self.spec = spec
        self.coeffs = coeffs

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise MixedFields(f"{self.spec!r} vs {other.spec!r}")
            return other
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._add(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._sub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FieldElement(self.spec, self.spec._sub(other.coeffs, self.coeffs))

    def __neg__(self):
        return FieldElement(self.spec, self.spec._neg(self.coeffs))

    def __mul__(self, other):
        if isinstance(other, FieldElement) or isinstance(other, int):
            other = self._coerce(other)
            return FieldElement(self.spec, self.spec._mul(self.coeffs, other.coeffs))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.__mul__(other)
        return NotImplemented

    def __pow__(self, e: int):
        return FieldElement(self.spec, self.spec._pow(self.coeffs, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec._inv(self.coeffs))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.spec.from_int(other)
        return (
            isinstance(other, FieldElement)
            and self.spec == other.spec
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def frobenius(self) -> "FieldElement":
        """a -> a^p, the field's p-power automorphism."""
        return self**self.spec.p

    def multiplicative_order(self) -> int:
        if self.is_zero():
            raise ZeroElement("multiplicative order of zero is undefined")
        n = self.spec.order - 1
        order = n
        for ell in _prime_divisors(n):
            while order % ell == 0 and self ** (order // ell) == self.spec.one():
                order //= ell
        return order

    def literal(self) -> str:
        """Canonical text form: an integer, or a polynomial in ``a``."""
        if self.spec.k == 1:
            return str(self.coeffs[0])
        terms = []
        for i in range(self.spec.k - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                var = "a" if i == 1 else f"a^{i}"
                terms.append(var if c == 1 else f"{c}*{var}")
        return "+".join(terms) if terms else "0"

    def __repr__(self) -> str:
        return self.literal()


def field_make(p: int, k: int = 1, modulus: Optional[Sequence[int]] = None) -> FieldSpec:
    """Validated GF(p^k). A missing modulus for k > 1 selects the
    lexicographically smallest monic irreducible (deterministic)."""
    return FieldSpec(p, k, modulus)


def parse_field_literal(text: str, spec: FieldSpec) -> FieldElement:
    """Evaluate ``2*a+1`` style literals (plain integers for prime fields)."""

    def resolve(name: str, pos: int):
        if name == "a" and spec.k > 1:
            return spec.gen()
        raise UnknownGenerator(f"unknown field symbol {name!r}", pos)

    value = parse_arithmetic(text, resolve, spec.from_int)
    if not isinstance(value, FieldElement):
        raise ParseError("expected a field literal")
    return value


def parse_field_spec(text: str) -> FieldSpec:
    """CLI field syntax: ``gf:9``, ``gf:3``, ``gf:9:x^2+2*x+2``.

    The order may also be written ``p^k``. An explicit modulus is a polynomial
    in ``x`` over GF(p).
    """
    parts = text.strip().split(":", 2)
    if len(parts) < 2 or parts[0].lower() != "gf":
        raise ParseError(f"bad field spec {text!r}; expected gf:<order>[:modulus]")
    order_text = parts[1]
    if "^" in order_text:
        base, _, exp = order_text.partition("^")
        p, k = int(base), int(exp)
        if not is_prime(p):
            raise NonPrimeCharacteristic(f"{p} is not prime")
    else:
        q = int(order_text)
        p, k = _split_prime_power(q)
    modulus = None
    if len(parts) == 3:
        modulus = _parse_modulus_text(parts[2], p, k)
    return field_make(p, k, modulus)


def _split_prime_power(q: int) -> tuple[int, int]:
    if q < 2:
        raise NonPrimeCharacteristic(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                raise NonPrimeCharacteristic(f"{q} is not a prime power")
            k = 0
            n = q
            while n % p == 0:
                n //= p
                k += 1
            if n != 1:
                raise NonPrimeCharacteristic(f"{q} is not a prime power")
            return p, k
    raise NonPrimeCharacteristic(f"{q} is not a prime power")


def _parse_modulus_text(text: str, p: int, k: int) -> tuple[int, ...]:
    """Parse a modulus polynomial in ``x`` over GF(p) into an int list."""

    class _P:
        # minimal poly-over-GF(p) value type for the shared parser
        __slots__ = ("c",)

        def __init__(self, c):
            self.c = _ptrim([x % p for x in c])

        def __add__(self, o):
            return _P([a + b for a, b in zip_pad(self.c, o.c)])

        def __sub__(self, o):
            return _P([a - b for a, b in zip_pad(self.c, o.c)])

        def __neg__(self):
            return _P([-a for a in self.c])

        def __mul__(self, o):
            return _P(_pmul(self.c, o.c, p))

        def __pow__(self, e):
            if e < 0:
                raise ParseError("negative powers not allowed in a modulus")
            out = _P([1])
            for _ in range(e):
                out = out * self
            return out

    def resolve(name: str, pos: int):
        if name == "x":
            return _P([0, 1])
        raise UnknownGenerator(f"unknown symbol {name!r} in modulus", pos)

    value = parse_arithmetic(text, resolve, lambda n: _P([n]))
    coeffs = value.c
    if len(coeffs) - 1 != k:
        raise ParseError(f"modulus degree {len(coeffs) - 1} does not match k={k}")
    return tuple(coeffs)


def _poly_text(coeffs: Sequence[int]) -> str:
    terms = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            var = "x" if i == 1 else f"x^{i}"
            terms.append(var if c == 1 else f"{c}*{var}")
    return "+".join(terms) if terms else "0"
