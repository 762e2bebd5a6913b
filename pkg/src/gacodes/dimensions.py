"""Dimension analysis of principal ideals from the minimal polynomial of the
right regular representation.

The central quantities for an element b with regular matrix M:

* m_b, p_b  - minimal and characteristic polynomial of M
* n, u      - multiplicities of the root 0 in m_b and p_b
* zeta_n    - dim ker(M^n) - dim ker(M), the kernel-defect correction
* t         - number of distinct irreducible factors of m_b other than x

The exact dimension is zeta_n + |G| - u, cross-checked against rank(M).
p-part bounds, the congruence candidate set (when m_b = x*(x-a)^s), the
projectivity test, and idempotent generators via coprime splits all derive
from the same data. JSON output uses the stable rule tags thm_3_2_1,
thm_3_2_2, thm_3_5 and cor_3_4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import AlgebraElement, evaluate_at_algebra
from .errors import (
    NotApplicable,
    NotAnnihilating,
    NotCoprime,
    NotProjective,
    UnitElement,
    ZeroElement,
)
from .fields import FieldElement
from .matrices import Matrix
from .polynomials import (
    Polynomial,
    factored_text,
    poly_factor,
    poly_gcd,
    poly_xgcd,
    x_multiplicity,
)


@dataclass(frozen=True)
class Bound:
    """A named interval [lower, upper] that must contain the dimension;
    ``divisor`` adds a divisibility constraint when set."""

    tag: str
    lower: int
    upper: int
    divisor: Optional[int] = None
    note: str = ""

    def admits(self, dim: int) -> bool:
        if not (self.lower <= dim <= self.upper):
            return False
        return self.divisor is None or dim % self.divisor == 0

    def to_dict(self) -> dict:
        out = {"tag": self.tag, "lower": self.lower, "upper": self.upper}
        if self.divisor is not None:
            out["divisor"] = self.divisor
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CongruenceData:
    """Candidate dimensions from the trace congruence when m_b = x*(x-a)^s."""

    p: int
    a: FieldElement
    s: int
    class_value: int  # |G| * lambda1(b) * a^-1 reduced into the prime field
    min_positive: int
    candidates: tuple[int, ...]
    certain: bool  # algebra small enough that the class pins the dimension
    dim_one_possible: bool  # lambda1(b) == |G|^-1 * a, necessary for dim 1

    def to_dict(self) -> dict:
        return {
            "tag": "cor_3_4",
            "p": self.p,
            "a": self.a.literal(),
            "s": self.s,
            "class_value": self.class_value,
            "min_positive": self.min_positive,
            "candidates": list(self.candidates),
            "certain": self.certain,
            "dim_one_possible": self.dim_one_possible,
        }


@dataclass(frozen=True)
class DimensionReport:
    """Everything the dimension analysis derives for one element."""

    group_order: int
    dim_exact: int
    rank_check: int
    is_unit: bool
    m_b: Polynomial
    p_b: Polynomial
    m_b_factors: tuple[tuple[Polynomial, int], ...]
    n: int
    u: int
    zeta_n: int
    t: int
    projective: bool
    bounds: tuple[Bound, ...]
    congruence: Optional[CongruenceData]
    idempotent_generator: Optional[AlgebraElement]
    candidates: tuple[int, ...]

    def validate(self) -> None:
        assert self.dim_exact == self.rank_check
        assert self.dim_exact == self.zeta_n + self.group_order - self.u
        for bound in self.bounds:
            assert bound.admits(self.dim_exact), (bound, self.dim_exact)
        if self.congruence is not None:
            assert self.dim_exact in self.congruence.candidates
        assert self.dim_exact in self.candidates

    def to_dict(self) -> dict:
        out = {
            "group_order": self.group_order,
            "dim": self.dim_exact,
            "rank": self.rank_check,
            "is_unit": self.is_unit,
            "m_b": self.m_b.text(),
            "m_b_factored": factored_text(self.m_b_factors),
            "p_b": self.p_b.text(),
            "n": self.n,
            "u": self.u,
            "zeta_n": self.zeta_n,
            "t": self.t,
            "projective": self.projective,
            "bounds": [b.to_dict() for b in self.bounds],
            "candidates": list(self.candidates),
        }
        if self.congruence is not None:
            out["congruence"] = self.congruence.to_dict()
        if self.idempotent_generator is not None:
            out["idempotent_generator"] = self.idempotent_generator.vector_text()
        return out


def _regular_data(b: AlgebraElement) -> tuple[Matrix, Polynomial, Polynomial]:
    if b.is_zero():
        raise ZeroElement("the zero element generates the zero ideal")
    matrix = b.right_regular_matrix()
    return matrix, matrix.min_poly(), matrix.char_poly()


def dimension_exact(b: AlgebraElement) -> DimensionReport:
    """Full dimension report for a nonzero element."""
    matrix, m_b, p_b = _regular_data(b)
    order = b.group.order
    factors = poly_factor(m_b)
    n = x_multiplicity(m_b)
    u = x_multiplicity(p_b)
    t = sum(1 for f, _ in factors if x_multiplicity(f) == 0)
    if n >= 1:
        zeta = matrix.kernel_dim_of_power(max(n, 1)) - matrix.kernel_dim()
    else:
        zeta = 0
    dim = zeta + order - u
    rank = matrix.rank()
    is_unit = n == 0
    bounds: tuple[Bound, ...] = ()
    if not is_unit:
        bounds = tuple(_bounds_from_data(b, matrix, n, u, t))
    congruence = None
    try:
        congruence = _congruence_from_data(b, m_b, factors, n, t)
    except NotApplicable:
        pass
    generator = None
    if n <= 1:
        generator = _idempotent_from_minimal(b, m_b, n)
    candidates = _combined_candidates(order, dim, is_unit, bounds, congruence)
    report = DimensionReport(
        group_order=order,
        dim_exact=dim,
        rank_check=rank,
        is_unit=is_unit,
        m_b=m_b,
        p_b=p_b,
        m_b_factors=tuple(factors),
        n=n,
        u=u,
        zeta_n=zeta,
        t=t,
        projective=n <= 1,
        bounds=bounds,
        congruence=congruence,
        idempotent_generator=generator,
        candidates=candidates,
    )
    report.validate()
    return report


def _combined_candidates(
    order: int,
    dim: int,
    is_unit: bool,
    bounds: tuple[Bound, ...],
    congruence: Optional[CongruenceData],
) -> tuple[int, ...]:
    if is_unit:
        return (order,)
    values = set(range(1, order))
    for bound in bounds:
        values = {v for v in values if bound.admits(v)}
    if congruence is not None:
        values &= set(congruence.candidates)
    return tuple(sorted(values))


def dimension_bounds(b: AlgebraElement) -> list[Bound]:
    """The p-part and kernel-defect bounds for a nonzero non-unit element."""
    matrix, m_b, p_b = _regular_data(b)
    factors = poly_factor(m_b)
    n = x_multiplicity(m_b)
    if n == 0:
        raise UnitElement("x does not divide the minimal polynomial: dim = |G|")
    u = x_multiplicity(p_b)
    t = sum(1 for f, _ in factors if x_multiplicity(f) == 0)
    return _bounds_from_data(b, matrix, n, u, t)


def _bounds_from_data(
    b: AlgebraElement, matrix: Matrix, n: int, u: int, t: int
) -> list[Bound]:
    order = b.group.order
    p = b.field.p
    p_part = b.group.p_part(p)
    out: list[Bound] = []
    kernel = matrix.kernel_dim()
    if n > 1 and kernel % p_part == 0:
        lower = (t + 1) * p_part
        note = f"kernel dimension divisible by |G|_p = {p_part} and 0 is a repeated root"
    else:
        lower = t * p_part
        note = f"t = {t} projective summands, each of dimension divisible by |G|_p = {p_part}"
    out.append(Bound("thm_3_2_2", lower, order - 1, note=note))
    if n == 1:
        out.append(
            Bound(
                "thm_3_2_2",
                t * p_part,
                order - p_part,
                divisor=p_part,
                note="0 is a simple root of m_b, so the ideal is projective",
            )
        )
    equality = "attained (0 is a simple root of m_b)" if n == 1 else (
        "strict (0 is a repeated root of m_b)"
    )
    out.append(
        Bound(
            "thm_3_5",
            order - u if n == 1 else order - u + 1,
            order - 1,
            note=f"lower end |G| - u = {order - u} {equality}",
        )
    )
    return out


def congruence_class(b: AlgebraElement) -> CongruenceData:
    """Candidate dimensions when m_b has the shape x*(x-a)^s with a != 0."""
    _, m_b, _ = _regular_data(b)
    factors = poly_factor(m_b)
    n = x_multiplicity(m_b)
    t = sum(1 for f, _ in factors if x_multiplicity(f) == 0)
    return _congruence_from_data(b, m_b, factors, n, t)


def _congruence_from_data(
    b: AlgebraElement,
    m_b: Polynomial,
    factors: list[tuple[Polynomial, int]],
    n: int,
    t: int,
) -> CongruenceData:
    field = b.field
    order = b.group.order
    p = field.p
    non_x = [(f, mult) for f, mult in factors if x_multiplicity(f) == 0]
    if n != 1 or len(non_x) != 1 or non_x[0][0].degree != 1:
        raise NotApplicable(
            "congruence needs m_b = x*(x-a)^s with a nonzero; got "
            + factored_text(factors)
        )
    linear, s = non_x[0]
    a = -linear.coeff(0)
    value = order * b.lambda1() * a.inverse()
    # The congruence lands in the prime subfield; reduce it to an integer.
    if any(c for c in value.coeffs[1:]):
        raise AssertionError("congruence value escaped the prime subfield")
    class_value = value.coeffs[0]
    min_positive = class_value if class_value > 0 else p
    p_part = b.group.p_part(p)
    candidates = tuple(
        d
        for d in range(min_positive, order, p)
        if t * p_part <= d <= order - p_part and d % p_part == 0
    )
    certain = order - 1 <= p and order != p and order % p != 0
    dim_one_possible = (
        order % p != 0 and b.lambda1() == field.from_int(order).inverse() * a
    )
    return CongruenceData(
        p=p,
        a=a,
        s=s,
        class_value=class_value,
        min_positive=min_positive,
        candidates=candidates,
        certain=certain,
        dim_one_possible=dim_one_possible,
    )


def is_projective_principal(b: AlgebraElement) -> bool:
    """True when 0 is at most a simple root of m_b (0 means b is a unit)."""
    _, m_b, _ = _regular_data(b)
    return x_multiplicity(m_b) <= 1


def idempotent_generator(b: AlgebraElement) -> AlgebraElement:
    """An idempotent generating the same principal ideal as b.

    Splits m_b = x * h with x coprime to h and applies the coprime-split
    construction; requires 0 to be at most a simple root of m_b.
    """
    _, m_b, _ = _regular_data(b)
    n = x_multiplicity(m_b)
    if n > 1:
        raise NotProjective(
            f"0 is a root of the minimal polynomial with multiplicity {n}"
        )
    e = _idempotent_from_minimal(b, m_b, n)
    assert e is not None
    return e


def _idempotent_from_minimal(
    b: AlgebraElement, m_b: Polynomial, n: int
) -> Optional[AlgebraElement]:
    if n == 0:
        # b is a unit: the whole algebra, generated by 1
        return AlgebraElement.one(b.field, b.group)
    h = m_b.shift_down(1)
    x = Polynomial.x(b.field)
    _, u0, _ = poly_xgcd(x, h)
    e = evaluate_at_algebra(u0, b) * b
    if not _verify_idempotent_generator(b, e):
        raise AssertionError("idempotent generator failed verification")
    return e


def _verify_idempotent_generator(b: AlgebraElement, e: AlgebraElement) -> bool:
    if e * e != e:
        return False
    mat_b = b.right_regular_matrix()
    mat_e = e.right_regular_matrix()
    rank_b = mat_b.rank()
    rank_e = mat_e.rank()
    stacked = mat_b.transpose().stack(mat_e.transpose()).rank()
    return rank_b == rank_e == stacked


def coprime_split_idempotents(
    b: AlgebraElement, f0: Polynomial, f1: Polynomial
) -> tuple[AlgebraElement, AlgebraElement]:
    """Orthogonal idempotents E_i = u_i(b) * f_i(b) from an annihilating
    coprime factorization f0 * f1 of the regular representation."""
    if b.is_zero():
        raise ZeroElement("the zero element generates the zero ideal")
    d, u0, u1 = poly_xgcd(f0, f1)
    if d.degree != 0:
        raise NotCoprime(f"gcd(f0, f1) = {d.text()} is not constant")
    kappa = f0 * f1
    matrix = b.right_regular_matrix()
    if not _annihilates(kappa, matrix):
        raise NotAnnihilating("f0 * f1 does not annihilate the regular matrix")
    e0 = evaluate_at_algebra(u0, b) * evaluate_at_algebra(f0, b)
    e1 = evaluate_at_algebra(u1, b) * evaluate_at_algebra(f1, b)
    one = AlgebraElement.one(b.field, b.group)
    assert e0 + e1 == one
    assert (e0 * e1).is_zero()
    assert e0 * e0 == e0 and e1 * e1 == e1
    for e, f in ((e0, f0), (e1, f1)):
        fb = evaluate_at_algebra(f, b)
        mat_e = e.right_regular_matrix().transpose()
        mat_f = fb.right_regular_matrix().transpose()
        rank_e = mat_e.rank()
        rank_f = mat_f.rank()
        assert rank_e == rank_f == mat_e.stack(mat_f).rank()
    return e0, e1


def _annihilates(f: Polynomial, matrix: Matrix) -> bool:
    n = matrix.nrows
    spec = matrix.spec
    acc = Matrix.zero(spec, n, n)
    identity = Matrix.identity(spec, n)
    for c in reversed(f.coeffs):
        acc = acc * matrix + identity * c
    return acc == Matrix.zero(spec, n, n)
