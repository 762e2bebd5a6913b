"""Group codes as principal ideals: bases, exact minimum distance, and
Singleton/MDS/ECD classification.

Minimum distance is exhaustive over all q^k - 1 nonzero codewords, walked in
reflected Gray order over coefficient tuples so each step is one scaled
basis-vector update; a hard cap keeps the search at desk scale (beyond it
only a cheap upper bound is reported). An ECD code is a principal ideal with
an idempotent generator and dimension at most the characteristic; a few
classical relations between MDS and ECD codes are emitted as machine-readable
statements, tagged conditional when they stand on the MDS conjecture.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional, Sequence

from .algebra import AlgebraElement, ideal_dimension_rank
from .dimensions import DimensionReport, dimension_exact
from .errors import EmptyBasis, ZeroElement
from .groups import Group

DEFAULT_DISTANCE_CAP = 1 << 24


def ideal_basis(b: AlgebraElement) -> list[AlgebraElement]:
    """Canonical reduced-echelon basis of the principal ideal generated
    by b."""
    if b.is_zero():
        raise ZeroElement("the zero element generates the zero ideal")
    span = b.right_regular_matrix().transpose()
    reduced, pivots = span.rref()
    return [
        AlgebraElement(b.field, b.group, reduced.rows[i]) for i in range(len(pivots))
    ]


@dataclass(frozen=True)
class DistanceScan:
    value: int
    exact: bool
    codewords_checked: int

    def to_dict(self) -> dict:
        return {
            "d": self.value,
            "exact": self.exact,
            "codewords_checked": self.codewords_checked,
        }


def min_distance(
    basis: Sequence[AlgebraElement], cap: int = DEFAULT_DISTANCE_CAP
) -> DistanceScan:
    """Minimum Hamming weight over the span of ``basis``.

    Exact (Gray-code exhaustive scan) when q^k <= cap; otherwise returns the
    best upper bound from the basis rows and their pairwise sums, flagged
    inexact.
    """
    basis = list(basis)
    if not basis:
        raise EmptyBasis("a code needs at least one basis vector")
    field = basis[0].field
    k = len(basis)
    total = field.order**k
    if total > cap:
        best = min(v.weight() for v in basis)
        for i in range(k):
            for j in range(i + 1, k):
                best = min(best, (basis[i] + basis[j]).weight())
        return DistanceScan(value=best, exact=False, codewords_checked=k * (k + 1) // 2)
    elements = list(field.elements())
    q = field.order
    n = basis[0].group.order
    zero = field.zero()
    vectors = [list(v.coeffs) for v in basis]
    current = [zero] * n
    digits = [0] * k
    focus = list(range(k + 1))
    direction = [1] * k
    best = n + 1
    checked = 0
    # loopless q-ary reflected Gray enumeration: one digit moves by +-1 each
    # step, so the codeword updates by one scaled basis vector
    while True:
        j = focus[0]
        focus[0] = 0
        if j == k:
            break
        old = digits[j]
        new = old + direction[j]
        if new == 0 or new == q - 1:
            focus[j] = focus[j + 1]
            focus[j + 1] = j + 1
            direction[j] = -direction[j]
        digits[j] = new
        delta = elements[new] - elements[old]
        row = vectors[j]
        weight = 0
        for idx in range(n):
            c = current[idx] + delta * row[idx]
            current[idx] = c
            if c:
                weight += 1
        checked += 1
        if 0 < weight < best:
            best = weight
            if best == 1:
                break
    return DistanceScan(value=best, exact=True, codewords_checked=checked)


@dataclass(frozen=True)
class DistanceBound:
    """An asserted relation on the minimum distance d."""

    tag: str
    kind: str  # "upper" | "lower" | "congruence"
    value: int
    note: str = ""
    conditional_on: Optional[str] = None  # e.g. "mds" for MDS-only necessities

    def to_dict(self) -> dict:
        out = {"tag": self.tag, "kind": self.kind, "value": self.value}
        if self.note:
            out["note"] = self.note
        if self.conditional_on:
            out["conditional_on"] = self.conditional_on
        return out


def mds_distance_bounds(
    b: AlgebraElement, report: Optional[DimensionReport] = None
) -> list[DistanceBound]:
    """Upper bounds on the minimum distance of the ideal generated by b,
    derived from the minimal-polynomial data."""
    if report is None:
        report = dimension_exact(b)
    order = report.group_order
    p = b.field.p
    p_part = b.group.p_part(p)
    n, u, zeta, t = report.n, report.u, report.zeta_n, report.t
    out = [
        DistanceBound(
            "cor_5_1_1",
            "upper",
            u - zeta + 1,
            note=f"MDS exactly when the code is [{order}, {order - u + zeta}, {u - zeta + 1}]",
        )
    ]
    kernel_divisible = (order - report.rank_check) % p_part == 0
    if n > 1 and kernel_divisible:
        value = order - (t + 1) * p_part + 1
    else:
        value = order - t * p_part + 1
    out.append(DistanceBound("cor_5_1_2", "upper", value))
    if n == 1:
        out.append(
            DistanceBound(
                "cor_5_1_2",
                "congruence",
                p,
                note="d = 1 (mod p) for an MDS code here",
                conditional_on="mds",
            )
        )
        out.append(
            DistanceBound(
                "cor_5_1_2", "lower", p_part + 1, conditional_on="mds"
            )
        )
        out.append(
            DistanceBound(
                "cor_5_1_2", "upper", order - t * p_part + 1, conditional_on="mds"
            )
        )
    if report.congruence is not None and n == 1:
        r = report.congruence.min_positive
        ecd = report.projective and report.dim_exact <= p
        if ecd:
            out.append(
                DistanceBound(
                    "cor_5_1_3",
                    "upper",
                    order - r + 1,
                    note=f"MDS and ECD exactly when the code is [{order}, {r}, {order - r + 1}]",
                )
            )
    return out


@dataclass(frozen=True)
class ConjectureStatement:
    tag: str
    text: str
    conditional_on: Optional[str] = None  # "mds_conjecture" when applicable
    contradiction: Optional[bool] = None

    def to_dict(self) -> dict:
        out = {"tag": self.tag, "text": self.text}
        if self.conditional_on:
            out["conditional_on"] = self.conditional_on
        if self.contradiction is not None:
            out["contradiction"] = self.contradiction
        return out


def ecd_mds_relations(
    q: int, group: Group, report: Optional["CodeReport"] = None
) -> list[ConjectureStatement]:
    """Machine-readable relations between MDS and ECD group codes.

    Statements that depend on the MDS conjecture carry
    ``conditional_on = "mds_conjecture"`` and are never asserted as facts.
    """
    order = group.order
    p = _characteristic_of_order(q)
    out: list[ConjectureStatement] = []
    if report is not None and report.mds and report.ecd:
        violated = order > q + 1
        out.append(
            ConjectureStatement(
                "thm_5_3_1",
                f"an MDS and ECD group code forces |G| <= q+1; here |G| = {order}, "
                f"q+1 = {q + 1}: " + ("violated" if violated else "consistent"),
                contradiction=violated,
            )
        )
    if q == p and order % p == 0:
        # prime field, non-semisimple algebra
        if p == 2:
            out.append(
                ConjectureStatement(
                    "lemma_5_2",
                    "every MDS group code over GF(2) with 2 | |G| is trivial",
                    conditional_on="mds_conjecture",
                )
            )
        elif order == p and _is_cyclic(group):
            out.append(
                ConjectureStatement(
                    "lemma_5_2",
                    f"nontrivial MDS group codes over GF({p}) on this group are "
                    "equivalent to extended Reed-Solomon codes",
                    conditional_on="mds_conjecture",
                )
            )
        else:
            out.append(
                ConjectureStatement(
                    "lemma_5_2",
                    f"no nontrivial MDS group codes exist in this non-semisimple "
                    f"GF({p}) group algebra",
                    conditional_on="mds_conjecture",
                )
            )
    if q == p and p > 2 and not (order == p and _is_cyclic(group)):
        ecd_algebra = order <= p + 1 and order != p
        out.append(
            ConjectureStatement(
                "thm_5_3_2",
                f"a nontrivial MDS group code over GF({p}) would make the whole "
                f"algebra ECD; the ECD-algebra test |G| <= p+1 and |G| != p is "
                + ("met" if ecd_algebra else "not met"),
                conditional_on="mds_conjecture",
            )
        )
    return out


def _characteristic_of_order(q: int) -> int:
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    raise ValueError(f"bad field order {q}")


def _is_cyclic(group: Group) -> bool:
    return any(group.element_order(i) == group.order for i in range(group.order))


@dataclass(frozen=True)
class CodeReport:
    """Parameters and classification flags for one group code."""

    n: int
    k: int
    d: Optional[int]
    d_exact: bool
    d_upper: Optional[int]
    mds: bool
    ecd: bool
    ecd_algebra: bool
    singleton_defect: Optional[int]
    distance_bounds: tuple[DistanceBound, ...]
    conjecture_notes: tuple[ConjectureStatement, ...] = ()

    def validate(self) -> None:
        if self.d is not None:
            assert 1 <= self.d <= self.n - self.k + 1
            assert self.mds == (self.d == self.n - self.k + 1)
            assert self.singleton_defect == self.n - self.k - self.d + 1

    def to_dict(self) -> dict:
        out = {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "d_exact": self.d_exact,
            "mds": self.mds,
            "ecd": self.ecd,
            "ecd_algebra": self.ecd_algebra,
            "singleton_defect": self.singleton_defect,
            "distance_bounds": [b.to_dict() for b in self.distance_bounds],
            "conjecture_notes": [s.to_dict() for s in self.conjecture_notes],
        }
        if self.d_upper is not None:
            out["d_upper"] = self.d_upper
        return out


def classify(
    b: AlgebraElement,
    cap: int = DEFAULT_DISTANCE_CAP,
    conjecture_notes: bool = True,
) -> CodeReport:
    """Full [n, k, d] report for the ideal generated by b."""
    report = dimension_exact(b)
    basis = ideal_basis(b)
    n = b.group.order
    k = len(basis)
    scan = min_distance(basis, cap=cap)
    d = scan.value if scan.exact else None
    d_upper = None if scan.exact else scan.value
    p = b.field.p
    ecd = report.projective and k <= p
    ecd_algebra = n <= p + 1 and n != p
    mds = d is not None and d == n - k + 1
    out = CodeReport(
        n=n,
        k=k,
        d=d,
        d_exact=scan.exact,
        d_upper=d_upper,
        mds=mds,
        ecd=ecd,
        ecd_algebra=ecd_algebra,
        singleton_defect=None if d is None else n - k - d + 1,
        distance_bounds=tuple(mds_distance_bounds(b, report)),
    )
    if conjecture_notes:
        out = replace(
            out,
            conjecture_notes=tuple(ecd_mds_relations(b.field.order, b.group, out)),
        )
    out.validate()
    return out
