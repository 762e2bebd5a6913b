"""Semisimple abelian group algebras: power-map orbits, splitting fields,
primitive idempotents of cyclic factors, and the weight indicator.

For an abelian G with gcd(q, |G|) = 1, the primitive idempotents of the
split algebra form an eigenvector basis; the change-of-basis matrix A has
those idempotents as columns and its inverse D turns dimension questions into
Hamming-weight questions: dim(Re) = weight(D(e)) for idempotent e. Columns of
A are Kronecker products of per-cyclic-factor idempotent vectors, so the
construction needs G presented as an explicit product of cyclic factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

from .algebra import AlgebraElement
from .errors import (
    BadRootCount,
    EmptyY,
    NonAbelian,
    NotIdempotent,
    NotSemisimple,
    ZeroElement,
)
from .fields import FieldElement, FieldSpec, field_make
from .groups import Group, cyclic, direct_product
from .matrices import Matrix
from .polynomials import x_multiplicity


@dataclass(frozen=True)
class QOrbitPartition:
    """Orbits of g -> g^q on an abelian group; sizes match the dimensions of
    the minimal ideals."""

    group: Group
    q: int
    orbits: tuple[tuple[int, ...], ...]

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(o) for o in self.orbits)

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "orbits": [[self.group.label(i) for i in orbit] for orbit in self.orbits],
            "sizes": list(self.sizes()),
        }


def _require_semisimple_abelian(group: Group, field: FieldSpec) -> None:
    if not group.is_abelian():
        raise NonAbelian(f"{group!r} is not abelian")
    if group.order % field.p == 0:
        raise NotSemisimple(
            f"characteristic {field.p} divides the group order {group.order}"
        )


def q_orbits(group: Group, q: int) -> QOrbitPartition:
    """Partition of G under g -> g^q; requires G abelian and gcd(q,|G|) = 1."""
    if not group.is_abelian():
        raise NonAbelian(f"{group!r} is not abelian")
    if math.gcd(q, group.order) != 1:
        raise NotSemisimple(f"gcd({q}, {group.order}) != 1")
    pm = group.power_map(q)
    seen = [False] * group.order
    orbits = []
    for start in range(group.order):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        cur = pm[start]
        while cur != start:
            orbit.append(cur)
            seen[cur] = True
            cur = pm[cur]
        orbits.append(tuple(sorted(orbit)))
    return QOrbitPartition(group, q, tuple(orbits))


def orbit_bound(e: AlgebraElement) -> tuple[int, int]:
    """(min, max) of the orbit sizes matching |G| * lambda1(e) mod p.

    Caller obligation: e must generate a minimal ideal (not checked beyond
    idempotency); the bound then brackets its dimension.
    """
    group, field = e.group, e.field
    _require_semisimple_abelian(group, field)
    if not e.is_idempotent():
        raise NotIdempotent("orbit bound needs an idempotent generator")
    partition = q_orbits(group, field.order)
    target = field.from_int(group.order) * e.lambda1()
    if any(c for c in target.coeffs[1:]):
        raise EmptyY("|G| * lambda1(e) is not in the prime subfield")
    residue = target.coeffs[0]
    y = [s for s in partition.sizes() if s % field.p == residue]
    if not y:
        raise EmptyY("no orbit size matches the trace congruence")
    return min(y), max(y)


# --- splitting field ------------------------------------------------------------


@dataclass(frozen=True)
class SplittingFieldData:
    """Extension of the base field containing a primitive m-th root of unity
    (m the group exponent), with the base field embedded."""

    base: FieldSpec
    ext: FieldSpec
    m: int
    d: int  # extension degree over the base: multiplicative order of q mod m
    theta: FieldElement  # primitive m-th root of unity in ext
    generator: FieldElement  # deterministic generator of ext's units
    base_root: Optional[FieldElement]  # image of the base generator, k > 1

    def embed(self, value: FieldElement) -> FieldElement:
        if value.spec == self.ext:
            return value
        if value.spec != self.base:
            raise ValueError("value is not in the base field")
        if self.base.k == 1:
            return self.ext.from_int(value.coeffs[0])
        acc = self.ext.zero()
        for c in reversed(value.coeffs):
            acc = acc * self.base_root + self.ext.from_int(c)
        return acc

    def descend(self, value: FieldElement) -> FieldElement:
        """Inverse of ``embed``; raises ValueError when value is not in the
        embedded base field."""
        if self.ext == self.base:
            return value
        base, ext = self.base, self.ext
        if base.k == 1:
            if any(value.coeffs[1:]):
                raise ValueError(f"{value.literal()} is not in the base field")
            return base.from_int(value.coeffs[0])
        prime = field_make(base.p)
        cols = []
        power = ext.one()
        for _ in range(base.k):
            cols.append([prime.from_int(c) for c in power.coeffs])
            power = power * self.base_root
        rhs = [prime.from_int(c) for c in value.coeffs]
        system = Matrix.from_columns(prime, cols + [rhs])
        reduced, pivots = system.rref()
        if base.k in pivots:
            raise ValueError(f"{value.literal()} is not in the base field")
        solution = [prime.zero()] * base.k
        for row_idx, col in enumerate(pivots):
            solution[col] = reduced.entry(row_idx, base.k)
        return base.element([c.coeffs[0] for c in solution])


def splitting_field(
    group: Group,
    field: FieldSpec,
    extension: Optional[FieldSpec] = None,
) -> SplittingFieldData:
    """Splitting data for an abelian group algebra.

    The default extension is GF(p^(k*d)) with the deterministic modulus; pass
    ``extension`` to pin a specific presentation (it must have the right
    degree). The base field embeds at the lexicographically smallest root of
    its modulus.
    """
    _require_semisimple_abelian(group, field)
    return _splitting_for_exponent(group.exponent(), field, extension)


def _splitting_for_exponent(
    m: int, field: FieldSpec, extension: Optional[FieldSpec] = None
) -> SplittingFieldData:
    q = field.order
    d = _multiplicative_order(q, m)
    if extension is None:
        ext = field if d == 1 else field_make(field.p, field.k * d)
    else:
        if extension.p != field.p or extension.k != field.k * d:
            raise ValueError(
                f"extension must be GF({field.p}^{field.k * d}), got {extension!r}"
            )
        ext = extension
    base_root = None
    if field.k > 1:
        base_root = _smallest_base_root(field, ext)
    generator = ext.generator_of_units()
    theta = generator ** ((ext.order - 1) // m)
    return SplittingFieldData(
        base=field,
        ext=ext,
        m=m,
        d=d,
        theta=theta,
        generator=generator,
        base_root=base_root,
    )


def _multiplicative_order(q: int, m: int) -> int:
    if m == 1:
        return 1
    if math.gcd(q, m) != 1:
        raise NotSemisimple(f"gcd({q}, {m}) != 1")
    order = 1
    acc = q % m
    while acc != 1:
        acc = acc * q % m
        order += 1
    return order


def _smallest_base_root(base: FieldSpec, ext: FieldSpec) -> FieldElement:
    if ext == base:
        return base.gen()
    coeffs = base.modulus
    for candidate in ext.elements():
        acc = ext.zero()
        for c in reversed(coeffs):
            acc = acc * candidate + ext.from_int(c)
        if acc.is_zero():
            return candidate
    raise AssertionError("base modulus has no root in the extension")


# --- primitive idempotents and the indicator -------------------------------------


def cyclic_primitive_idempotents(
    n: int,
    ext: FieldSpec,
    gamma_order: Optional[Sequence[FieldElement]] = None,
) -> list[tuple[FieldElement, ...]]:
    """Coordinate vectors of the primitive idempotents of a length-n cyclic
    convolution algebra over the split field.

    The vector attached to the eigenvalue gamma is c * (1, gamma^(n-1),
    gamma^(n-2), ..., gamma) with c = n^-1 mod p; ``gamma_order`` fixes the
    eigenvalue ordering (default: ascending powers of the canonical primitive
    n-th root).
    """
    if (ext.order - 1) % n != 0:
        raise BadRootCount(f"{n} does not divide |ext*| = {ext.order - 1}")
    if gamma_order is None:
        theta = ext.generator_of_units() ** ((ext.order - 1) // n)
        gammas = [theta**j for j in range(n)]
    else:
        gammas = list(gamma_order)
        if len(gammas) != n:
            raise BadRootCount(f"expected {n} eigenvalues, got {len(gammas)}")
        if len(set(gammas)) != n or any(g**n != ext.one() for g in gammas):
            raise BadRootCount("eigenvalues must be the n distinct n-th roots of unity")
    scale = ext.from_int(n).inverse()
    out = []
    for gamma in gammas:
        vec = [ext.one()] + [gamma ** (n - i) for i in range(1, n)]
        out.append(tuple(scale * x for x in vec))
    return out


@dataclass(frozen=True)
class IndicatorData:
    """Primitive-idempotent basis data: A holds the idempotent coordinate
    vectors as columns, D = A^-1 maps group coordinates to that basis."""

    splitting: SplittingFieldData
    group: Group  # canonical product-of-cyclics group fixing the coordinates
    factors: tuple[int, ...]
    orderings: tuple[tuple[FieldElement, ...], ...]
    a_matrix: Matrix
    d_matrix: Matrix

    def column_idempotent(self, j: int) -> AlgebraElement:
        return AlgebraElement(
            self.splitting.ext, self.group, self.a_matrix.column(j)
        )


def indicator(
    factors: Sequence[int],
    field: FieldSpec,
    orderings: Optional[Sequence[Sequence[FieldElement]]] = None,
    extension: Optional[FieldSpec] = None,
) -> IndicatorData:
    """Indicator data for F[C_{n_1} x ... x C_{n_s}].

    Columns of A are the Kronecker products of per-factor idempotent vectors,
    ordered lexicographically by the per-factor eigenvalue orderings (left
    factor slow). The construction asserts the columns are orthogonal
    idempotents summing to 1, so inverting A cannot fail.
    """
    factors = tuple(int(n) for n in factors)
    if not factors or any(n < 1 for n in factors):
        raise ValueError("factors must be positive cyclic orders")
    group = _product_group(factors)
    _require_semisimple_abelian(group, field)
    m = math.lcm(*factors)
    splitting = _splitting_for_exponent(m, field, extension)
    ext = splitting.ext
    if orderings is None:
        orderings = [None] * len(factors)
    if len(orderings) != len(factors):
        raise BadRootCount(
            f"{len(orderings)} eigenvalue orderings for {len(factors)} factors"
        )
    per_factor = [
        cyclic_primitive_idempotents(n, ext, ordering)
        for n, ordering in zip(factors, orderings)
    ]
    columns = []
    for combo in _lex_combinations([len(v) for v in per_factor]):
        vec = (ext.one(),)
        for factor_idx, j in enumerate(combo):
            vec = _kronecker(vec, per_factor[factor_idx][j])
        columns.append(vec)
    a_matrix = Matrix.from_columns(ext, columns)
    _assert_idempotent_columns(a_matrix, group, ext)
    d_matrix = a_matrix.invert()
    ordering_values = tuple(
        tuple(_eigenvalue_of(vec, ext) for vec in vecs) for vecs in per_factor
    )
    return IndicatorData(
        splitting=splitting,
        group=group,
        factors=factors,
        orderings=ordering_values,
        a_matrix=a_matrix,
        d_matrix=d_matrix,
    )


def _product_group(factors: Sequence[int]) -> Group:
    # mirrors parse_group_spec: "cyclic:n" or "product:cyclic:n1,cyclic:n2,..."
    group = cyclic(factors[0])
    for n in factors[1:]:
        group = direct_product(group, cyclic(n))
    return group


def _eigenvalue_of(vec: Sequence[FieldElement], ext: FieldSpec) -> FieldElement:
    # vector is c*(1, g^(n-1), ..., g); read the eigenvalue back off the tail
    if len(vec) == 1:
        return ext.one()
    return vec[-1] * vec[0].inverse()


def _kronecker(
    left: Sequence[FieldElement], right: Sequence[FieldElement]
) -> tuple[FieldElement, ...]:
    return tuple(a * b for a in left for b in right)


def _lex_combinations(sizes: Sequence[int]) -> list[tuple[int, ...]]:
    combos = [()]
    for size in sizes:
        combos = [c + (j,) for c in combos for j in range(size)]
    return combos


def _assert_idempotent_columns(a_matrix: Matrix, group: Group, ext: FieldSpec) -> None:
    cols = [
        AlgebraElement(ext, group, a_matrix.column(j)) for j in range(a_matrix.ncols)
    ]
    total = AlgebraElement.zero(ext, group)
    for i, e in enumerate(cols):
        assert e * e == e, f"column {i} is not idempotent"
        total = total + e
    assert total == AlgebraElement.one(ext, group), "columns do not sum to 1"
    for i in range(len(cols)):
        for j in range(i + 1, len(cols)):
            assert (cols[i] * cols[j]).is_zero(), f"columns {i},{j} not orthogonal"


def dimension_via_indicator(
    ind: IndicatorData, e: AlgebraElement
) -> tuple[int, tuple[FieldElement, ...]]:
    """(dim(Re), D(e)): the weight of the indicator image of an idempotent."""
    if e.group.table != ind.group.table:
        raise ValueError("element does not live on the indicator's group")
    if not e.is_idempotent():
        raise NotIdempotent("the indicator dimension rule needs an idempotent")
    embedded = tuple(ind.splitting.embed(c) for c in e.coeffs)
    image = ind.d_matrix.apply(embedded)
    dim = sum(1 for c in image if c)
    return dim, image


def dimension_semisimple_abelian(b: AlgebraElement) -> int:
    """|G| - (multiplicity of 0 in the characteristic polynomial); exact in
    the semisimple abelian case for any nonzero b."""
    _require_semisimple_abelian(b.group, b.field)
    if b.is_zero():
        raise ZeroElement("the zero element generates the zero ideal")
    p_b = b.right_regular_matrix().char_poly()
    return b.group.order - x_multiplicity(p_b)


def frobenius_orbit_idempotents(
    ind: IndicatorData,
) -> list[tuple[AlgebraElement, int]]:
    """Primitive idempotents of the base-field algebra with their dimensions.

    Columns of A fall into orbits under the coefficient-wise q-power map;
    each orbit sums to a vector with base-field coefficients (checked), and
    those sums are exactly the primitive idempotents over the base field.
    Returns (idempotent, orbit size) pairs.
    """
    ext = ind.splitting.ext
    base = ind.splitting.base
    q = base.order
    ncols = ind.a_matrix.ncols
    columns = [ind.a_matrix.column(j) for j in range(ncols)]
    index = {col: j for j, col in enumerate(columns)}
    out = []
    seen = [False] * ncols
    for start in range(ncols):
        if seen[start]:
            continue
        orbit = [start]
        seen[start] = True
        cur = tuple(c**q for c in columns[start])
        while cur != columns[start]:
            j = index[cur]
            orbit.append(j)
            seen[j] = True
            cur = tuple(c**q for c in cur)
        total = [ext.zero()] * len(columns[0])
        for j in orbit:
            total = [x + y for x, y in zip(total, columns[j])]
        descended = [ind.splitting.descend(c) for c in total]
        e = AlgebraElement(base, ind.group, descended)
        assert e.is_idempotent()
        out.append((e, len(orbit)))
    return out
