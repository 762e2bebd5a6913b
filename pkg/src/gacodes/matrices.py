"""Exact dense linear algebra over a FieldSpec.

No floating point anywhere; elimination uses the fixed first-nonzero pivot
rule so echelon forms (and the code bases built from them) are canonical.
"""

from __future__ import annotations

from typing import Iterable, Optional, Sequence

from .errors import NonSquare, Singular
from .fields import FieldElement, FieldSpec
from .polynomials import Polynomial, poly_lcm


class Matrix:
    """Immutable rectangular matrix of field elements."""

    __slots__ = ("spec", "rows", "nrows", "ncols")

    def __init__(self, spec: FieldSpec, rows: Iterable[Sequence[FieldElement]]):
        rs = tuple(tuple(row) for row in rows)
        if rs:
            width = len(rs[0])
            if any(len(r) != width for r in rs):
                raise ValueError("ragged rows")
        self.spec = spec
        self.rows = rs
        self.nrows = len(rs)
        self.ncols = len(rs[0]) if rs else 0

    # -- constructors --

    @classmethod
    def identity(cls, spec: FieldSpec, n: int) -> "Matrix":
        one, zero = spec.one(), spec.zero()
        return cls(spec, ((one if i == j else zero for j in range(n)) for i in range(n)))

    @classmethod
    def zero(cls, spec: FieldSpec, nrows: int, ncols: int) -> "Matrix":
        z = spec.zero()
        return cls(spec, ((z for _ in range(ncols)) for _ in range(nrows)))

    @classmethod
    def from_ints(cls, spec: FieldSpec, rows: Sequence[Sequence[int]]) -> "Matrix":
        return cls(spec, ((spec.from_int(x) for x in row) for row in rows))

    @classmethod
    def from_columns(cls, spec: FieldSpec, cols: Sequence[Sequence[FieldElement]]) -> "Matrix":
        if not cols:
            return cls(spec, ())
        n = len(cols[0])
        return cls(spec, ((col[i] for col in cols) for i in range(n)))

    # -- basics --

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.spec == other.spec
            and self.rows == other.rows
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def entry(self, i: int, j: int) -> FieldElement:
        return self.rows[i][j]

    def column(self, j: int) -> tuple[FieldElement, ...]:
        return tuple(row[j] for row in self.rows)

    def transpose(self) -> "Matrix":
        return Matrix(self.spec, zip(*self.rows)) if self.rows else self

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def __add__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            self.spec,
            ((a + b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return Matrix(
            self.spec,
            ((a - b for a, b in zip(r1, r2)) for r1, r2 in zip(self.rows, other.rows)),
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.ncols != other.nrows:
                raise ValueError("dimension mismatch")
            cols = other.transpose().rows
            zero = self.spec.zero()
            out = []
            for row in self.rows:
                out_row = []
                for col in cols:
                    acc = zero
                    for a, b in zip(row, col):
                        if a:
                            acc = acc + a * b
                    out_row.append(acc)
                out.append(out_row)
            return Matrix(self.spec, out)
        if isinstance(other, FieldElement):
            return Matrix(self.spec, ((a * other for a in row) for row in self.rows))
        return NotImplemented

    def apply(self, vec: Sequence[FieldElement]) -> tuple[FieldElement, ...]:
        """Matrix-vector product (vec as a column)."""
        zero = self.spec.zero()
        out = []
        for row in self.rows:
            acc = zero
            for a, b in zip(row, vec):
                if a and b:
                    acc = acc + a * b
            out.append(acc)
        return tuple(out)

    def power(self, e: int) -> "Matrix":
        if not self.is_square():
            raise NonSquare("powers need a square matrix")
        if e < 0:
            raise ValueError("negative matrix powers not supported")
        result = Matrix.identity(self.spec, self.nrows)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def stack(self, other: "Matrix") -> "Matrix":
        """Vertical concatenation."""
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return Matrix(self.spec, self.rows + other.rows)

    # -- elimination --

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form with the first-nonzero pivot rule."""
        rows = [list(r) for r in self.rows]
        m, n = self.nrows, self.ncols
        pivots: list[int] = []
        r = 0
        for c in range(n):
            if r >= m:
                break
            pivot = None
            for i in range(r, m):
                if rows[i][c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[r], rows[pivot] = rows[pivot], rows[r]
            inv = rows[r][c].inverse()
            rows[r] = [x * inv for x in rows[r]]
            for i in range(m):
                if i != r and rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        return Matrix(self.spec, rows), tuple(pivots)

    def rank(self) -> int:
        rows = [list(r) for r in self.rows]
        m, n = self.nrows, self.ncols
        rank = 0
        for c in range(n):
            if rank >= m:
                break
            pivot = None
            for i in range(rank, m):
                if rows[i][c]:
                    pivot = i
                    break
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            inv = rows[rank][c].inverse()
            prow = [x * inv for x in rows[rank]]
            rows[rank] = prow
            for i in range(rank + 1, m):
                if rows[i][c]:
                    factor = rows[i][c]
                    rows[i] = [x - factor * y for x, y in zip(rows[i], prow)]
            rank += 1
        return rank

    def kernel_dim(self) -> int:
        return self.ncols - self.rank()

    def kernel_dim_of_power(self, e: int) -> int:
        if e < 1:
            raise ValueError("power must be >= 1")
        return self.power(e).kernel_dim()

    def trace(self) -> FieldElement:
        if not self.is_square():
            raise NonSquare("trace needs a square matrix")
        acc = self.spec.zero()
        for i in range(self.nrows):
            acc = acc + self.rows[i][i]
        return acc

    def invert(self) -> "Matrix":
        if not self.is_square():
            raise NonSquare("inverse needs a square matrix")
        n = self.nrows
        aug = Matrix(
            self.spec,
            (tuple(row) + tuple(Matrix.identity(self.spec, n).rows[i]) for i, row in enumerate(self.rows)),
        )
        reduced, pivots = aug.rref()
        if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) < n:
            raise Singular("matrix is singular")
        return Matrix(self.spec, (row[n:] for row in reduced.rows))

    # -- invariants of the endomorphism --

    def char_poly(self) -> Polynomial:
        """det(xI - M), exact, via similarity reduction to Hessenberg form."""
        if not self.is_square():
            raise NonSquare("characteristic polynomial needs a square matrix")
        spec = self.spec
        n = self.nrows
        h = [list(r) for r in self.rows]
        for j in range(n - 2):
            pivot = None
            for i in range(j + 1, n):
                if h[i][j]:
                    pivot = i
                    break
            if pivot is None:
                continue
            if pivot != j + 1:
                h[j + 1], h[pivot] = h[pivot], h[j + 1]
                for row in h:
                    row[j + 1], row[pivot] = row[pivot], row[j + 1]
            inv = h[j + 1][j].inverse()
            for i in range(j + 2, n):
                if h[i][j]:
                    t = h[i][j] * inv
                    h[i] = [x - t * y for x, y in zip(h[i], h[j + 1])]
                    for row in h:
                        row[j + 1] = row[j + 1] + t * row[i]
        # Leading-minor recurrence for det(xI - H), H upper Hessenberg.
        ps: list[Polynomial] = [Polynomial.one(spec)]
        x = Polynomial.x(spec)
        for m in range(1, n + 1):
            term = (x - Polynomial.constant(h[m - 1][m - 1])) * ps[m - 1]
            subdiag = spec.one()
            for i in range(1, m):
                subdiag = subdiag * h[m - i][m - i - 1]
                coeff = h[m - 1 - i][m - 1] * subdiag
                if coeff:
                    term = term - Polynomial.constant(coeff) * ps[m - 1 - i]
            ps.append(term)
        return ps[n]

    def min_poly(self) -> Polynomial:
        """Least-degree monic annihilator: the lcm over standard basis vectors
        of each Krylov sequence's minimal polynomial. Divisibility into the
        characteristic polynomial is verified."""
        if not self.is_square():
            raise NonSquare("minimal polynomial needs a square matrix")
        spec = self.spec
        n = self.nrows
        zero, one = spec.zero(), spec.one()
        result = Polynomial.one(spec)
        for start in range(n):
            v = tuple(one if i == start else zero for i in range(n))
            # echelon rows: (vector, representation over Krylov powers)
            echelon: list[tuple[list[FieldElement], list[FieldElement]]] = []
            power = 0
            cur = list(v)
            rep = [one]
            while True:
                vec = cur[:]
                combo = rep[:]
                for evec, erep in echelon:
                    pivot_idx = next(i for i, x in enumerate(evec) if x)
                    if vec[pivot_idx]:
                        factor = vec[pivot_idx]
                        vec = [x - factor * y for x, y in zip(vec, evec)]
                        combo = [
                            a - factor * b
                            for a, b in zip(
                                combo + [zero] * (len(erep) - len(combo)),
                                erep + [zero] * (len(combo) - len(erep)),
                            )
                        ]
                if not any(vec):
                    # combo gives a dependency: local minimal polynomial
                    local = Polynomial(spec, combo)
                    result = poly_lcm(result, local.monic())
                    break
                inv = next(x for x in vec if x).inverse()
                echelon.append(([x * inv for x in vec], [c * inv for c in combo]))
                power += 1
                cur = list(self.apply(cur))
                rep = [zero] * power + [one]
            if result.degree == n:
                break
        char = self.char_poly()
        if not (char % result).is_zero():
            raise AssertionError("minimal polynomial does not divide char poly")
        return result

    # -- text / JSON --

    def literal_rows(self) -> list[list[str]]:
        return [[c.literal() for c in row] for row in self.rows]

    def __repr__(self) -> str:
        body = "; ".join(" ".join(c.literal() for c in row) for row in self.rows)
        return f"[{body}]"

    def pretty(self) -> str:
        lits = self.literal_rows()
        widths = [max(len(lits[i][j]) for i in range(self.nrows)) for j in range(self.ncols)]
        lines = []
        for row in lits:
            lines.append("[ " + "  ".join(x.rjust(w) for x, w in zip(row, widths)) + " ]")
        return "\n".join(lines)
