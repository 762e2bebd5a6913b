"""Elements of a group algebra FG and their regular representations.

An element is a length-|G| coefficient vector in the group's declared element
order. Multiplication is convolution through the multiplication table; the
right regular matrix has column j equal to the coordinates of g_j * b, which
is the convention every rank-based dimension result here relies on.

Expression grammar for entering elements (see ``parse_element``)::

    element = ['-'] term (('+'|'-') term)*
    term    = factor ('*' factor)*
    factor  = INT | generator['^' INT] | 'a'['^' INT] | '(' field-expr ')' | '1'

``a`` denotes the extension-field generator when the field has one; a group
generator may not be called ``a`` in that case. ``*`` is mandatory between
factors; integer and parenthesized factors scale the term's coefficient.
"""

from __future__ import annotations

import random
from typing import Iterable, Sequence

from .errors import MixedAlgebras, ParseError, UnknownGenerator, ZeroElement
from .fields import FieldElement, FieldSpec, parse_field_literal
from .groups import Group
from .matrices import Matrix
from .parsing import parse_arithmetic
from .polynomials import Polynomial


class AlgebraElement:
    """Immutable element of FG; supports +, -, *, scalar mixing and **."""

    __slots__ = ("field", "group", "coeffs")

    def __init__(self, field: FieldSpec, group: Group, coeffs: Iterable[FieldElement]):
        cs = tuple(coeffs)
        if len(cs) != group.order:
            raise ValueError(f"expected {group.order} coefficients, got {len(cs)}")
        self.field = field
        self.group = group
        self.coeffs = cs

    # -- constructors --

    @classmethod
    def zero(cls, field: FieldSpec, group: Group) -> "AlgebraElement":
        z = field.zero()
        return cls(field, group, (z,) * group.order)

    @classmethod
    def one(cls, field: FieldSpec, group: Group) -> "AlgebraElement":
        z = field.zero()
        cs = [z] * group.order
        cs[group.identity] = field.one()
        return cls(field, group, cs)

    @classmethod
    def basis(cls, field: FieldSpec, group: Group, index: int) -> "AlgebraElement":
        z = field.zero()
        cs = [z] * group.order
        cs[index] = field.one()
        return cls(field, group, cs)

    @classmethod
    def from_ints(cls, field: FieldSpec, group: Group, ints: Sequence[int]) -> "AlgebraElement":
        return cls(field, group, (field.from_int(n) for n in ints))

    @classmethod
    def random(cls, field: FieldSpec, group: Group, rng: random.Random) -> "AlgebraElement":
        return cls(field, group, (field.random_element(rng) for _ in range(group.order)))

    # -- arithmetic --

    def _check(self, other: "AlgebraElement") -> None:
        if self.field != other.field or self.group.table != other.group.table:
            raise MixedAlgebras("elements live in different group algebras")

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(
            self.field, self.group, (a + b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        self._check(other)
        return AlgebraElement(
            self.field, self.group, (a - b for a, b in zip(self.coeffs, other.coeffs))
        )

    def __neg__(self) -> "AlgebraElement":
        return AlgebraElement(self.field, self.group, (-a for a in self.coeffs))

    def scale(self, c: FieldElement) -> "AlgebraElement":
        return AlgebraElement(self.field, self.group, (c * a for a in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            table = self.group.table
            zero = self.field.zero()
            out = [zero] * self.group.order
            for i, a in enumerate(self.coeffs):
                if not a:
                    continue
                row = table[i]
                for j, b in enumerate(other.coeffs):
                    if b:
                        k = row[j]
                        out[k] = out[k] + a * b
            return AlgebraElement(self.field, self.group, out)
        if isinstance(other, FieldElement):
            return self.scale(other)
        if isinstance(other, int):
            return self.scale(self.field.from_int(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(
                other if isinstance(other, FieldElement) else self.field.from_int(other)
            )
        return NotImplemented

    def __pow__(self, e: int) -> "AlgebraElement":
        if e < 0:
            return self.inverse_monomial() ** (-e)
        result = AlgebraElement.one(self.field, self.group)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse_monomial(self) -> "AlgebraElement":
        """Inverse of a single-term element c*g; other shapes have no
        guaranteed inverse here."""
        support = [i for i, c in enumerate(self.coeffs) if c]
        if len(support) != 1:
            raise ValueError("only single-term elements can be inverted")
        idx = support[0]
        out = AlgebraElement.zero(self.field, self.group).coeffs_list()
        out[self.group.inverse(idx)] = self.coeffs[idx].inverse()
        return AlgebraElement(self.field, self.group, out)

    def coeffs_list(self) -> list[FieldElement]:
        return list(self.coeffs)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraElement)
            and self.field == other.field
            and self.group.table == other.group.table
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_idempotent(self) -> bool:
        return self * self == self

    # -- the quantities the dimension results consume --

    def star(self) -> "AlgebraElement":
        """Coefficient permutation by group inversion (an antiautomorphism)."""
        out = [self.field.zero()] * self.group.order
        for i, c in enumerate(self.coeffs):
            out[self.group.inverse(i)] = c
        return AlgebraElement(self.field, self.group, out)

    def lambda1(self) -> FieldElement:
        """Coefficient at the group identity."""
        return self.coeffs[self.group.identity]

    def weight(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def right_regular_matrix(self) -> Matrix:
        """Column j = coordinates of g_j * b."""
        cols = []
        table = self.group.table
        zero = self.field.zero()
        for j in range(self.group.order):
            col = [zero] * self.group.order
            row = table[j]
            for i, c in enumerate(self.coeffs):
                if c:
                    col[row[i]] = col[row[i]] + c
            cols.append(col)
        return Matrix.from_columns(self.field, cols)

    def left_regular_matrix(self) -> Matrix:
        """Column j = coordinates of b * g_j."""
        cols = []
        table = self.group.table
        zero = self.field.zero()
        for j in range(self.group.order):
            col = [zero] * self.group.order
            for i, c in enumerate(self.coeffs):
                if c:
                    k = table[i][j]
                    col[k] = col[k] + c
            cols.append(col)
        return Matrix.from_columns(self.field, cols)

    # -- text --

    def expression_text(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            lit = c.literal()
            word = self.group.label(i)
            if word == "1":
                terms.append(lit)
            elif lit == "1":
                terms.append(word)
            elif "+" in lit:
                terms.append(f"({lit})*{word}")
            else:
                terms.append(f"{lit}*{word}")
        return " + ".join(terms) if terms else "0"

    def vector_text(self) -> str:
        return ",".join(c.literal() for c in self.coeffs)

    def __repr__(self) -> str:
        return self.expression_text()


def ideal_dimension_rank(b: AlgebraElement) -> int:
    """Dimension of the principal ideal generated by b, as the rank of the
    right regular matrix (equal for left and right ideals)."""
    return b.right_regular_matrix().rank()


def evaluate_at_algebra(f: Polynomial, b: AlgebraElement) -> AlgebraElement:
    """Substitute b into f; the constant term contributes (constant) * 1."""
    acc = AlgebraElement.zero(b.field, b.group)
    for c in reversed(f.coeffs):
        acc = acc * b + AlgebraElement.one(b.field, b.group).scale(c)
    return acc


# --- parsing ---------------------------------------------------------------------


def parse_element(text: str, group: Group, field: FieldSpec) -> AlgebraElement:
    """Parse an element expression (or a comma-separated coefficient vector)."""
    if _looks_like_vector(text):
        return parse_coefficient_vector(text, group, field)
    shadowed = field.k > 1 and "a" in group.gen_names

    def resolve(name: str, pos: int):
        if name in group.gen_names:
            if shadowed and name == "a":
                raise ParseError(
                    "generator name 'a' conflicts with the field generator", pos
                )
            return AlgebraElement.basis(field, group, group.generator_index(name))
        if name == "a" and field.k > 1:
            return AlgebraElement.one(field, group).scale(field.gen())
        raise UnknownGenerator(f"unknown generator {name!r}", pos)

    def lift(n: int):
        return AlgebraElement.one(field, group).scale(field.from_int(n))

    value = parse_arithmetic(text, resolve, lift)
    if not isinstance(value, AlgebraElement):
        raise ParseError("expected an algebra element expression")
    return value


def _looks_like_vector(text: str) -> bool:
    return "," in text


def parse_coefficient_vector(text: str, group: Group, field: FieldSpec) -> AlgebraElement:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != group.order:
        raise ParseError(
            f"coefficient vector has {len(parts)} entries, group order is {group.order}"
        )
    return AlgebraElement(field, group, (parse_field_literal(p, field) for p in parts))
