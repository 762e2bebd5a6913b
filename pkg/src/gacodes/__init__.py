"""Exact group-algebra computations: principal-ideal dimensions, abelian-code
indicators, and MDS/ECD group-code analysis over small finite fields."""

from .fields import FieldElement, FieldSpec, field_make, parse_field_literal, parse_field_spec

__all__ = [
    "FieldElement",
    "FieldSpec",
    "field_make",
    "parse_field_literal",
    "parse_field_spec",
]

__version__ = "0.1.0"
