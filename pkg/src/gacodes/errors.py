"""Error taxonomy shared by every module.

Each error carries a stable ``code`` (its class name) that the CLI maps to an
exit status: parse errors exit 1, every other domain error exits 2.
"""

from __future__ import annotations


class GroupAlgebraError(Exception):
    """Base class for all domain errors raised by this package."""

    @property
    def code(self) -> str:
        return type(self).__name__


# --- parsing ---------------------------------------------------------------


class ParseError(GroupAlgebraError):
    """Malformed input text; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownGenerator(ParseError):
    pass


# --- finite fields ----------------------------------------------------------


class NonPrimeCharacteristic(GroupAlgebraError):
    pass


class ReducibleModulus(GroupAlgebraError):
    """The supplied modulus factors; ``factor`` is one nontrivial factor."""

    def __init__(self, message: str, factor=None):
        super().__init__(message)
        self.factor = factor


class ZeroInversion(GroupAlgebraError):
    pass


class MixedFields(GroupAlgebraError):
    pass


class ZeroElement(GroupAlgebraError):
    pass


# --- polynomials ------------------------------------------------------------


class BothZero(GroupAlgebraError):
    pass


class ZeroPolynomial(GroupAlgebraError):
    pass


# --- matrices ---------------------------------------------------------------


class NonSquare(GroupAlgebraError):
    pass


class Singular(GroupAlgebraError):
    pass


# --- groups -----------------------------------------------------------------


class ClosureCapExceeded(GroupAlgebraError):
    pass


class BadOverride(GroupAlgebraError):
    pass


# --- group algebra ----------------------------------------------------------


class MixedAlgebras(GroupAlgebraError):
    pass


# --- ideal dimensions -------------------------------------------------------


class NotApplicable(GroupAlgebraError):
    pass


class UnitElement(GroupAlgebraError):
    pass


class NotProjective(GroupAlgebraError):
    pass


class NotCoprime(GroupAlgebraError):
    pass


class NotAnnihilating(GroupAlgebraError):
    pass


# --- abelian codes ----------------------------------------------------------


class NonAbelian(GroupAlgebraError):
    pass


class NotSemisimple(GroupAlgebraError):
    pass


class EmptyY(GroupAlgebraError):
    pass


class BadRootCount(GroupAlgebraError):
    pass


class NotIdempotent(GroupAlgebraError):
    pass


# --- code analysis ----------------------------------------------------------


class EmptyBasis(GroupAlgebraError):
    pass
