"""Exception hierarchy shared by every module in the package."""


class HyperfactError(Exception):
    """Base class for all library errors."""


class InvalidSpec(HyperfactError, ValueError):
    """A series specification is not a valid terminating series."""


class PoleInRHS(HyperfactError, ZeroDivisionError):
    """A closed-form right-hand side has a vanishing denominator."""


class PoleInNormalization(HyperfactError, ZeroDivisionError):
    """The monic normalization constant of a polynomial family vanishes."""


class FactorizationMismatch(HyperfactError, ArithmeticError):
    """Expanding a factorization did not reproduce the original polynomial."""


class ZeroCheckFailed(HyperfactError, ArithmeticError):
    """A claimed zero does not annihilate the polynomial."""
