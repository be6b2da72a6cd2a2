"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class FEulerError(Exception):
    """Base class for every error raised by this package."""


class InvalidInputError(FEulerError, ValueError):
    pass


class PoleError(FEulerError, ZeroDivisionError):
    """A rational function was evaluated at a root of its denominator."""

    def __init__(self, point, message: str | None = None):
        self.point = point
        super().__init__(message or f"pole at u = {point}")


class NonInvertibleError(FEulerError, ZeroDivisionError):
    pass


class TruncationError(FEulerError, ValueError):
    pass


class ConsistencyError(FEulerError, RuntimeError):
    """Two independent computation routes disagreed."""


class DivergenceError(FEulerError, ValueError):
    pass


class SingularTermError(FEulerError, ZeroDivisionError):
    pass


class InvalidUError(InvalidInputError):
    """u is not a p-adic unit with u != 1 (mod p)."""


class UnsupportedCharacterError(InvalidInputError):
    pass


class InvalidInstanceError(InvalidInputError):
    pass


class NotIntegralError(FEulerError, ArithmeticError):
    """A p-adic quotient has negative valuation."""
