"""Truncated power series in t over a generic coefficient field.

Coefficients are stored plainly (``c_n`` of ``sum c_n t^n``), not as
exponential-generating-function values; :func:`egf_coeff` multiplies by n!.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Any, Sequence

from .errors import NonInvertibleError, TruncationError


def default_truncation(n_max: int) -> int:
    # Two guard coefficients beyond the largest index read.
    return n_max + 2


@dataclass(frozen=True)
class Series:
    coeffs: tuple

    def __init__(self, coeffs: Sequence[Any]):
        if not coeffs:
            raise TruncationError("a series needs at least its constant term")
        object.__setattr__(self, "coeffs", tuple(coeffs))

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int):
        return self.coeffs[n]

    def truncate(self, T: int) -> "Series":
        return Series(self.coeffs[: T + 1])

    def __add__(self, other) -> "Series":
        if isinstance(other, Series):
            T = min(self.truncation, other.truncation)
            return Series([a + b for a, b in zip(self.coeffs[: T + 1], other.coeffs)])
        return Series([self.coeffs[0] + other, *self.coeffs[1:]])

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs])

    def __sub__(self, other) -> "Series":
        return self + (-other)

    def __rsub__(self, other) -> "Series":
        return (-self) + other

    def __mul__(self, other) -> "Series":
        if isinstance(other, Series):
            return ps_mul(self, other)
        return Series([c * other for c in self.coeffs])

    def __rmul__(self, other) -> "Series":
        if isinstance(other, Series):
            return ps_mul(other, self)
        return Series([other * c for c in self.coeffs])

    def __pow__(self, k: int) -> "Series":
        if k < 0:
            return ps_inv(self) ** (-k)
        if k == 0:
            return constant_series(self.coeffs[0] ** 0, self.truncation)
        result = self
        for _ in range(k - 1):
            result = ps_mul(result, self)
        return result


def ps_mul(a: Series, b: Series) -> Series:
    """Cauchy product truncated at the smaller of the two orders."""
    T = min(a.truncation, b.truncation)
    ca, cb = a.coeffs, b.coeffs
    out = []
    for n in range(T + 1):
        acc = ca[0] * cb[n]
        for i in range(1, n + 1):
            acc = acc + ca[i] * cb[n - i]
        out.append(acc)
    return Series(out)


def ps_inv(a: Series) -> Series:
    """Multiplicative inverse by forward substitution."""
    c0 = a.coeffs[0]
    if c0 == 0:
        raise NonInvertibleError("constant term is zero")
    inv0 = 1 / c0
    out = [inv0]
    for n in range(1, a.truncation + 1):
        acc = a.coeffs[1] * out[n - 1]
        for k in range(2, n + 1):
            acc = acc + a.coeffs[k] * out[n - k]
        out.append(-(acc * inv0))
    return Series(out)


def ps_exp_linear(a, T: int) -> Series:
    """The series of e^{a t}: coefficients a^n / n!."""
    out = []
    power = a ** 0
    for n in range(T + 1):
        out.append(power * Fraction(1, factorial(n)))
        power = power * a
    return Series(out)


def egf_coeff(a: Series, n: int):
    """n! times the t^n coefficient."""
    if n < 0 or n > a.truncation:
        raise TruncationError(f"index {n} beyond truncation {a.truncation}")
    return a.coeffs[n] * factorial(n)


def constant_series(c, T: int) -> Series:
    return Series([c] + [c * 0] * T)
