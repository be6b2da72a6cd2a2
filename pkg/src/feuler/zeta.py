"""Truncated evaluation of Euler multiple and Euler-Barnes multiple zeta sums,
with rigorous tail bounds, plus exact values at negative integers.

The tail bound for a box truncation [0, M)^r uses that every discarded tuple
has coordinate sum nu >= M, there are at most C(nu+r-1, r-1) of them for
each nu, and each term is bounded by |u|^-nu * g(nu) where g bounds the
denominator power.  The resulting series in nu has term ratio at most rho
for nu >= M, giving tail <= t_M / (1 - rho).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Sequence

from .errors import DivergenceError, InvalidInputError, SingularTermError
from .exact_arith import U, URational
from .frobenius import fe_weighted

_EPS = 2.0 ** -52


@dataclass(frozen=True)
class TruncationPlan:
    terms_per_index: int
    tail_bound: float = math.inf


@dataclass(frozen=True)
class ZetaValue:
    value: float
    error: float  # tail bound plus a floating-point rounding allowance
    tail_bound: float = 0.0


def _validate(u: float, M: int) -> None:
    if not abs(u) > 1:
        raise DivergenceError(f"|u| = {abs(u)} <= 1: series diverges")
    if M < 1:
        raise InvalidInputError("terms_per_index must be >= 1")


def _tail_bound(s: float, a: float, kmin: int, kmax: int, u: float, r: int, M: int) -> float:
    """Bound on the sum over tuples outside [0, M)^r of |u|^-nu / |a + k.mu|^s."""
    q = 1.0 / abs(u)
    slope = kmin if s >= 0 else kmax
    base_M = a + slope * M
    if base_M <= 0:
        return math.inf
    t_M = math.comb(M + r - 1, r - 1) * q ** M * base_M ** (-s)
    rho = q * (M + r) / (M + 1)
    if s < 0:
        rho *= ((a + slope * (M + 1)) / base_M) ** (-s)
    if rho >= 1:
        return math.inf
    return t_M / (1 - rho)


def _box_sum(s: float, a: float, kbar: Sequence[int], u: float, M: int) -> tuple[float, float]:
    """Lexicographic sum over [0, M)^r; returns (value, sum of |terms|)."""
    r = len(kbar)
    geo = [u ** (-nu) for nu in range(r * (M - 1) + 1)]
    powers: dict[int, float] = {}

    def denom_power(j: int) -> float:
        # j = k.mu; the base a + j depends on mu only through j.
        if j not in powers:
            base = a + j
            if base == 0:
                if s > 0:
                    raise SingularTermError(f"zero denominator at k.mu = {j}")
                powers[j] = 1.0 if s == 0 else 0.0
            elif base < 0 and s != int(s):
                raise InvalidInputError("negative base with non-integer s")
            else:
                powers[j] = base ** (-s)
        return powers[j]

    if all(k == 1 for k in kbar):
        terms = [geo[nu] * denom_power(nu) for nu in map(sum, product(range(M), repeat=r))]
    else:
        terms = [
            geo[sum(mu)] * denom_power(sum(k * m for k, m in zip(kbar, mu)))
            for mu in product(range(M), repeat=r)
        ]
    return math.fsum(terms), math.fsum(map(abs, terms))


def _zeta_value(s, a, kbar, u, M) -> ZetaValue:
    value, mag = _box_sum(s, a, kbar, u, M)
    tail = _tail_bound(s, a, min(kbar), max(kbar), u, len(kbar), M)
    # Each term carries a few ulps from pow; fsum adds at most one more.
    rounding = 4 * _EPS * mag + _EPS * abs(value)
    return ZetaValue(value, tail + rounding, tail)


def barnes_trunc(s: float, alpha, kbar: Sequence[int], u: float, r: int,
                 plan: TruncationPlan | int) -> ZetaValue:
    """Truncated sum of u^-(mu_1+..+mu_r) / (alpha + k.mu)^s over [0, M)^r."""
    M = plan.terms_per_index if isinstance(plan, TruncationPlan) else int(plan)
    _validate(u, M)
    ks = tuple(kbar)
    if len(ks) != r or any(k <= 0 for k in ks):
        raise InvalidInputError("kbar must hold r positive integers")
    a = float(Fraction(alpha))
    if a <= 0:
        raise InvalidInputError("alpha must be positive")
    return _zeta_value(float(s), a, ks, float(u), M)


def mzeta_trunc(s: float, x, u: float, r: int, plan: TruncationPlan | int) -> ZetaValue:
    """Truncated Euler multiple zeta sum u^-(sum mu) / (sum mu + x)^s."""
    M = plan.terms_per_index if isinstance(plan, TruncationPlan) else int(plan)
    _validate(u, M)
    x = Fraction(x)
    if x == 0 and s > 0:
        raise SingularTermError("x = 0 makes the first term singular")
    if r < 1:
        raise InvalidInputError("r must be >= 1")
    return _zeta_value(float(s), float(x), (1,) * r, float(u), M)


def mzeta_grouped(s: float, x, u: float, r: int, terms: int) -> float:
    """The same series grouped by nu = sum mu with multiplicity C(nu+r-1, r-1),
    summed over 0 <= nu < terms (a simplex truncation)."""
    x = float(Fraction(x))
    return math.fsum(
        math.comb(nu + r - 1, r - 1) * float(u) ** (-nu) * (nu + x) ** (-s) for nu in range(terms)
    )


def zeta_from_one(s: float, u: float, r: int, plan: TruncationPlan | int) -> ZetaValue:
    """Truncated sum over n_i in [1, M] of u^-(sum n) / (sum n)^s."""
    M = plan.terms_per_index if isinstance(plan, TruncationPlan) else int(plan)
    _validate(u, M)
    terms = [float(u) ** (-sum(n)) * sum(n) ** (-float(s))
             for n in product(range(1, M + 1), repeat=r)]
    value, mag = math.fsum(terms), math.fsum(abs(t) for t in terms)
    # Shifting indices by one maps this onto the x = r sum times u^-r.
    tail = abs(float(u)) ** (-r) * _tail_bound(float(s), float(r), 1, 1, float(u), r, M)
    return ZetaValue(value, tail + 4 * _EPS * mag + _EPS * abs(value), tail)


def lemma2_sides(s: float, u: float, r: int, plan, exponent: int | None = None):
    """(zeta_r(u|s, r), u^exponent * zeta_r(u|s), combined error bound)."""
    e = -r if exponent is None else exponent
    a = mzeta_trunc(s, r, u, r, plan)
    b = zeta_from_one(s, u, r, plan)
    f = float(u) ** e
    return a.value, f * b.value, a.error + abs(f) * b.error


def check_lemma2(s: float, u: float, r: int, plan, *, exponent: int | None = None) -> bool:
    """|zeta_r(u|s, r) - u^e zeta_r(u|s)| <= 2 * combined bound, with e = -r by default.

    The index shift n_i = mu_i + 1 gives u^{+r}, so the default e = -r holds
    only when u^{2r} = 1; pass ``exponent=r`` for the shifted identity.
    """
    lhs, rhs, err = lemma2_sides(s, u, r, plan, exponent)
    return abs(lhs - rhs) <= 2 * err


def special_value(n: int, alpha, kbar: Sequence[int]) -> URational:
    """u^r/(u-1)^r H_n^{(r)}(alpha, u | kbar): the value at s = -n."""
    r = len(kbar)
    return (U / (U - 1)) ** r * fe_weighted(n, r, Fraction(alpha), tuple(kbar))
