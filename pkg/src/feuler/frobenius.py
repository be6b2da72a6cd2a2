"""Frobenius-Euler numbers and polynomials, plain, of higher order, weighted and
character-twisted, as exact rational functions of u.

Most quantities are computed along two independent routes (a recurrence or
umbral expansion, and generating-series division); functions that compute
both raise :class:`ConsistencyError` on disagreement.

The recurrence helpers (:func:`frobenius_numbers`, :func:`order_r_numbers`,
:func:`umbral_sequence`) are generic in the ring that ``u`` lives in, so the
same code evaluates symbolically (u an indeterminate), at a rational point,
or p-adically.
"""

from __future__ import annotations

import threading
from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb
from typing import Sequence

from .characters import DirichletCharacter
from .errors import ConsistencyError, InvalidInputError
from .exact_arith import ONE, U, CycloElem, URational, render, urat_sum
from .power_series import (
    Series,
    constant_series,
    default_truncation,
    egf_coeff,
    ps_exp_linear,
    ps_inv,
    ps_mul,
)


# ----------------------------------------------------------------------------
# Ring-generic recurrences

def frobenius_numbers(n_max: int, u) -> list:
    """H_0(u), ..., H_{n_max}(u) from (1-u) H_n = -sum_{k<n} C(n,k) H_k."""
    one = u ** 0
    inv = one / (one - u)
    h = [one]
    for n in range(1, n_max + 1):
        acc = h[0]
        for k in range(1, n):
            acc = acc + comb(n, k) * h[k]
        h.append(-(acc * inv))
    return h


def order_r_numbers(h: Sequence, r: int) -> list:
    """H^{(r)}_n for n < len(h): the r-fold binomial convolution of ``h``."""
    if r < 1:
        raise InvalidInputError("order r must be >= 1")
    cur = list(h)
    for _ in range(r - 1):
        cur = [
            _sum(comb(n, k) * (cur[k] * h[n - k]) for k in range(n + 1))
            for n in range(len(h))
        ]
    return cur


def umbral_sequence(h: Sequence, weights: Sequence[int]) -> list:
    """A_l = (H(u)k_1 + ... + H(u)k_r)^l for l < len(h), nested-binomial form.

    The innermost factor carries k_1 and each outer binomial sum peels off
    one more weight, ending with k_r.
    """
    if not weights:
        raise InvalidInputError("at least one weight is required")
    L = len(h)
    k1 = weights[0]
    acc = [h[l] * (k1 ** l) for l in range(L)]
    for k in weights[1:]:
        acc = [
            _sum(comb(l, l1) * (h[l1] * (k ** l1)) * acc[l - l1] for l1 in range(l + 1))
            for l in range(L)
        ]
    return acc


def shifted_sum(values: Sequence, n: int, shift):
    """sum_{l<=n} C(n,l) values[l] shift^{n-l} (binomial shift by ``shift``)."""
    return _sum(comb(n, l) * values[l] * (shift ** (n - l)) for l in range(n + 1))


def _sum(it):
    it = iter(it)
    acc = next(it)
    for x in it:
        acc = acc + x
    return acc


# ----------------------------------------------------------------------------
# Memoized symbolic table

class HTable:
    """Memo of H_n^{(r)}(u) keyed by (n, r).

    Reads are lock-free; each missing entry is computed and stored under a
    lock.  A miss recomputes from the same recurrences a hit would have used,
    so the cache is semantically invisible.
    """

    def __init__(self):
        self._entries: dict[tuple[int, int], URational] = {}
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._entries)

    def clear(self) -> None:
        with self._lock:
            self._entries.clear()

    def get(self, n: int, r: int = 1) -> URational:
        if n < 0 or r < 1:
            raise InvalidInputError(f"need n >= 0 and r >= 1, got n={n}, r={r}")
        hit = self._entries.get((n, r))
        if hit is not None:
            return hit
        if r == 1:
            value = self._order_one(n)
        else:
            value = urat_sum(
                comb(n, k) * (self.get(k, r - 1) * self.get(n - k, 1)) for k in range(n + 1)
            )
        with self._lock:
            return self._entries.setdefault((n, r), value)

    def _order_one(self, n: int) -> URational:
        if n == 0:
            return ONE
        prev = [self.get(k, 1) for k in range(n)]
        acc = urat_sum(comb(n, k) * prev[k] for k in range(n))
        return -acc / (1 - U)

    def export(self) -> dict[str, str]:
        """JSON-ready mapping ``"H(n,r)" -> rendered value`` in (r, n) order."""
        return {f"H({n},{r})": render(v) for (n, r), v in sorted(self._entries.items(),
                                                               key=lambda kv: (kv[0][1], kv[0][0]))}


TABLE = HTable()


def fe_number(n: int) -> URational:
    """The Frobenius-Euler number H_n(u)."""
    return TABLE.get(n, 1)


def fe_number_r(n: int, r: int) -> URational:
    """H_n^{(r)}(u), the coefficients of ((1-u)/(e^t-u))^r."""
    return TABLE.get(n, r)


@lru_cache(maxsize=4096)
def fe_poly(n: int, r: int, x) -> URational:
    """H_n^{(r)}(u, x) = sum_i C(n,i) H_i^{(r)}(u) x^{n-i}."""
    x = Fraction(x)
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    return urat_sum(comb(n, i) * fe_number_r(i, r) * (x ** (n - i)) for i in range(n + 1))


def umbral_A(l: int, weights: Sequence[int]) -> URational:
    """A_l for the given weights."""
    if l < 0:
        raise InvalidInputError("l must be >= 0")
    h = [fe_number(k) for k in range(l + 1)]
    return umbral_sequence(h, _check_weights(weights))[l]


def umbral_table(l_max: int, weights: Sequence[int]) -> list[URational]:
    h = [fe_number(k) for k in range(l_max + 1)]
    return umbral_sequence(h, _check_weights(weights))


def _check_weights(weights: Sequence[int]) -> tuple[int, ...]:
    ws = tuple(weights)
    if not ws:
        raise InvalidInputError("weights must be non-empty")
    for a in ws:
        if not isinstance(a, int) or a == 0:
            raise InvalidInputError(f"weights must be nonzero integers, got {a!r}")
    return ws


@lru_cache(maxsize=256)
def _weighted_kernel(weights: tuple[int, ...], T: int) -> Series:
    """prod_j (1-u)/(e^{a_j t} - u) truncated at T."""
    kernel = constant_series(ONE, T)
    for a in weights:
        factor = ps_exp_linear(URational.const(a), T) - U
        kernel = ps_mul(kernel, ps_inv(factor) * (1 - U))
    return kernel


def fe_weighted_series(n: int, w, weights: Sequence[int]) -> URational:
    ws = _check_weights(weights)
    T = default_truncation(n)
    gen = ps_mul(_weighted_kernel(ws, T), ps_exp_linear(URational.const(Fraction(w)), T))
    return egf_coeff(gen, n)


def fe_weighted_umbral(n: int, w, weights: Sequence[int]) -> URational:
    return urat_sum(
        comb(n, l) * a_l * (Fraction(w) ** (n - l))
        for l, a_l in enumerate(umbral_table(n, weights))
    )


def fe_weighted(n: int, r: int, w, weights: Sequence[int]) -> URational:
    """H_n^{(r)}(w, u | a_1..a_r), checked along the series and umbral routes."""
    ws = _check_weights(weights)
    if len(ws) != r:
        raise InvalidInputError(f"expected {r} weights, got {len(ws)}")
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    via_series = fe_weighted_series(n, w, ws)
    via_umbral = fe_weighted_umbral(n, w, ws)
    if via_series != via_umbral:
        raise ConsistencyError(
            f"weighted value disagrees between routes at n={n}, w={w}, weights={ws}"
        )
    return via_series


# ----------------------------------------------------------------------------
# Character twists

def _twisted_terms(r: int, chi: DirichletCharacter):
    """Yield (zeta exponent, sum of n_i) over all tuples in [0, d)^r with chi != 0."""
    d = chi.modulus
    for tup in product(range(d), repeat=r):
        s = sum(tup)
        k = chi.exponent(s)
        if k is not None:
            yield k, s


def _assemble(order: int, parts: dict[int, URational]) -> CycloElem:
    coords = [URational.const(0)] * order
    for k, v in parts.items():
        coords[k] = coords[k] + v
    return CycloElem(order, coords)


def fe_gen_chi(n: int, r: int, chi: DirichletCharacter) -> CycloElem:
    """H_{n,chi}^{(r)}(u) from the finite closed sum over [0, d)^r.

    Each summand is d^n chi(s) u^{rd-s} H_n^{(r)}(u^d, s/d).  The power
    u^{rd-s} is kept literally, so the trivial character gives u^r H_n^{(r)}(u).
    """
    if n < 0 or r < 1:
        raise InvalidInputError("need n >= 0 and r >= 1")
    d = chi.modulus
    parts: dict[int, list[URational]] = {}
    for k, s in _twisted_terms(r, chi):
        shifted = fe_poly(n, r, Fraction(s, d)).subst_power(d)
        parts.setdefault(k, []).append(shifted * U ** (r * d - s))
    scale = d ** n
    return _assemble(chi.order, {k: urat_sum(v) * scale for k, v in parts.items()})


def fe_gen_chi_series(n: int, r: int, chi: DirichletCharacter) -> CycloElem:
    """H_{n,chi}^{(r)}(u) read off the generating function by series division.

    Generating function: (1-u^d)^r sum_tuples chi(s) u^{rd-s} e^{st} / (e^{dt}-u^d)^r.
    """
    d = chi.modulus
    T = default_truncation(n)
    ud = U ** d
    denom = ps_exp_linear(URational.const(d), T) - ud
    inv_r = ps_inv(denom) ** r
    lead = (1 - ud) ** r
    numer_parts: dict[int, Series] = {}
    for k, s in _twisted_terms(r, chi):
        term = ps_exp_linear(URational.const(s), T) * (U ** (r * d - s))
        numer_parts[k] = numer_parts[k] + term if k in numer_parts else term
    return _assemble(
        chi.order,
        {k: egf_coeff(ps_mul(num, inv_r), n) * lead for k, num in numer_parts.items()},
    )


# ----------------------------------------------------------------------------
# Identity checks

def check_reflection(n: int, r: int, x) -> bool:
    """H_n^{(r)}(u, r-x) == (-1)^n H_n^{(r)}(1/u, x)."""
    x = Fraction(x)
    lhs = fe_poly(n, r, r - x)
    rhs = fe_poly(n, r, x).subst_inv() * (-1) ** n
    return lhs == rhs


def distribution_sides(n: int, r: int, p: int, x=0) -> tuple[URational, URational]:
    """Both sides of the order-r distribution relation at modulus p."""
    if p < 2:
        raise InvalidInputError("p must be >= 2")
    x = Fraction(x)
    lhs = (U / (U - 1)) ** r * fe_poly(n, r, x)
    counts = Counter(sum(t) for t in product(range(p), repeat=r))
    base = ((U ** p) - 1) ** (-r)
    terms = []
    for s, c in sorted(counts.items()):
        shifted = fe_poly(n, r, (s + x) / p).subst_power(p)
        terms.append(c * (U ** (r * p - s)) * base * shifted)
    rhs = urat_sum(terms) * (p ** n)
    return lhs, rhs


def check_distribution(n: int, r: int, p: int, x=0) -> bool:
    lhs, rhs = distribution_sides(n, r, p, x)
    return lhs == rhs
