"""Independent reference computations used by the tests.

Everything here works with plain lists of Fractions at a numeric point u0,
or with Python integers mod p^M, and shares no code with the package.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import factorial


def _mul(a, b, T):
    out = [Fraction(0)] * T
    for i, x in enumerate(a[:T]):
        if x:
            for j, y in enumerate(b[: T - i]):
                out[i + j] += x * y
    return out


def _inv(a, T):
    out = [Fraction(0)] * T
    out[0] = 1 / Fraction(a[0])
    for n in range(1, T):
        out[n] = -sum(a[k] * out[n - k] for k in range(1, min(n, len(a) - 1) + 1)) * out[0]
    return out


def _exp(c, T):
    c = Fraction(c)
    return [c**k / factorial(k) for k in range(T)]


def weighted_point(n_max: int, u0, weights, w=0) -> list[Fraction]:
    """egf coefficients of (1-u0)^r e^{wt} / prod_j (e^{a_j t} - u0), times n!."""
    u0 = Fraction(u0)
    T = n_max + 1
    acc = _exp(w, T)
    for a in weights:
        den = _exp(a, T)
        den[0] -= u0
        acc = _mul(acc, [(1 - u0) * c for c in _inv(den, T)], T)
    return [acc[n] * factorial(n) for n in range(T)]


def frobenius_point(n_max: int, u0, r: int = 1, x=0) -> list[Fraction]:
    return weighted_point(n_max, u0, (1,) * r, x)


def twisted_point(n_max: int, u0, r: int, d: int, sign) -> list[Fraction]:
    """Real-character twist: (1-u0^d)^r sum chi(s) u0^{rd-s} e^{st} / (e^{dt}-u0^d)^r."""
    u0 = Fraction(u0)
    T = n_max + 1
    den = _exp(d, T)
    den[0] -= u0**d
    inv = _inv(den, T)
    inv_r = [Fraction(1)] + [Fraction(0)] * (T - 1)
    for _ in range(r):
        inv_r = _mul(inv_r, inv, T)
    num = [Fraction(0)] * T
    for tup in product(range(d), repeat=r):
        s = sum(tup)
        c = sign(s)
        if c:
            e = _exp(s, T)
            for k in range(T):
                num[k] += c * u0 ** (r * d - s) * e[k]
    out = _mul(num, inv_r, T)
    return [(1 - u0**d) ** r * out[n] * factorial(n) for n in range(T)]


def residue(x, p: int, M: int) -> int:
    x = Fraction(x)
    q = p**M
    return x.numerator * pow(x.denominator, -1, q) % q


def brute_riemann(g, u: int, p: int, level_modulus: int, r: int, M: int, keep=None) -> int:
    """sum over x in [0, P)^r of g(sum x) prod u^(P-x_j) / (1-u^P)^r, mod p^M, by enumeration."""
    q = p**M
    P = level_modulus
    ui = pow(u, -1, q)
    total = 0
    for xs in product(range(P), repeat=r):
        s = sum(xs)
        if keep is not None and not keep(s):
            continue
        w = 1
        for x in xs:
            w = w * pow(u, P, q) * pow(ui, x, q) % q
        total += g(s) * w
    den = pow(1 - pow(u, P, q), r, q)
    return total * pow(den, -1, q) % q


def valuation(x: int, p: int, cap: int) -> int:
    if x == 0:
        return cap
    v = 0
    while x % p == 0 and v < cap:
        x //= p
        v += 1
    return v
