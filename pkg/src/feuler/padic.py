"""Fixed-precision p-adic integers and truncated p-adic Euler integrals.

The Euler measure of a residue class ``x + P Z_p`` (P a level modulus) is
``u^(P-x) / (1 - u^P)``.  Every integral here is the exact finite Riemann sum
at a given level; convergence is judged by comparing levels, never assumed.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import comb
from typing import NamedTuple, Sequence

from .characters import DirichletCharacter
from .errors import (
    InvalidInputError,
    InvalidUError,
    NotIntegralError,
    PoleError,
    UnsupportedCharacterError,
)
from .exact_arith import U, URational, _integerize, urat_sum
from .frobenius import fe_gen_chi, fe_number, fe_number_r, fe_poly, fe_weighted


def guard_precision(N: int, n: int) -> int:
    """Working precision for level-N moments of degree n."""
    return N + n + 4


def _valuation_int(x: int, p: int, cap: int) -> int:
    if x == 0:
        return cap
    v = 0
    while v < cap and x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True, eq=False)
class PadicInt:
    """An element of Z_p known modulo p^precision."""

    p: int
    precision: int
    residue: int

    def __post_init__(self):
        if self.p < 2:
            raise InvalidInputError("p must be a prime >= 2")
        if self.precision < 0:
            raise InvalidInputError("precision must be >= 0")
        object.__setattr__(self, "residue", self.residue % self.modulus)

    @property
    def modulus(self) -> int:
        return self.p ** self.precision

    @classmethod
    def from_rational(cls, x, p: int, precision: int) -> "PadicInt":
        x = Fraction(x)
        if x.denominator % p == 0:
            raise NotIntegralError(f"{x} is not a {p}-adic integer")
        q = p ** precision
        return cls(p, precision, x.numerator * pow(x.denominator, -1, q) if q > 1 else 0)

    def _coerce(self, other) -> "PadicInt | None":
        if isinstance(other, PadicInt):
            if other.p != self.p:
                raise InvalidInputError(f"mixing {self.p}-adic and {other.p}-adic values")
            return other
        if isinstance(other, (int, Fraction)):
            return PadicInt.from_rational(other, self.p, self.precision)
        return None

    def valuation(self) -> int:
        """Largest v <= precision with p^v dividing the residue."""
        return _valuation_int(self.residue, self.p, self.precision)

    def is_unit(self) -> bool:
        return self.precision > 0 and self.residue % self.p != 0

    def with_precision(self, precision: int) -> "PadicInt":
        if precision > self.precision:
            raise InvalidInputError("cannot raise precision")
        return PadicInt(self.p, precision, self.residue)

    def digits(self) -> list[int]:
        """Base-p digits, least significant first, one per known digit."""
        out, x = [], self.residue
        for _ in range(self.precision):
            x, d = divmod(x, self.p)
            out.append(d)
        return out

    def __str__(self) -> str:
        return f"{self.residue} mod {self.p}^{self.precision}"

    def __repr__(self) -> str:
        return f"PadicInt(p={self.p}, precision={self.precision}, residue={self.residue})"

    def to_json(self) -> dict:
        return {"p": self.p, "M": self.precision, "residue": self.residue}

    def __eq__(self, other) -> bool:
        try:
            o = self._coerce(other)
        except (InvalidInputError, NotIntegralError):
            return False
        if o is None:
            return NotImplemented
        m = min(self.precision, o.precision)
        return (self.residue - o.residue) % (self.p ** m) == 0

    __hash__ = None  # type: ignore[assignment]

    def _binop(self, other, op) -> "PadicInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = min(self.precision, o.precision)
        return PadicInt(self.p, m, op(self.residue, o.residue))

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __neg__(self) -> "PadicInt":
        return PadicInt(self.p, self.precision, -self.residue)

    def inverse(self) -> "PadicInt":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a p-adic unit")
        return PadicInt(self.p, self.precision, pow(self.residue, -1, self.modulus))

    def __truediv__(self, other) -> "PadicInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _divide(self, o)

    def __rtruediv__(self, other) -> "PadicInt":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return _divide(o, self)

    def __pow__(self, k: int) -> "PadicInt":
        if k < 0:
            return self.inverse() ** (-k)
        return PadicInt(self.p, self.precision, pow(self.residue, k, self.modulus))


def _divide(a: PadicInt, b: PadicInt) -> PadicInt:
    """a / b; each factor of p removed from b costs one digit of precision."""
    m = min(a.precision, b.precision)
    v = _valuation_int(b.residue, b.p, m)
    if v >= m:
        raise ZeroDivisionError("division by a value indistinguishable from zero")
    if v == 0:
        q = a.p ** m
        return PadicInt(a.p, m, a.residue * pow(b.residue, -1, q))
    if _valuation_int(a.residue, a.p, m) < v:
        raise NotIntegralError("quotient is not a p-adic integer")
    pv = a.p ** v
    m2 = m - v
    q = a.p ** m2
    return PadicInt(a.p, m2, (a.residue // pv) * pow((b.residue // pv) % q, -1, q))


def agree_digits(a: PadicInt, b: PadicInt) -> int:
    """Number of leading p-adic digits on which a and b agree."""
    return (a - b).valuation()


def padic_unit(u: int, p: int, precision: int) -> PadicInt:
    x = PadicInt(p, precision, u)
    check_u(x)
    return x


def check_u(u: PadicInt) -> None:
    """u must be a unit with u != 1 (mod p)."""
    if not u.is_unit() or (u.residue - 1) % u.p == 0:
        raise InvalidUError(f"u = {u} must be a p-adic unit with u != 1 (mod {u.p})")


def padic_eval(f: URational, u: PadicInt) -> PadicInt:
    """Value of a rational function at a p-adic point.

    Coefficients are cleared to integers first, so denominators of
    coefficients may contain p; any p-power in the evaluated denominator is
    paid for with precision.
    """
    cn, num = _integerize(f.num.coeffs)
    cd, den = _integerize(f.den.coeffs)
    q = u.modulus
    x = u.residue

    def horner(cs: Sequence[int]) -> int:
        acc = 0
        for c in reversed(cs):
            acc = (acc * x + c) % q
        return acc

    top = PadicInt(u.p, u.precision, cd * horner(num))
    bottom = PadicInt(u.p, u.precision, cn * horner(den))
    if bottom.valuation() >= u.precision:
        raise PoleError(u, f"denominator vanishes at {u} to working precision")
    return _divide(top, bottom)


# ----------------------------------------------------------------------------
# Riemann sums

def _residue_of(x, p: int, q: int) -> int:
    x = Fraction(x)
    if x.denominator % p == 0:
        raise InvalidInputError(f"{x} has p in its denominator")
    return x.numerator * pow(x.denominator, -1, q) % q


def _riemann_sum(u: PadicInt, P: int, weights: Sequence[int], value, keep=None) -> PadicInt:
    """sum over x in [0, P)^r of value(sum a_j x_j) * prod_j u^(P - x_j), all over (1 - u^P)^r.

    Tuples are folded one coordinate at a time into a table keyed by the
    weighted coordinate sum, so the cost is O(r * keys * P) rather than P^r.
    """
    p, q = u.p, u.modulus
    r_total = len(weights)
    uinv = pow(u.residue, -1, q)
    uP = pow(u.residue, P, q)
    single = []
    w = uP
    for _ in range(P):
        single.append(w)
        w = w * uinv % q
    table: dict[int, int] = {0: 1}
    if len(weights) > 1 and len(set(weights)) == 1:
        # Equal weights: the tuple weight depends only on s = sum x_j, and the
        # number of tuples in [0, P)^r with sum s has a closed form.
        a, r = weights[0], len(weights)
        table = {}
        W = pow(uP, r, q)
        for s in range(r * (P - 1) + 1):
            cnt = sum((-1) ** i * comb(r, i) * comb(s - i * P + r - 1, r - 1)
                      for i in range(min(r, s // P) + 1))
            table[a * s] = cnt * W % q
            W = W * uinv % q
        weights = ()
    for a in weights:
        nxt: dict[int, int] = defaultdict(int)
        for key, W in table.items():
            for x, wx in enumerate(single):
                nxt[key + a * x] += W * wx
        table = {k: v % q for k, v in nxt.items()}
    total = 0
    for key, W in table.items():
        if keep is None or keep(key):
            total += value(key) * W
    denom = pow((1 - uP) % q, r_total, q)
    if denom % p == 0:
        raise InvalidUError(f"1 - u^{P} is not a unit")
    return PadicInt(p, u.precision, total * pow(denom, -1, q))


@dataclass(frozen=True)
class EulerIntegralRequest:
    g: tuple  # polynomial coefficients, low degree first
    u: PadicInt
    level: int

    def __post_init__(self):
        object.__setattr__(self, "g", tuple(Fraction(c) for c in self.g))
        check_u(self.u)
        if self.level < 0:
            raise InvalidInputError("level must be >= 0")


def euler_integral_poly(req: EulerIntegralRequest) -> PadicInt:
    """Level-N Riemann sum (1/(1-u^P)) sum_{j<P} g(j) u^(P-j), P = p^N."""
    u = req.u
    q = u.modulus
    cs = [_residue_of(c, u.p, q) for c in req.g]

    def g_at(j: int) -> int:
        acc = 0
        for c in reversed(cs):
            acc = (acc * j + c) % q
        return acc

    return _riemann_sum(u, u.p ** req.level, (1,), g_at)


def moment_exact(n: int, u_val):
    """(u/(1-u)) H_n(u) at u_val: the limit of the n-th moment."""
    f = U / (1 - U) * fe_number(n)
    if isinstance(u_val, PadicInt):
        check_u(u_val)
        return padic_eval(f, u_val)
    return f.eval_at(Fraction(u_val))


def multi_moment(n: int, r: int, w, weights: Sequence[int], u: PadicInt, N: int) -> PadicInt:
    """Level-N sum of (sum a_j x_j + w)^n against the r-fold Euler measure."""
    check_u(u)
    ws = tuple(weights)
    if len(ws) != r:
        raise InvalidInputError(f"expected {r} weights, got {len(ws)}")
    q = u.modulus
    shift = _residue_of(w, u.p, q)
    return _riemann_sum(u, u.p ** N, ws, lambda k: pow(k + shift, n, q))


def multi_moment_exact(n: int, r: int, w, weights: Sequence[int]) -> URational:
    """Limit of :func:`multi_moment`: (u/(1-u))^r H_n^{(r)}(w, u | a)."""
    return (U / (1 - U)) ** r * fe_weighted(n, r, Fraction(w), tuple(weights))


class WittResult(NamedTuple):
    lhs: PadicInt
    rhs: PadicInt
    agree_digits: int


def witt_check(n: int, r: int, u: PadicInt, N: int, chi: DirichletCharacter | None = None,
               *, literal: bool = False) -> WittResult:
    """Compare H_{n,chi}^{(r)}(u)/(1-u^d)^r with its level-N integral.

    The integral uses the Euler measure weights u^(r d p^N - sum x).  With
    ``literal=True`` the weights are u^(r d - sum x) instead; the two differ
    by u^(r d (1 - p^N)), which does not tend to 1 p-adically.
    """
    chi = chi or DirichletCharacter.trivial()
    if not chi.is_real:
        raise UnsupportedCharacterError(f"{chi} is not +-1 valued")
    check_u(u)
    d = chi.modulus
    if d % u.p == 0:
        raise InvalidInputError("modulus must be prime to p")
    if (pow(u.residue, d, u.p) - 1) % u.p == 0:
        raise InvalidUError(f"u^{d} = 1 (mod {u.p}); 1 - u^d is not a unit")
    q = u.modulus
    exact = fe_gen_chi(n, r, chi).rational_part() / (1 - U ** d) ** r
    lhs = padic_eval(exact, u)
    P = d * u.p ** N
    rhs = _riemann_sum(u, P, (1,) * r, lambda k: chi.sign(k) * pow(k, n, q))
    if literal:
        rhs = rhs * u ** (r * (d - P))
    return WittResult(lhs, rhs, agree_digits(lhs, rhs))


def j_set(r: int, p: int) -> list[tuple[int, ...]]:
    """Tuples in [0, p)^r whose coordinate sum is divisible by p."""
    return [t for t in product(range(p), repeat=r) if sum(t) % p == 0]


def restricted_moment(n: int, r: int, u: PadicInt, N: int) -> PadicInt:
    """Level-N integral of (x_1+...+x_r)^n over x_1+...+x_r in p Z_p."""
    check_u(u)
    if N < 1:
        raise InvalidInputError("restricted moments need level N >= 1")
    p, q = u.p, u.modulus
    return _riemann_sum(u, p ** N, (1,) * r, lambda k: pow(k, n, q), keep=lambda k: k % p == 0)


def restricted_moment_exact(n: int, r: int, p: int) -> URational:
    """Limit of :func:`restricted_moment` as a rational function of u.

    (u^p/(1-u^p))^r p^n sum_{a in J} u^(-sum a) H_n^{(r)}(u^p, (sum a)/p).
    """
    up = U ** p
    terms = [
        fe_poly(n, r, Fraction(sum(a), p)).subst_power(p) / U ** sum(a)
        for a in j_set(r, p)
    ]
    return (up / (1 - up)) ** r * urat_sum(terms) * p ** n


def padic_zeta_negk_exact(k: int, r: int, p: int) -> URational:
    """The value at s = -k of the interpolating function, as a rational function of u."""
    full = (U / (1 - U)) ** r * fe_number_r(k, r)
    return full - restricted_moment_exact(k, r, p)


def padic_zeta_negk(k: int, r: int, u: PadicInt) -> PadicInt:
    """Integral of (x_1+...+x_r)^k over x_1+...+x_r not in p Z_p, in closed form."""
    check_u(u)
    if k < 0:
        raise InvalidInputError("k must be >= 0")
    return padic_eval(padic_zeta_negk_exact(k, r, u.p), u)


def padic_zeta_negk_truncated(k: int, r: int, u: PadicInt, N: int) -> PadicInt:
    """Full minus restricted level-N integral."""
    return multi_moment(k, r, 0, (1,) * r, u, N) - restricted_moment(k, r, u, N)
