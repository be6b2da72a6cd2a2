"""Euler-factor-removed multiple Frobenius-Euler numbers and their Kummer-type
congruences.

Phi_n(u) = u^r/(1-u)^r H_n^{(r)}(alpha, u | k)
           - p^n u^{pr}/(1-u^p)^r sum_{i in I_0} H_n^{(r)}(beta_i, u^p | k) u^{-sum i}

is computed exactly (as a rational function of u) and p-adically, and compared
with its expansion sum_l T_l(n), where with P = p^(N+1) and U = u^P

T_l(n) = C(n,l) P^l A_l(U) U^r/(1-U)^r sum'_{j in [0,P)^r} u^{-sum j} (alpha + k.j)^(n-l),

the primed sum running over j with alpha + k.j prime to p.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from math import comb, gcd

from .errors import InvalidInstanceError, NotIntegralError
from .exact_arith import ONE_POLY, U, UPoly, URational, urat_sum
from .frobenius import fe_weighted, frobenius_numbers, shifted_sum, umbral_sequence, umbral_table
from .padic import PadicInt, check_u, padic_eval

# Above this many tuples in [0, p^(N+1))^r the direct T_l power sums need stress=True.
STRESS_TUPLES = 200_000


def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@dataclass(frozen=True)
class KummerInstance:
    p: int
    r: int
    alpha: int
    kbar: tuple[int, ...]
    N: int = 0
    n: int = 1
    m: int | None = None
    u: PadicInt | None = field(default=None, compare=False)
    stress: bool = False

    def __post_init__(self):
        object.__setattr__(self, "kbar", tuple(self.kbar))
        if not _is_prime(self.p) or self.p == 2:
            raise InvalidInstanceError(f"p = {self.p} must be an odd prime")
        if self.r < 1 or len(self.kbar) != self.r:
            raise InvalidInstanceError("kbar must hold exactly r entries")
        for k in self.kbar:
            if k <= 0 or gcd(k, self.p) != 1:
                raise InvalidInstanceError(f"k = {k} must be positive and prime to p")
        if self.alpha < 0 or self.N < 0 or self.n < 0:
            raise InvalidInstanceError("alpha, N and n must be nonnegative")
        if self.m is not None and self.m < 1:
            raise InvalidInstanceError("m must be positive")
        if self.u is not None:
            if self.u.p != self.p:
                raise InvalidInstanceError("u must be a p-adic number for the same p")
            check_u(self.u)
        tuples = (self.p ** (self.N + 1)) ** self.r
        if tuples > STRESS_TUPLES and not self.stress:
            raise InvalidInstanceError(
                f"{tuples} tuples in the T_l power sums; pass stress=True to allow"
            )

    @classmethod
    def make(cls, p: int, r: int, alpha: int, kbar, *, u: int | None = 2, N: int = 0,
             n: int = 1, m: int | None = None, precision: int | None = None,
             stress: bool = False) -> "KummerInstance":
        prec = precision if precision is not None else max(10, N + 6)
        pu = PadicInt(p, prec, u) if u is not None else None
        return cls(p, r, alpha, tuple(kbar), N, n, m, pu, stress)

    @property
    def level_modulus(self) -> int:
        return self.p ** (self.N + 1)

    def satisfies_bound(self) -> bool:
        return self.p >= 2 * self.r + 1

    def congruence_preconditions(self) -> list[str]:
        """Violated hypotheses of the congruence statement (empty when all hold)."""
        bad = []
        if not self.satisfies_bound():
            bad.append(f"p >= 2r+1 fails ({self.p} < {2 * self.r + 1})")
        if self.m is None:
            bad.append("m is not set")
        else:
            if gcd(self.m, self.p - 1) != 1:
                bad.append(f"gcd(m, p-1) = {gcd(self.m, self.p - 1)} != 1")
            mod = self.level_modulus * (self.p - 1)
            if (self.m - self.n) % mod:
                bad.append(f"m != n (mod {mod})")
        return bad

    def padic_u(self) -> PadicInt:
        if self.u is None:
            raise InvalidInstanceError("this check needs a p-adic u")
        return self.u


@dataclass(frozen=True)
class I0Enumeration:
    tuples: tuple[tuple[tuple[int, ...], int], ...]

    def __len__(self) -> int:
        return len(self.tuples)

    def __iter__(self):
        return iter(self.tuples)


def enum_i0(alpha: int, kbar, p: int) -> I0Enumeration:
    """All (i, beta) with i in [0, p)^r and alpha + k.i = p * beta, in lexicographic order."""
    kbar = tuple(kbar)
    for k in kbar:
        if gcd(k, p) != 1:
            raise InvalidInstanceError(f"k = {k} is not prime to p = {p}")
    out = []
    for i in product(range(p), repeat=len(kbar)):
        x = alpha + sum(k * j for k, j in zip(kbar, i))
        if x % p == 0:
            out.append((i, x // p))
    return I0Enumeration(tuple(out))


def _coprime_tuples(inst: KummerInstance):
    """(sum j, alpha + k.j) over j in [0, P)^r with alpha + k.j prime to p."""
    P = inst.level_modulus
    for j in product(range(P), repeat=inst.r):
        x = inst.alpha + sum(k * c for k, c in zip(inst.kbar, j))
        if x % inst.p:
            yield sum(j), x


# ----------------------------------------------------------------------------
# Exact route

def phi_expression(inst: KummerInstance, n: int) -> URational:
    """Phi_n as an exact rational function of u."""
    p, r = inst.p, inst.r
    first = (U / (1 - U)) ** r * fe_weighted(n, r, inst.alpha, inst.kbar)
    up = U ** p
    terms = [
        fe_weighted(n, r, beta, inst.kbar).subst_power(p) / U ** sum(i)
        for i, beta in _i0(inst)
    ]
    second = (up / (1 - up)) ** r * urat_sum(terms) * p ** n
    return first - second


def _i0(inst: KummerInstance) -> I0Enumeration:
    return enum_i0(inst.alpha, inst.kbar, inst.p)


def _laurent_power_sum(pairs, e: int) -> URational:
    """sum over (s, x) of u^{-s} x^e, as a rational function."""
    coeffs: dict[int, int] = {}
    for s, x in pairs:
        coeffs[s] = coeffs.get(s, 0) + x ** e
    if not coeffs:
        return URational.const(0)
    top = max(coeffs)
    num = UPoly([coeffs.get(top - k, 0) for k in range(top + 1)])
    return URational(num, UPoly.monomial(top)) if top else URational(num, ONE_POLY)


def t_terms(inst: KummerInstance, n: int) -> list[URational]:
    """[T_0(n), ..., T_n(n)] exactly."""
    P = inst.level_modulus
    pairs = list(_coprime_tuples(inst))
    A = [a.subst_power(P) for a in umbral_table(n, inst.kbar)]
    UP = U ** P
    factor = (UP / (1 - UP)) ** inst.r
    out = []
    for l in range(n + 1):
        psum = _laurent_power_sum(pairs, n - l)
        out.append(comb(n, l) * (P ** l) * A[l] * factor * psum)
    return out


def t_term(inst: KummerInstance, l: int, n: int) -> URational:
    if not 0 <= l <= n:
        raise InvalidInstanceError("need 0 <= l <= n")
    return t_terms(inst, n)[l]


def check_sum_identity(inst: KummerInstance, n: int) -> bool:
    return phi_expression(inst, n) == urat_sum(t_terms(inst, n))


def check_integrality(inst: KummerInstance, n: int, *, enforce_bound: bool = True) -> bool:
    """Is the exact Phi_n, evaluated at the instance's p-adic u, in Z_p?"""
    if enforce_bound and not inst.satisfies_bound():
        raise InvalidInstanceError(f"p >= 2r+1 required, got p={inst.p}, r={inst.r}")
    u = inst.padic_u()
    try:
        value = padic_eval(phi_expression(inst, n), u)
    except NotIntegralError:
        return False
    return value.valuation() >= 0


# ----------------------------------------------------------------------------
# Direct p-adic route

def _weighted_padic(n: int, shift, kbar, h) -> PadicInt:
    return shifted_sum(umbral_sequence(h, kbar), n, shift)


def phi_padic(inst: KummerInstance, n: int) -> PadicInt:
    """Phi_n computed entirely in p-adic arithmetic from the recurrences."""
    u = inst.padic_u()
    p, r = inst.p, inst.r
    first = (u / (1 - u)) ** r * _weighted_padic(n, inst.alpha, inst.kbar,
                                                 frobenius_numbers(n, u))
    up = u ** p
    A_up = umbral_sequence(frobenius_numbers(n, up), inst.kbar)
    acc = None
    for i, beta in _i0(inst):
        term = shifted_sum(A_up, n, beta) * u ** (-sum(i))
        acc = term if acc is None else acc + term
    second = (up / (1 - up)) ** r * acc * p ** n if acc is not None else 0
    return first - second


def t_terms_padic(inst: KummerInstance, n: int) -> list[PadicInt]:
    u = inst.padic_u()
    P = inst.level_modulus
    UP = u ** P
    A = umbral_sequence(frobenius_numbers(n, UP), inst.kbar)
    factor = (UP / (1 - UP)) ** inst.r
    q = u.modulus
    uinv = pow(u.residue, -1, q)
    pairs = list(_coprime_tuples(inst))
    out = []
    for l in range(n + 1):
        psum = sum(pow(uinv, s, q) * pow(x, n - l, q) for s, x in pairs)
        out.append(comb(n, l) * (P ** l) * A[l] * factor * psum)
    return out


def t_valuations(inst: KummerInstance, n: int) -> list[int]:
    return [t.valuation() for t in t_terms_padic(inst, n)]


def check_congruence(inst: KummerInstance) -> bool:
    """Phi_n = Phi_m (mod p^(N+1)) when p >= 2r+1, gcd(m, p-1) = 1 and m = n (mod p^(N+1)(p-1))."""
    bad = inst.congruence_preconditions()
    if bad:
        raise InvalidInstanceError("; ".join(bad))
    diff = phi_padic(inst, inst.n) - phi_padic(inst, inst.m)
    return diff.valuation() >= inst.N + 1
