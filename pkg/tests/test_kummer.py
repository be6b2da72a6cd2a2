from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from feuler import kummer as km
from feuler.errors import InvalidInstanceError, InvalidUError
from feuler.exact_arith import U
from feuler.padic import padic_eval

from oracles import residue, valuation, weighted_point


def phi_at(p, r, alpha, k, n, u0):
    """Phi_n at a rational point, from the generating-function oracle."""
    u0 = Fraction(u0)
    first = (u0 / (1 - u0)) ** r * weighted_point(n, u0, k, alpha)[n]
    acc = Fraction(0)
    for i in product(range(p), repeat=r):
        x = alpha + sum(a * b for a, b in zip(k, i))
        if x % p == 0:
            acc += weighted_point(n, u0**p, k, x // p)[n] * u0 ** (-sum(i))
    return first - p**n * (u0**p / (1 - u0**p)) ** r * acc


def test_enum_i0_examples():
    assert list(km.enum_i0(0, (1,), 3)) == [((0,), 0)]
    assert list(km.enum_i0(1, (1,), 3)) == [((2,), 1)]
    assert list(km.enum_i0(0, (1, 1), 3)) == [((0, 0), 0), ((1, 2), 1), ((2, 1), 1)]


@given(st.sampled_from([3, 5, 7]), st.integers(0, 12),
       st.lists(st.integers(1, 6), min_size=1, max_size=3))
@settings(max_examples=40, deadline=None)
def test_enum_i0_exhaustive(p, alpha, k):
    k = [x for x in k if x % p] or [1]
    got = km.enum_i0(alpha, k, p)
    for i, beta in got:
        assert alpha + sum(a * b for a, b in zip(k, i)) == p * beta
    count = sum(1 for i in product(range(p), repeat=len(k))
                if (alpha + sum(a * b for a, b in zip(k, i))) % p == 0)
    assert len(got) == count == p ** (len(k) - 1)


def test_instance_validation():
    with pytest.raises(InvalidInstanceError):
        km.KummerInstance.make(4, 1, 0, (1,))
    with pytest.raises(InvalidInstanceError):
        km.KummerInstance.make(5, 1, 0, (5,))
    with pytest.raises(InvalidInstanceError):
        km.KummerInstance.make(5, 2, 0, (1,))
    with pytest.raises(InvalidUError):
        km.KummerInstance.make(5, 1, 0, (1,), u=6)
    with pytest.raises(InvalidInstanceError):
        km.KummerInstance.make(7, 3, 0, (1, 1, 1), N=2)
    assert km.KummerInstance.make(7, 3, 0, (1, 1, 1), N=2, stress=True).level_modulus == 343


def test_phi_zero_hand_value():
    inst = km.KummerInstance.make(3, 1, 0, (1,))
    assert km.phi_expression(inst, 0) == U / (1 - U) - U**3 / (1 - U**3)


def test_t_terms_hand_values():
    inst = km.KummerInstance.make(3, 1, 0, (1,))
    t0, t1 = km.t_terms(inst, 1)
    assert t0 == -(U**2 + 2 * U) / (U**3 - 1)
    assert t1 == -3 * U * (U + 1) / (U**3 - 1) ** 2
    assert km.t_term(inst, 1, 1) == t1
    assert km.check_sum_identity(inst, 0)
    assert km.phi_expression(inst, 0) == km.t_terms(inst, 0)[0]


PINNED = [Fraction(108, 31), Fraction(12416, 961), Fraction(2453064, 29791),
          Fraction(700509992, 923521), Fraction(258765886488, 28629151)]


@pytest.mark.parametrize("n", range(5))
def test_phi_regression_and_oracle(n):
    inst = km.KummerInstance.make(5, 2, 1, (1, 2))
    phi = km.phi_expression(inst, n)
    assert phi.eval_at(2) == PINNED[n]
    assert phi.eval_at(Fraction(1, 3)) == phi_at(5, 2, 1, (1, 2), n, Fraction(1, 3))


@pytest.mark.parametrize("p,r,k,alpha,n_max,u", [
    (3, 1, (1,), 0, 5, 2), (3, 1, (1,), 1, 5, 2), (5, 2, (1, 2), 1, 4, 2),
    (5, 2, (1, 1), 1, 4, 2), (5, 1, (1,), 0, 6, 2), (7, 3, (1, 2, 3), 0, 3, 3),
])
def test_sum_identity_integrality_coherence(p, r, k, alpha, n_max, u):
    inst = km.KummerInstance.make(p, r, alpha, k, u=u)
    for n in range(n_max + 1):
        assert km.check_sum_identity(inst, n)
        if inst.satisfies_bound():
            assert km.check_integrality(inst, n)
        # p-adic evaluation of the exact value agrees with the direct p-adic route
        assert padic_eval(km.phi_expression(inst, n), inst.u) == km.phi_padic(inst, n)


def test_phi_padic_matches_oracle_residue():
    inst = km.KummerInstance.make(5, 2, 1, (1, 2), precision=8)
    for n in range(4):
        assert km.phi_padic(inst, n).residue == residue(phi_at(5, 2, 1, (1, 2), n, 2), 5, 8)


def test_integrality_requires_bound():
    inst = km.KummerInstance.make(3, 2, 0, (1, 1))
    with pytest.raises(InvalidInstanceError):
        km.check_integrality(inst, 1)
    assert isinstance(km.check_integrality(inst, 1, enforce_bound=False), bool)


@pytest.mark.parametrize("r,k", [(1, (1,)), (2, (1, 2)), (2, (1, 1))])
def test_congruence(r, k):
    inst = km.KummerInstance.make(5, r, 1 if r == 2 else 0, k, n=3, m=23)
    assert inst.congruence_preconditions() == []
    assert km.check_congruence(inst)


def test_congruence_trivial_case():
    # m = n needs gcd(n, p-1) = 1.
    inst = km.KummerInstance.make(5, 1, 0, (1,), n=3, m=3)
    assert km.check_congruence(inst)


def test_congruence_preconditions():
    with pytest.raises(InvalidInstanceError, match="gcd"):
        km.check_congruence(km.KummerInstance.make(5, 1, 0, (1,), n=2, m=22))
    with pytest.raises(InvalidInstanceError, match="mod"):
        km.check_congruence(km.KummerInstance.make(5, 1, 0, (1,), n=3, m=7))
    with pytest.raises(InvalidInstanceError, match="2r"):
        km.check_congruence(km.KummerInstance.make(3, 2, 0, (1, 1), n=1, m=7))


@pytest.mark.parametrize("r,k,alpha", [(1, (1,), 0), (1, (1,), 2), (2, (1, 2), 1), (2, (1, 1), 0)])
def test_t_vanishing_and_stability(r, k, alpha):
    inst = km.KummerInstance.make(5, r, alpha, k, n=3, m=23)
    tn, tm = km.t_terms_padic(inst, 3), km.t_terms_padic(inst, 23)
    vals = [t.valuation() for t in tn]
    assert all(v >= inst.N + 1 for v in vals[1:]), vals
    assert all(v >= inst.N + 1 for v in km.t_valuations(inst, 23)[1:])
    for l in range(4):
        assert (tn[l] - tm[l]).valuation() >= inst.N + 1


def test_t_terms_padic_match_exact():
    inst = km.KummerInstance.make(5, 2, 1, (1, 2))
    for n in range(4):
        exact = [padic_eval(t, inst.u) for t in km.t_terms(inst, n)]
        assert exact == km.t_terms_padic(inst, n)


def test_t_valuations_recorded():
    inst = km.KummerInstance.make(5, 1, 0, (1,))
    assert km.t_valuations(inst, 3) == [0, 1, 2, 4]
    t1 = km.t_terms_padic(inst, 3)[1]
    assert valuation(t1.residue, 5, t1.precision) == 1
