from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from feuler import zeta as z
from feuler.errors import DivergenceError, InvalidInputError, SingularTermError
from feuler.exact_arith import U
from feuler.frobenius import fe_number_r


def test_closed_forms():
    ln2 = math.log(2)
    # sum 2^-mu / (mu+1) = 2 ln 2, and grouping by nu gives the same for r = 2, s = 2.
    for r, s in [(1, 1), (2, 2)]:
        v = z.mzeta_trunc(s, 1, 2, r, 60)
        assert abs(v.value - 2 * ln2) <= v.error
    li2_half = math.pi**2 / 12 - ln2**2 / 2
    v = z.mzeta_trunc(2, 1, 2, 1, 60)
    assert abs(v.value - 2 * li2_half) <= v.error


@given(st.sampled_from([1.5, 2.0, 3.0]), st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(2)]),
       st.sampled_from([2.0, 3.0, -2.5]), st.integers(1, 3), st.integers(8, 20))
@settings(max_examples=30, deadline=None)
def test_tail_bound_is_sound(s, x, u, r, M):
    small = z.mzeta_trunc(s, x, u, r, M)
    big = z.mzeta_trunc(s, x, u, r, 2 * M)
    assert abs(small.value - big.value) <= small.error + big.error
    assert big.tail_bound <= small.tail_bound


@pytest.mark.parametrize("r", [1, 2, 3])
def test_grouped_oracle(r):
    M = 40 if r < 3 else 25
    box = z.mzeta_trunc(2.0, Fraction(1, 2), 3.0, r, M)
    grouped = z.mzeta_grouped(2.0, Fraction(1, 2), 3.0, r, 200)
    assert abs(box.value - grouped) < 1e-9


def test_barnes_reduces_to_mzeta():
    a = z.barnes_trunc(2.0, Fraction(3, 2), (1, 1), 2.0, 2, 30)
    b = z.mzeta_trunc(2.0, Fraction(3, 2), 2.0, 2, 30)
    assert a.value == b.value


@pytest.mark.parametrize("n", range(4))
@pytest.mark.parametrize("k,alpha", [((1,), 1), ((1, 2), Fraction(1, 2)), ((1, 1, 1), 3)])
def test_special_values_match_convergent_sum(n, k, alpha):
    # At s = -n the series converges absolutely for |u| > 1.
    v = z.barnes_trunc(-n, alpha, k, 3.0, len(k), 80)
    exact = float(z.special_value(n, alpha, k).eval_at(3))
    assert abs(v.value - exact) <= v.error + 1e-15 * abs(exact)


def test_special_value_plain():
    assert z.special_value(2, 0, (1, 1)) == (U / (U - 1)) ** 2 * fe_number_r(2, 2)


def test_input_errors():
    with pytest.raises(DivergenceError):
        z.mzeta_trunc(2, 1, 1.0, 1, 10)
    with pytest.raises(DivergenceError):
        z.mzeta_trunc(2, 1, -0.5, 1, 10)
    with pytest.raises(SingularTermError):
        z.mzeta_trunc(2, 0, 2.0, 1, 10)
    with pytest.raises(InvalidInputError):
        z.barnes_trunc(2, 0, (1,), 2.0, 1, 10)
    with pytest.raises(InvalidInputError):
        z.barnes_trunc(2, 1, (1, 0), 2.0, 2, 10)


def test_plan_object():
    a = z.mzeta_trunc(2, 1, 2, 2, z.TruncationPlan(30))
    b = z.mzeta_trunc(2, 1, 2, 2, 30)
    assert a == b


GRID = [(r, u, s) for r in (1, 2, 3) for u in (2, 3) for s in (2, 3)]


@pytest.mark.parametrize("r,u,s", GRID)
def test_shift_identity_positive_exponent(r, u, s):
    # Shifting n_i = mu_i + 1 gives zeta_r(u|s, r) = u^r zeta_r(u|s).
    assert z.check_lemma2(s, u, r, 60, exponent=r)


@pytest.mark.parametrize("r,u,s", GRID)
def test_shift_identity_printed_exponent_ratio(r, u, s):
    lhs, rhs, _ = z.lemma2_sides(s, u, r, 60)
    assert not z.check_lemma2(s, u, r, 60)
    assert math.isclose(lhs / rhs, float(u) ** (2 * r), rel_tol=1e-12)


def test_shift_example_value():
    lhs, rhs, _ = z.lemma2_sides(2, 2, 1, 60)
    assert round(lhs, 4) == 1.1645 and round(rhs, 4) == 0.2911
