from __future__ import annotations

from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from feuler.errors import NonInvertibleError, TruncationError
from feuler.exact_arith import U
from feuler.power_series import (
    Series,
    constant_series,
    default_truncation,
    egf_coeff,
    ps_exp_linear,
    ps_inv,
    ps_mul,
)

T = 6
coeff = st.fractions(min_value=-3, max_value=3, max_denominator=3)
series = st.lists(coeff, min_size=T, max_size=T).map(Series)
invertible = series.filter(lambda s: s[0] != 0)


def test_exp_coefficients():
    e = ps_exp_linear(Fraction(2), 5)
    assert [egf_coeff(e, n) for n in range(5)] == [2**n for n in range(5)]


def test_egf_coeff_beyond_truncation():
    with pytest.raises(TruncationError):
        egf_coeff(ps_exp_linear(1, 3), 4)


def test_inverse_requires_unit_constant():
    with pytest.raises(NonInvertibleError):
        ps_inv(Series([0, 1, 0]))


def test_truncation_is_min():
    assert constant_series(1, 3).truncation == 3
    assert ps_mul(constant_series(1, 3), constant_series(1, 5)).truncation == 3
    assert default_truncation(4) == 6


def test_symbolic_coefficients():
    # 1/(e^t - u) at t^0 is 1/(1-u)
    inv = ps_inv(ps_exp_linear(1, 3) - U)
    assert inv[0] == 1 / (1 - U)
    assert inv[1] == -1 / (1 - U) ** 2


@given(series, series)
@settings(max_examples=40, deadline=None)
def test_mul_commutative(a, b):
    assert ps_mul(a, b) == ps_mul(b, a)


@given(coeff, coeff)
@settings(max_examples=40, deadline=None)
def test_exp_addition(a, b):
    assert ps_mul(ps_exp_linear(a, T), ps_exp_linear(b, T)) == ps_exp_linear(a + b, T)


@given(invertible)
@settings(max_examples=40, deadline=None)
def test_double_inverse(a):
    assert ps_inv(ps_inv(a)) == a
    assert ps_mul(a, ps_inv(a)) == constant_series(1, T - 1)


def test_egf_scaling():
    s = Series([Fraction(1, factorial(k)) for k in range(5)])
    assert [egf_coeff(s, n) for n in range(5)] == [1] * 5
