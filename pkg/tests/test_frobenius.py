from __future__ import annotations

import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from feuler import frobenius as fr
from feuler.characters import DirichletCharacter, dirichlet_characters
from feuler.errors import InvalidInputError
from feuler.exact_arith import U, CycloElem, parse, render

from oracles import frobenius_point, twisted_point, weighted_point

POINTS = [Fraction(2), Fraction(-1), Fraction(3), Fraction(1, 2), Fraction(-3, 2), Fraction(5, 3)]
point = st.sampled_from(POINTS)


def test_first_values():
    assert fr.fe_number(0) == 1
    assert fr.fe_number(1) == 1 / (U - 1)
    assert fr.fe_number(2) == (U + 1) / (U - 1) ** 2
    assert fr.fe_number_r(1, 2) == 2 / (U - 1)
    assert fr.fe_number_r(0, 5) == 1


def test_ordered_bell_numbers_at_two():
    # 1/(2 - e^t) counts ordered set partitions.
    assert [fr.fe_number(n).eval_at(2) for n in range(8)] == [1, 1, 3, 13, 75, 541, 4683, 47293]


def test_classical_euler_at_minus_one():
    expected = [1, Fraction(-1, 2), 0, Fraction(1, 4), 0, Fraction(-1, 2), 0, Fraction(17, 8), 0,
                Fraction(-31, 2)]
    assert [fr.fe_number(n).eval_at(-1) for n in range(10)] == expected


@pytest.mark.parametrize("u0", POINTS)
def test_numbers_match_oracle(u0):
    ref = frobenius_point(10, u0)
    assert [fr.fe_number(n).eval_at(u0) for n in range(11)] == ref


@given(point, st.integers(1, 3), st.integers(0, 6),
       st.fractions(min_value=-2, max_value=3, max_denominator=3))
@settings(max_examples=30, deadline=None)
def test_poly_matches_oracle(u0, r, n, x):
    assert fr.fe_poly(n, r, x).eval_at(u0) == frobenius_point(n, u0, r, x)[n]


@pytest.mark.parametrize("weights", [(1,), (1, 2), (2, 3), (1, 2, 3)])
def test_weighted_matches_oracle(weights):
    w = Fraction(1, 2)
    ref = weighted_point(6, 3, weights, w)
    got = [fr.fe_weighted(n, len(weights), w, weights).eval_at(3) for n in range(7)]
    assert got == ref


def test_weighted_frozen_value():
    assert fr.fe_weighted(4, 2, Fraction(1, 2), (1, 2)).eval_at(3) == Fraction(5221, 16)


def test_weighted_routes_agree():
    for ws in [(1,), (1, 2), (1, 2, 3)]:
        for n in range(6):
            assert fr.fe_weighted_series(n, 0, ws) == fr.fe_weighted_umbral(n, 0, ws)


def test_umbral_A_is_weighted_at_zero():
    for ws in [(1, 2), (2, 1, 1)]:
        for l in range(5):
            assert fr.umbral_A(l, ws) == fr.fe_weighted(l, len(ws), 0, ws)


def test_order_r_is_convolution():
    h = fr.frobenius_numbers(6, U)
    h2 = fr.order_r_numbers(h, 2)
    assert h2 == [fr.fe_number_r(n, 2) for n in range(7)]


def test_bad_weights():
    with pytest.raises(InvalidInputError):
        fr.fe_weighted(2, 2, 0, (1, 0))
    with pytest.raises(InvalidInputError):
        fr.fe_weighted(2, 2, 0, (1,))


@pytest.mark.parametrize("d,r", [(3, 1), (4, 1), (3, 2), (4, 2), (5, 1)])
def test_real_twists_match_oracle(d, r):
    for chi in dirichlet_characters(d):
        if not chi.is_real:
            continue
        ref = twisted_point(4, 3, r, d, chi.sign)
        got = [fr.fe_gen_chi(n, r, chi).rational_part().eval_at(3) for n in range(5)]
        assert got == ref


def test_twist_frozen_values():
    chi4 = DirichletCharacter.from_signs(4, {1: 1, 3: -1})
    got = [fr.fe_gen_chi(n, 1, chi4).rational_part().eval_at(3) for n in range(4)]
    assert got == [24, Fraction(96, 5), Fraction(168, 25), Fraction(-2784, 125)]


def test_trivial_character_convention():
    t = DirichletCharacter.trivial()
    for r in (1, 2):
        for n in range(5):
            assert fr.fe_gen_chi(n, r, t) == CycloElem(1, [U**r * fr.fe_number_r(n, r)])


def test_complex_twist_routes_agree():
    chi = next(c for c in dirichlet_characters(5) if c.order == 4)
    for n in range(4):
        assert fr.fe_gen_chi(n, 2, chi) == fr.fe_gen_chi_series(n, 2, chi)


@given(st.integers(0, 8), st.integers(1, 3),
       st.fractions(min_value=-3, max_value=4, max_denominator=4))
@settings(max_examples=25, deadline=None)
def test_reflection_property(n, r, x):
    assert fr.check_reflection(n, r, x)


@given(st.integers(0, 5), st.integers(1, 2), st.sampled_from([2, 3, 4, 5]),
       st.fractions(min_value=0, max_value=2, max_denominator=3))
@settings(max_examples=20, deadline=None)
def test_distribution_property(n, r, p, x):
    assert fr.check_distribution(n, r, p, x)


def test_distribution_detects_wrong_scale():
    lhs, rhs = fr.distribution_sides(3, 1, 2)
    assert lhs == rhs and lhs != rhs * 2


def test_table_export_roundtrip():
    table = fr.HTable()
    for r in (1, 2):
        for n in range(4):
            table.get(n, r)
    exported = table.export()
    assert exported["H(2,1)"] == render((U + 1) / (U - 1) ** 2)
    assert all(parse(v) == fr.fe_number_r(int(k[2]), int(k[4])) for k, v in exported.items())


def test_table_threads():
    table = fr.HTable()
    results = []

    def work():
        results.append([table.get(n, 2) for n in range(8)])

    threads = [threading.Thread(target=work) for _ in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(res == results[0] for res in results)
    assert len(table) >= 8


def test_negative_index():
    with pytest.raises(InvalidInputError):
        fr.fe_number(-1)
