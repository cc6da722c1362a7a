"""Laurent scalar arithmetic: ring axioms, evaluation, exact division."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chigenus.scalars import (
    DomainError,
    ExactDivisionError,
    LaurentScalar,
    ONE,
    ONE_PLUS_Y,
    Y,
    ZERO,
)

rationals = st.fractions(min_value=-60, max_value=60, max_denominator=12)
scalars = st.dictionaries(
    st.integers(min_value=-4, max_value=4), rationals, max_size=5
).map(LaurentScalar)


def test_spec_ring_identities():
    assert (ONE - Y) * (ONE + Y) == ONE - Y * Y
    assert Y * LaurentScalar.y_power(-1) == ONE
    assert (ONE - Y).eval_at(-1) == 2


def test_zero_coefficients_are_stripped():
    s = LaurentScalar({2: Fraction(0), 0: 1})
    assert s == ONE
    assert list(s.terms()) == [(0, Fraction(1))]


@given(scalars, scalars, scalars)
@settings(max_examples=200)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a + (-a) == ZERO


@given(scalars, scalars)
@settings(max_examples=200)
def test_multiply_then_exact_divide_round_trips(a, b):
    if not b:
        return
    assert (a * b).exact_div(b) == a


def test_exact_division_failure():
    with pytest.raises(ExactDivisionError):
        ONE.exact_div(ONE_PLUS_Y)
    with pytest.raises(ExactDivisionError):
        (ONE + Y * Y).exact_div(ONE_PLUS_Y)


def test_exact_division_with_negative_exponents():
    s = LaurentScalar({-2: 1, -1: 2, 0: 1})  # (y^-1 + 1)^2
    assert s.exact_div(LaurentScalar({-1: 1, 0: 1})) == LaurentScalar({-1: 1, 0: 1})


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE.exact_div(ZERO)


def test_eval_at_rational_points():
    s = LaurentScalar({-1: 1, 1: 1})  # y^-1 + y
    assert s.eval_at(Fraction(1, 2)) == Fraction(5, 2)
    with pytest.raises(DomainError):
        s.eval_at(0)
    # non-negative exponents evaluate fine at zero
    assert (ONE + Y).eval_at(0) == 1


def test_negative_power_of_monomial():
    m = LaurentScalar.y_power(2, Fraction(3))
    assert m ** (-1) == LaurentScalar.y_power(-2, Fraction(1, 3))
    with pytest.raises(ExactDivisionError):
        ONE_PLUS_Y ** (-1)


def test_rendering_matches_contract():
    assert str(ONE - Y * Fraction(1, 2) + Y * Y * 0) == "1 - 1/2*y"
    assert str(ONE - Y + Y**2) == "1 - y + y^2"
    assert str(ZERO) == "0"
    assert str(LaurentScalar.y_power(-1, -1)) == "-y^-1"
    assert str(LaurentScalar({0: 1, -1: 1})) == "y^-1 + 1"


@given(scalars)
@settings(max_examples=200)
def test_coefficients_round_trip_through_strings(s):
    for _, coeff in s.terms():
        assert Fraction(str(coeff)) == coeff


@given(scalars)
def test_hash_consistency(s):
    assert hash(s) == hash(LaurentScalar(dict(s.terms())))
