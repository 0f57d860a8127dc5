"""Field arithmetic in Q(q): canonical forms and exact field axioms."""

import pytest
from hypothesis import given, settings, strategies as st

from qpb.scalars import (
    RF_ONE, RF_ZERO, RationalFunction, p_gcd, p_mul, rf_int, rf_q, rf_str,
)


def rf(num, den=(1,)):
    return RationalFunction(tuple(num), tuple(den))


def test_polynomial_division_normalizes():
    # (q^2 - 1)/(q - 1) -> q + 1
    x = rf((-1, 0, 1), (-1, 1))
    assert x == rf((1, 1))
    assert x.den == (1,)


def test_zero_normalizes_to_zero_over_one():
    x = rf((0,), (2, 0, 1))
    assert x.num == ()
    assert x.den == (1,)
    assert x == RF_ZERO


def test_content_reduction():
    # (2q)/4 -> q/2
    x = rf((0, 2), (4,))
    assert x.num == (0, 1)
    assert x.den == (2,)


def test_denominator_sign_normalized():
    x = rf((1,), (-2,))
    assert x.den == (2,)
    assert x.num == (-1,)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDivisionError, match="division by zero in scalar field"):
        rf((1,), ())
    with pytest.raises(ZeroDivisionError):
        RF_ONE / RF_ZERO


def test_q_powers():
    assert rf_q(2).num == (0, 0, 1)
    assert rf_q(-1) == RF_ONE / rf_q(1)
    assert rf_q(3) * rf_q(-3) == RF_ONE


def test_gcd_includes_content():
    assert p_gcd((0, 2), (4,)) == (2,)
    assert p_gcd((-1, 0, 1), (-1, 1)) == (-1, 1)
    assert p_gcd(p_mul((1, 1), (2, 3)), p_mul((1, 1), (5,))) == (1, 1)


def test_str_round_trip_shapes():
    assert rf_str(rf_int(5)) == "5"
    assert rf_str(rf_q(2)) == "q^2"
    assert rf_str(rf((-1, 0, 1), (2,))) == "(q^2 - 1)/2"
    assert rf_str(rf((1,), (1, 1))) == "1/(q + 1)"


small_polys = st.lists(st.integers(-4, 4), min_size=0, max_size=4).map(tuple)


@st.composite
def rationals(draw):
    num = draw(small_polys)
    den = draw(small_polys.filter(lambda p: any(p)))
    return RationalFunction(num, den)


@given(rationals(), rationals(), rationals())
@settings(max_examples=200, deadline=None)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + RF_ZERO == a
    assert a * RF_ONE == a
    assert a - a == RF_ZERO
    if not a.is_zero:
        assert a * a.inverse() == RF_ONE


@given(rationals())
@settings(max_examples=100, deadline=None)
def test_canonical_form_is_stable(a):
    again = RationalFunction(a.num, a.den)
    assert again.num == a.num and again.den == a.den
    assert hash(again) == hash(a)
