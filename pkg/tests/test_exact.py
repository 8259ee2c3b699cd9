from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from genbinom.exact import INV_PI, ONE, ZERO, ExactHalfValue

fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=50)
powers = st.integers(min_value=-3, max_value=1)


@st.composite
def values(draw):
    v = ZERO
    for _ in range(draw(st.integers(0, 3))):
        v = v + ExactHalfValue(draw(fractions), draw(powers))
    return v


def test_monomial_fields():
    v = ExactHalfValue(Fraction(4, 3), -1)
    assert v.is_monomial and v.q == Fraction(4, 3) and v.pi_power == -1
    assert float(v) == pytest.approx(4 / (3 * math.pi), rel=1e-15)


def test_canonical_zero():
    z = ExactHalfValue(0, -1)
    assert z == ZERO and z.q == 0 and z.pi_power == 0
    assert not z
    assert ExactHalfValue(3, -1) - ExactHalfValue(3, -1) == 0


def test_mixed_sum_is_not_a_monomial():
    v = ExactHalfValue(4) + ExactHalfValue(Fraction(32, 3), -1)
    assert not v.is_monomial
    with pytest.raises(ValueError):
        _ = v.q
    assert float(v) == pytest.approx(4 + 32 / (3 * math.pi), rel=1e-15)


@pytest.mark.parametrize(
    "value, text",
    [
        (ExactHalfValue(4, -1), "4/pi"),
        (ExactHalfValue(Fraction(4, 3), -1), "4/3/pi"),
        (ExactHalfValue(4) + ExactHalfValue(Fraction(32, 3), -1), "4 + 32/3/pi"),
        (ZERO, "0"),
        (ExactHalfValue(Fraction(-5, 2)), "-5/2"),
    ],
)
def test_str(value, text):
    assert str(value) == text
    assert ExactHalfValue.parse(text) == value


def test_division_only_by_monomials():
    assert ExactHalfValue(2, -1) / INV_PI == ExactHalfValue(2)
    with pytest.raises((ValueError, ZeroDivisionError)):
        ONE / (ONE + INV_PI)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        _ = ONE + 0.5


@settings(max_examples=200, deadline=None)
@given(values(), values(), values())
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert hash(a + b) == hash(b + a)


@settings(max_examples=200, deadline=None)
@given(values())
def test_str_round_trip(a):
    assert ExactHalfValue.parse(str(a)) == a


@settings(max_examples=200, deadline=None)
@given(values(), values())
def test_float_is_homomorphic(a, b):
    assert float(a + b) == pytest.approx(float(a) + float(b), rel=1e-12, abs=1e-9)
