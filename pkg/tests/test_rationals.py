import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from emeasure.rationals import (
    EQUAL,
    GREATER,
    LESS,
    compare,
    factorial,
    from_json,
    rational,
    to_json,
    truncate_decimal,
)


def test_rational_normalizes():
    assert rational(65, 24) == Fraction(65, 24)
    assert rational(0, 5) == Fraction(0, 1)
    r = rational(6, 4)
    assert (r.numerator, r.denominator) == (3, 2)


def test_rational_sign_on_numerator():
    r = rational(3, -6)
    assert (r.numerator, r.denominator) == (-1, 2)


def test_zero_denominator_rejected():
    with pytest.raises(ValueError):
        rational(1, 0)


def test_factorial_anchors():
    assert factorial(0) == 1
    assert factorial(4) == 24
    assert factorial(12) == 479001600


def test_factorial_negative_rejected():
    with pytest.raises(ValueError):
        factorial(-1)


def test_factorial_recurrence_to_500():
    acc = 1
    for n in range(1, 501):
        acc *= n
        assert factorial(n) == acc


def test_compare():
    assert compare(Fraction(5, 2), Fraction(8, 3)) == LESS
    assert compare(Fraction(65, 24), Fraction(65, 24)) == EQUAL
    assert compare(Fraction(1, 120), Fraction(1, 24)) == LESS
    assert compare(Fraction(3), Fraction(2)) == GREATER


def test_truncate_decimal_truncates_not_rounds():
    assert truncate_decimal(Fraction(1, 120), 5) == "0.00833"
    assert truncate_decimal(Fraction(1, 24), 5) == "0.04166"
    assert truncate_decimal(Fraction(2, 3), 3) == "0.666"
    assert truncate_decimal(Fraction(-2, 3), 3) == "-0.666"
    assert truncate_decimal(Fraction(5, 2), 2) == "2.50"


def test_json_round_trip_big_values():
    q19 = Fraction(1, math.factorial(19) // 4000)
    doc = to_json(q19)
    assert doc == {"num": "1", "den": str(math.factorial(19) // 4000)}
    assert from_json(doc) == q19


@given(
    st.fractions(max_denominator=10**6),
    st.fractions(max_denominator=10**6),
)
def test_arithmetic_is_exact(a, b):
    assert (a + b) - b == a
    assert math.gcd(abs((a + b).numerator), (a + b).denominator) == 1
    assert (a + b).denominator >= 1


@given(st.fractions(max_denominator=10**4), st.integers(min_value=1, max_value=12))
def test_truncation_error_below_ulp(x, digits):
    rendered = truncate_decimal(x, digits)
    value = Fraction(rendered.replace(".", "")) / 10**digits
    if x < 0:
        assert 0 <= value - x < Fraction(1, 10**digits)
    else:
        assert 0 <= x - value < Fraction(1, 10**digits)
