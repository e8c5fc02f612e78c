import math
from fractions import Fraction

import pytest

from emeasure.kempner import is_prime
from emeasure.measures import (
    check_known,
    check_prime_factor_bound,
    check_sharpness,
    check_theorem1,
    check_weak_prime,
    compare_bounds,
    corollary2_scan,
    factorial_square_boundary,
    known_measure_bound,
    nearest_p_candidates,
    prime_factor_bound,
    theorem1_bound,
    weak_prime_bound,
)


def test_theorem1_bound_values():
    assert theorem1_bound(24) == Fraction(1, 120)
    assert theorem1_bound(6) == Fraction(1, 24)
    assert theorem1_bound(2) == Fraction(1, 6)


def test_theorem1_bound_rejects_q1():
    with pytest.raises(ValueError):
        theorem1_bound(1)


def test_check_theorem1_examples():
    v = check_theorem1(65, 24)
    assert v.holds and v.bound == Fraction(1, 120)
    # margin = 0.00994... - 0.00833... = 0.00161...
    assert v.margin_digits.startswith("0.0016")
    assert check_theorem1(8, 3).holds
    assert check_theorem1(3, 2).holds


def test_weak_prime_is_never_stronger():
    for q in range(2, 200):
        assert theorem1_bound(q) >= weak_prime_bound(q)
        assert check_weak_prime(1, q).bound == Fraction(1, math.factorial(q + 1))


def test_sharpness():
    for n in range(3, 13):
        assert check_sharpness(n)
    with pytest.raises(ValueError):
        check_sharpness(2)


def test_prime_factor_bound_failure_at_65_24():
    assert not check_prime_factor_bound(65, 24).holds
    assert check_theorem1(65, 24).holds


def test_prime_q_bounds_coincide():
    for q in (3, 7, 97):
        assert prime_factor_bound(q) == theorem1_bound(q)
        for p in nearest_p_candidates(q):
            assert (
                check_prime_factor_bound(p, q).holds
                == check_theorem1(p, q).holds
            )


def test_corollary2_biconditional():
    for n in range(2, 13):
        scan = corollary2_scan(n)
        assert scan["prime"] == is_prime(n)
        assert scan["all_hold"] == scan["prime"]
    assert corollary2_scan(4)["witness"] == (65, 24)
    assert corollary2_scan(5)["witness"] is None
    assert corollary2_scan(2)["all_hold"]


def test_theorem1_sweep_small():
    for q in range(2, 301):
        for p in nearest_p_candidates(q):
            assert check_theorem1(p, q).holds, (p, q)


def test_known_measure_bound_integer_eps():
    assert known_measure_bound(3, Fraction(0)) == Fraction(1, 9)
    assert known_measure_bound(24, Fraction(0)) == Fraction(1, 576)
    assert known_measure_bound(2, Fraction(1)) == Fraction(1, 8)


def test_known_measure_bound_fractional_eps_is_lower_bound():
    # bound <= 1/q^(2+eps) i.e. bound^d * q^(2d+c) <= 1, checked in integers.
    for q in (2, 3, 24, 720):
        for eps in (Fraction(1, 2), Fraction(1, 3), Fraction(2, 5)):
            bound = known_measure_bound(q, eps)
            c, d = eps.numerator, eps.denominator
            assert bound.numerator**d * q ** (2 * d + c) <= bound.denominator**d
            # And not absurdly small: within a factor of 2 of the target.
            doubled = 2 * bound
            assert doubled.numerator**d * q ** (2 * d + c) > doubled.denominator**d


def test_check_known_verdict():
    assert check_known(65, 24).holds  # 1/576 < 0.00994
    # The classical measure only holds for q >= q(eps); convergents satisfy
    # the reverse inequality, so 19/7 must fail at eps = 0.
    assert not check_known(19, 7).holds


def test_compare_bounds_examples():
    assert compare_bounds(2)["conjecture1_holds_at_q"] is False  # 4 >= 2!
    assert compare_bounds(4)["conjecture1_holds_at_q"] is True  # 16 < 24
    result = compare_bounds(720, Fraction(0))
    assert result["stronger"] == "theorem1"  # 7! = 5040 < 720^2


def test_factorial_square_boundary():
    assert not factorial_square_boundary(2)
    for n in range(3, 101):
        assert factorial_square_boundary(n)
