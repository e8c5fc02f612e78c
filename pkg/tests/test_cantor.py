import math
from fractions import Fraction

import pytest

from emeasure.cantor import (
    CONDITIONAL,
    IRRATIONAL,
    RATIONAL,
    CantorSpec,
    cantor_partial_sum,
    classify,
    complement_family,
    masked_unit_family,
    rational_limit,
    term,
    unit_family,
)
from emeasure.enclosure import partial_sum


def test_unit_family_is_irrational():
    verdict = classify(unit_family(a0=2))
    assert verdict.classification == IRRATIONAL
    assert verdict.rational_value is None


def test_complement_family_sums_to_one():
    verdict = classify(complement_family(a0=0))
    assert verdict.classification == RATIONAL
    assert verdict.rational_value == 1


def test_masked_families_irrational():
    assert classify(masked_unit_family((1, 0))).classification == IRRATIONAL
    assert classify(masked_unit_family((0, 1))).classification == IRRATIONAL
    assert classify(masked_unit_family((0,))).classification == RATIONAL


def test_unit_partial_sums_match_e_partial_sums():
    # b_1...b_n = (n+1)!, so the unit family reproduces s_{N+1}.
    spec = unit_family(a0=2)
    for N in range(0, 41):
        assert cantor_partial_sum(spec, N) == partial_sum(N + 1)
    assert cantor_partial_sum(spec, 3) == Fraction(65, 24)


def test_complement_partial_sums_telescope():
    spec = complement_family(a0=0)
    for N in range(0, 21):
        assert cantor_partial_sum(spec, N) == 1 - Fraction(1, math.factorial(N + 1))


def test_partial_sum_at_zero_is_a0():
    for spec in (unit_family(7), complement_family(7), masked_unit_family((1,), 7)):
        assert cantor_partial_sum(spec, 0) == 7


def test_partial_sums_monotone():
    for spec in (unit_family(0), masked_unit_family((1, 0, 0))):
        sums = [cantor_partial_sum(spec, N) for N in range(30)]
        assert all(a <= b for a, b in zip(sums, sums[1:]))


def test_limit_within_tail_bound():
    # limit in [sum_N, sum_N + 1/(b_1...b_N)] for the rational families.
    spec = complement_family(a0=0)
    for N in (10, 20):
        lower = cantor_partial_sum(spec, N)
        product = math.prod(term(spec, n)[1] for n in range(1, N + 1))
        assert lower <= rational_limit(spec) <= lower + Fraction(1, product)


def test_rational_limit_all_zero():
    spec = CantorSpec(a0=7, family="custom", a_table=(0,), b_table=(2,), tail_mode="all-zero")
    assert classify(spec).rational_value == 7


def test_rational_limit_finite_head():
    spec = CantorSpec(
        a0=3, family="custom", a_table=(1,), b_table=(2,), tail_mode="all-zero"
    )
    assert rational_limit(spec) == Fraction(7, 2)


def test_rational_limit_rejects_irrational_spec():
    with pytest.raises(ValueError):
        rational_limit(unit_family(2))


def test_custom_all_complement_tail():
    spec = CantorSpec(
        a0=0, family="custom", a_table=(0, 1), b_table=(3, 4), tail_mode="all-complement"
    )
    verdict = classify(spec)
    assert verdict.classification == RATIONAL
    # head: 0 + 0/3 + 1/12; tail telescopes to 1/12.
    assert verdict.rational_value == Fraction(1, 12) + Fraction(1, 12)
    # Numerical cross-check against a long partial sum.
    sum_40 = cantor_partial_sum(spec, 40)
    assert 0 < verdict.rational_value - sum_40 < Fraction(1, 10**20)


def test_custom_conditional_without_prime_assertion():
    spec = CantorSpec(
        a0=0, family="custom", a_table=(1, 0), b_table=(2, 3),
        tail_mode="repeat-last-block",
    )
    verdict = classify(spec)
    assert verdict.classification == CONDITIONAL


def test_custom_irrational_with_asserted_primes():
    spec = CantorSpec(
        a0=0, family="custom", a_table=(1, 0), b_table=(2, 3),
        tail_mode="repeat-last-block",
        all_primes_divide_infinitely_many_b=True,
    )
    verdict = classify(spec)
    assert verdict.classification == IRRATIONAL
    assert any("asserted" in c for c in verdict.conditions_used)


def test_term_bounds_enforced():
    with pytest.raises(ValueError) as err:
        CantorSpec(a0=0, family="custom", a_table=(5,), b_table=(3,))
    assert "a_1" in str(err.value)
    with pytest.raises(ValueError):
        CantorSpec(a0=0, family="custom", a_table=(0,), b_table=(1,))


def test_bad_family_and_mask_rejected():
    with pytest.raises(ValueError):
        CantorSpec(family="bogus")
    with pytest.raises(ValueError):
        CantorSpec(family="masked_unit", mask=(2,))
