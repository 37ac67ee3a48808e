"""Tests for the worst-case preference encoding."""

import itertools
import random
from fractions import Fraction

import pytest

from qualutil import (
    IndexOrder,
    InvalidWeight,
    MaximinSpec,
    PrefOrdering,
    best_case_power_utilities,
    eps,
    maximin_compare_oracle,
    maximin_utilities,
    qualitative_prefers,
    two_point_lottery,
)

F = Fraction


def test_spec_requires_at_least_two_outcomes():
    with pytest.raises(ValueError):
        MaximinSpec(1)
    spec = MaximinSpec(3)
    assert spec.outcome_ids == ("x0", "x1", "x2")
    assert spec.outcome(2) == "x2"
    with pytest.raises(IndexError):
        spec.outcome(3)
    with pytest.raises(IndexError):
        spec.outcome(-1)


def test_utilities_are_signed_negative_powers():
    spec = MaximinSpec(3)
    utilities = maximin_utilities(spec)
    assert utilities.signed
    assert utilities.utility("x0") == -eps(-2)
    assert utilities.utility("x1") == -eps(-1)
    assert utilities.utility("x2") == -eps(0)
    # Worst outcome carries the most negative value.
    assert utilities.utility("x0") < utilities.utility("x1") < utilities.utility("x2")


def test_two_point_lottery_shape_and_validation():
    spec = MaximinSpec(4)
    gamble = two_point_lottery(spec, 1, F(1, 4), 3)
    assert gamble.probability("x1") == F(1, 4)
    assert gamble.probability("x3") == F(3, 4)
    with pytest.raises(IndexOrder):
        two_point_lottery(spec, 2, F(1, 2), 2)
    with pytest.raises(IndexOrder):
        two_point_lottery(spec, 3, F(1, 2), 1)
    with pytest.raises(IndexError):
        two_point_lottery(spec, 0, F(1, 2), 4)
    with pytest.raises(InvalidWeight):
        two_point_lottery(spec, 0, F(0), 1)
    with pytest.raises(InvalidWeight):
        two_point_lottery(spec, 0, F(5, 4), 1)


def test_oracle_ranks_by_worst_outcome_then_its_probability():
    spec = MaximinSpec(4)
    # Different worst outcomes: the better floor wins regardless of weights.
    assert (
        maximin_compare_oracle(spec, 1, F(7, 8), 2, 0, F(1, 8), 3)
        is PrefOrdering.BETTER
    )
    # Same floor: less chance of hitting it wins.
    assert (
        maximin_compare_oracle(spec, 1, F(1, 4), 3, 1, F(1, 2), 2)
        is PrefOrdering.BETTER
    )
    # Same floor, same chance: upside is ignored entirely.
    assert (
        maximin_compare_oracle(spec, 1, F(1, 2), 3, 1, F(1, 2), 2)
        is PrefOrdering.INDIFFERENT
    )


def test_expected_utility_comparison_matches_oracle_exhaustively():
    spec = MaximinSpec(3)
    utilities = maximin_utilities(spec)
    weights = [F(k, 4) for k in range(1, 4)]
    gambles = [
        (low, w, high)
        for low, high in itertools.combinations(range(3), 2)
        for w in weights
    ]
    for first, second in itertools.product(gambles, repeat=2):
        expected = maximin_compare_oracle(spec, *first, *second)
        actual = qualitative_prefers(
            two_point_lottery(spec, *first),
            two_point_lottery(spec, *second),
            utilities,
        )
        assert actual is expected, (first, second)


def test_expected_utility_comparison_matches_oracle_sampled_at_larger_n():
    spec = MaximinSpec(6)
    utilities = maximin_utilities(spec)
    rng = random.Random(6)
    for _ in range(300):
        low, high = sorted(rng.sample(range(6), 2))
        other_low, other_high = sorted(rng.sample(range(6), 2))
        w = F(rng.randint(1, 11), 12)
        other_w = F(rng.randint(1, 11), 12)
        expected = maximin_compare_oracle(
            spec, low, w, high, other_low, other_w, other_high
        )
        actual = qualitative_prefers(
            two_point_lottery(spec, low, w, high),
            two_point_lottery(spec, other_low, other_w, other_high),
            utilities,
        )
        assert actual is expected


def test_positive_power_contrast_ranks_by_best_outcome_instead():
    # The nonnegative mirror image grades gambles by their upside, so it
    # disagrees with the worst-case oracle: raising the floor from x0 to x1
    # while keeping the x2 upside should matter, but the contrast encoding
    # is indifferent to it.
    spec = MaximinSpec(3)
    contrast = best_case_power_utilities(spec)
    assert not contrast.signed
    floor_raised = two_point_lottery(spec, 1, F(1, 2), 2)
    floor_low = two_point_lottery(spec, 0, F(1, 2), 2)
    assert (
        maximin_compare_oracle(spec, 1, F(1, 2), 2, 0, F(1, 2), 2)
        is PrefOrdering.BETTER
    )
    assert (
        qualitative_prefers(floor_raised, floor_low, contrast)
        is PrefOrdering.INDIFFERENT
    )
