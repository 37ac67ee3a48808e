"""Lotteries, utility assignments, and the preference comparisons they induce.

A lottery assigns exact nonnegative probabilities summing to one to finitely
many outcome ids; a utility assignment maps outcome ids to ring values.
Preference between lotteries is always decided through expected utility, but
the comparison applied to the two expected values depends on the regime:

* ``STD``: everything standard, plain comparison of rationals.
* ``NS_UTIL``: standard probabilities, possibly nonstandard utilities; the
  qualitative order on expected utilities decides preference, so gaps that
  are infinitesimal relative to the stakes do not register.
* ``NS_PROB``: nonstandard probabilities, standard utilities; preference
  compares the standard parts of expected utilities.

:func:`qualitative_prefers` exposes the regime-free qualitative comparison
of exact expected utilities directly; it coincides with ``prefers`` in the
first two regimes and is what the command line ``compare`` subcommand
reports.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum, unique
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import (
    ConsistencyError,
    InvalidWeight,
    MissingUtility,
    PreconditionViolated,
)
from .nsreal import NSReal, ONE, QOrdering, ZERO, qcompare, rational
from .solver import AffineValue, RationalIntervalSet, partition_affine_comparison

__all__ = [
    "Regime",
    "PrefOrdering",
    "Lottery",
    "UtilityAssignment",
    "mix",
    "expected_utility",
    "case1_functional",
    "compare_values",
    "prefers",
    "qualitative_prefers",
    "overrides",
    "overrides_values",
    "close_under_mixtures",
    "grid_weights",
    "is_negligible",
    "check_property_P",
    "PropertyPReport",
]

Weight = Union[int, Fraction, NSReal]


@unique
class Regime(Enum):
    STD = "std"
    NS_UTIL = "ns-util"
    NS_PROB = "ns-prob"


@unique
class PrefOrdering(Enum):
    BETTER = "better"
    INDIFFERENT = "indifferent"
    WORSE = "worse"

    def flipped(self) -> "PrefOrdering":
        if self is PrefOrdering.BETTER:
            return PrefOrdering.WORSE
        if self is PrefOrdering.WORSE:
            return PrefOrdering.BETTER
        return self


_PREF_FROM_Q = {
    QOrdering.GREATER: PrefOrdering.BETTER,
    QOrdering.EQUIVALENT: PrefOrdering.INDIFFERENT,
    QOrdering.LESS: PrefOrdering.WORSE,
}


def _coerce_weight(value: Weight) -> NSReal:
    if isinstance(value, NSReal):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as a mixture weight")


@dataclass(frozen=True)
class Lottery:
    """A finite probability distribution over outcome ids.

    ``probs`` is sorted by outcome id and stores no zero entries, so equal
    distributions compare and hash equal.
    """

    probs: tuple[tuple[str, NSReal], ...]

    @staticmethod
    def from_mapping(mapping: Mapping[str, Weight]) -> "Lottery":
        entries = []
        total = ZERO
        for outcome in sorted(mapping):
            p = _coerce_weight(mapping[outcome])
            if p.sign() < 0:
                raise ValueError(f"negative probability for outcome {outcome!r}")
            total = total + p
            if not p.is_zero():
                entries.append((outcome, p))
        if total != ONE:
            raise ValueError("probabilities must sum to exactly 1")
        if not entries:
            raise ValueError("a lottery needs at least one outcome")
        return Lottery(tuple(entries))

    @staticmethod
    def degenerate(outcome: str) -> "Lottery":
        return Lottery(((outcome, ONE),))

    @property
    def support(self) -> tuple[str, ...]:
        return tuple(outcome for outcome, _ in self.probs)

    def probability(self, outcome: str) -> NSReal:
        for candidate, p in self.probs:
            if candidate == outcome:
                return p
        return ZERO

    def is_standard(self) -> bool:
        return all(p.is_standard() for _, p in self.probs)


@dataclass(frozen=True)
class UtilityAssignment:
    """Outcome utilities.  Values must be nonnegative unless ``signed``."""

    utilities: tuple[tuple[str, NSReal], ...]
    signed: bool = False

    @staticmethod
    def from_mapping(mapping: Mapping[str, NSReal], signed: bool = False) -> "UtilityAssignment":
        entries = []
        for outcome in sorted(mapping):
            value = mapping[outcome]
            if not isinstance(value, NSReal):
                raise TypeError(f"utility of {outcome!r} must be an NSReal")
            if not signed and value.sign() < 0:
                raise ValueError(
                    f"negative utility for outcome {outcome!r}; pass signed=True on purpose"
                )
            entries.append((outcome, value))
        return UtilityAssignment(tuple(entries), signed)

    @property
    def outcomes(self) -> tuple[str, ...]:
        return tuple(outcome for outcome, _ in self.utilities)

    def utility(self, outcome: str) -> NSReal:
        for candidate, value in self.utilities:
            if candidate == outcome:
                return value
        raise MissingUtility(f"no utility assigned to outcome {outcome!r}")

    def values(self) -> tuple[NSReal, ...]:
        return tuple(value for _, value in self.utilities)

    def is_standard(self) -> bool:
        return all(value.is_standard() for _, value in self.utilities)


def _check_unit_weight(weight: NSReal) -> None:
    if weight.sign() <= 0 or (ONE - weight).sign() <= 0:
        raise InvalidWeight("mixture weight must lie strictly between 0 and 1")


def mix(weight: Weight, first: Lottery, second: Lottery, regime: Regime | None = None) -> Lottery:
    """The compound lottery ``weight*first + (1 - weight)*second``.

    In regimes STD and NS_UTIL the weight must be a standard rational;
    NS_PROB admits nonstandard weights.  Pass ``regime=None`` to skip the
    standardness restriction.
    """
    w = _coerce_weight(weight)
    _check_unit_weight(w)
    if regime in (Regime.STD, Regime.NS_UTIL) and not w.is_standard():
        raise InvalidWeight(f"regime {regime.value} requires a standard mixture weight")
    combined: dict[str, NSReal] = {}
    for outcome, p in first.probs:
        combined[outcome] = combined.get(outcome, ZERO) + w * p
    complement = ONE - w
    for outcome, p in second.probs:
        combined[outcome] = combined.get(outcome, ZERO) + complement * p
    return Lottery.from_mapping(combined)


def expected_utility(lottery: Lottery, assignment: UtilityAssignment) -> NSReal:
    """Exact expected utility; linear in the lottery by construction."""
    total = ZERO
    for outcome, p in lottery.probs:
        total = total + p * assignment.utility(outcome)
    return total


def case1_functional(lottery: Lottery, assignment: UtilityAssignment) -> Fraction:
    """Standard part of the expected utility.

    This is the standard-valued functional that decides preference when
    probabilities are nonstandard but utilities are standard; it is
    pseudo-linear rather than linear: mixing commutes with it only up to
    an infinitesimal.
    """
    return expected_utility(lottery, assignment).standard_part()


def compare_values(left: NSReal, right: NSReal, regime: Regime) -> PrefOrdering:
    """Order two expected utilities under the given regime's comparison."""
    if regime is Regime.NS_UTIL:
        return _PREF_FROM_Q[qcompare(left, right)]
    if regime is Regime.NS_PROB:
        left, right = rational(left.standard_part()), rational(right.standard_part())
    sign = (left - right).sign()
    if sign > 0:
        return PrefOrdering.BETTER
    if sign < 0:
        return PrefOrdering.WORSE
    return PrefOrdering.INDIFFERENT


def prefers(
    first: Lottery,
    second: Lottery,
    assignment: UtilityAssignment,
    regime: Regime,
) -> PrefOrdering:
    """Preference between two lotteries under the regime's comparison rule."""
    return compare_values(
        expected_utility(first, assignment),
        expected_utility(second, assignment),
        regime,
    )


def qualitative_prefers(
    first: Lottery,
    second: Lottery,
    assignment: UtilityAssignment,
) -> PrefOrdering:
    """Preference by qualitative comparison of exact expected utilities.

    Regime-free: nonstandard probabilities and utilities both feed the same
    qualitative order, which is what makes an infinitesimal chance of a
    prize still worth more than a twelfth of that chance.
    """
    return _PREF_FROM_Q[
        qcompare(expected_utility(first, assignment), expected_utility(second, assignment))
    ]


def overrides_values(dominant: NSReal, dominated: NSReal) -> bool:
    """Value-level overriding: the dominated stake is negligible besides the
    dominant one, so mixtures weighted toward ``dominant`` drown it out.

    Both values must be nonnegative.  True exactly when ``dominant``
    qualitatively exceeds ``dominated`` and ``dominated`` is either zero or
    of strictly smaller order of magnitude.
    """
    if dominant.sign() < 0 or dominated.sign() < 0:
        raise PreconditionViolated("overriding is defined for nonnegative values only")
    if qcompare(dominant, dominated) is not QOrdering.GREATER:
        return False
    if dominated.is_zero():
        return True
    lead_dominant = dominant.leading_exponent()
    lead_dominated = dominated.leading_exponent()
    assert lead_dominant is not None and lead_dominated is not None
    return lead_dominated > lead_dominant


def overrides(
    first: Lottery,
    second: Lottery,
    assignment: UtilityAssignment,
) -> bool:
    """Whether ``first`` does not merely beat ``second`` but overrides it:
    mixing in any amount of ``first`` makes the comparison against anything
    below ``second`` collapse to indifference.

    Decided by the exact order-of-magnitude rule on expected utilities;
    the equivalence of that rule with the definitional quantifier over
    weights and lower alternatives is covered by the test suite.  Requires
    a nonnegative (unsigned) utility assignment.
    """
    if assignment.signed:
        raise PreconditionViolated("overriding requires nonnegative utilities")
    return overrides_values(
        expected_utility(first, assignment),
        expected_utility(second, assignment),
    )


def grid_weights(denominator: int) -> tuple[Fraction, ...]:
    """The standard weights k/denominator, 0 < k < denominator."""
    if denominator < 2:
        raise InvalidWeight("grid denominator must be at least 2")
    return tuple(Fraction(k, denominator) for k in range(1, denominator))


def close_under_mixtures(
    lotteries: Iterable[Lottery],
    denominator: int = 8,
    depth: int = 2,
) -> tuple[Lottery, ...]:
    """Close a finite lottery set under grid-weight mixing.

    Each round mixes every unordered pair of the current set with every
    weight k/denominator and adds the (exactly deduplicated) results;
    ``depth`` rounds are applied.  Deterministic: order of first appearance
    is preserved.
    """
    weights = grid_weights(denominator)
    current: dict[Lottery, None] = dict.fromkeys(lotteries)
    if not current:
        raise ValueError("need at least one lottery to close")
    for _ in range(depth):
        additions: dict[Lottery, None] = {}
        items = tuple(current)
        for i, first in enumerate(items):
            for second in items[i + 1 :]:
                for w in weights:
                    mixed = mix(w, first, second)
                    if mixed not in current:
                        additions[mixed] = None
        if not additions:
            break
        current.update(additions)
    return tuple(current)


def is_negligible(
    weight: Weight,
    assignment: UtilityAssignment,
    generators: Iterable[Lottery],
    denominator: int = 8,
    depth: int = 1,
) -> bool:
    """Whether a mixture weight is too small to ever matter here: mixing any
    lottery in with this weight leaves every lottery of the closed set
    indifferent to what it was.

    This is relative to the generated lottery set.  When the set separates
    at least two lotteries, negligibility coincides with the weight being
    infinitesimal; that analytic shortcut is cross-checked against the
    definitional sweep and a disagreement raises ConsistencyError.
    """
    w = _coerce_weight(weight)
    _check_unit_weight(w)
    pool = close_under_mixtures(generators, denominator=denominator, depth=depth)
    values = [expected_utility(lottery, assignment) for lottery in pool]

    definitional = True
    for value_p, value_q in itertools.product(values, repeat=2):
        mixed_value = w * value_p + (ONE - w) * value_q
        if compare_values(mixed_value, value_q, Regime.NS_PROB) is not PrefOrdering.INDIFFERENT:
            definitional = False
            break

    parts = {value.standard_part() for value in values}
    if len(parts) > 1 and definitional != w.is_infinitesimal():
        raise ConsistencyError(
            "negligibility sweep disagrees with the infinitesimal test on a separating set"
        )
    return definitional


@dataclass(frozen=True)
class PropertyPReport:
    """Existence and shape of the indifference weight between a best, a
    middle, and a worst lottery.

    ``indifference_set`` collects every standard weight a with
    ``a*best + (1-a)*worst`` indifferent to the middle lottery; ``better_set``
    and ``worse_set`` partition the rest of (0, 1).  ``holds`` means some
    indifference weight exists; ``unique_weight`` is set when it is a single
    rational.  ``monotone`` records the threshold shape: worse below,
    indifferent across, better above.  ``failure`` is None when the property
    holds, otherwise "all_better", "all_worse", or "no_indifference".
    """

    holds: bool
    indifference_set: RationalIntervalSet
    better_set: RationalIntervalSet
    worse_set: RationalIntervalSet
    unique_weight: Fraction | None
    monotone: bool
    failure: str | None


def check_property_P(
    middle: Lottery,
    best: Lottery,
    worst: Lottery,
    assignment: UtilityAssignment,
    regime: Regime,
) -> PropertyPReport:
    """Look for a calibration weight: mixing best and worst to hit exact
    indifference with the middle lottery.

    Requires ``best > middle > worst`` under the regime's comparison.  The
    answer is computed exactly over all standard weights in (0, 1); with
    overriding stakes in play the indifference set can be empty, every
    standard mixture landing strictly on one side.
    """
    if prefers(best, middle, assignment, regime) is not PrefOrdering.BETTER:
        raise PreconditionViolated("best lottery must beat the middle one")
    if prefers(middle, worst, assignment, regime) is not PrefOrdering.BETTER:
        raise PreconditionViolated("middle lottery must beat the worst one")

    comparison = {
        Regime.STD: "quantitative",
        Regime.NS_UTIL: "qualitative",
        Regime.NS_PROB: "standard-part",
    }[regime]
    mixture = AffineValue(
        expected_utility(best, assignment), expected_utility(worst, assignment)
    )
    target_value = expected_utility(middle, assignment)
    target = AffineValue(target_value, target_value)
    parts = partition_affine_comparison(mixture, target, comparison)
    empty = RationalIntervalSet()
    indifference = parts.get(QOrdering.EQUIVALENT, empty)
    better = parts.get(QOrdering.GREATER, empty)
    worse = parts.get(QOrdering.LESS, empty)

    unique_weight = None
    if len(indifference.intervals) == 1 and indifference.intervals[0].is_point():
        unique_weight = indifference.intervals[0].lo

    monotone = _is_threshold_shaped(worse, indifference, better)

    failure: str | None = None
    if indifference.is_empty:
        if better.is_entire_unit_interval():
            failure = "all_better"
        elif worse.is_entire_unit_interval():
            failure = "all_worse"
        else:
            failure = "no_indifference"

    return PropertyPReport(
        holds=not indifference.is_empty,
        indifference_set=indifference,
        better_set=better,
        worse_set=worse,
        unique_weight=unique_weight,
        monotone=monotone,
        failure=failure,
    )


def _upper_bound(piece_set: RationalIntervalSet) -> Fraction | None:
    if piece_set.is_empty:
        return None
    return piece_set.intervals[-1].hi


def _lower_bound(piece_set: RationalIntervalSet) -> Fraction | None:
    if piece_set.is_empty:
        return None
    return piece_set.intervals[0].lo


def _is_threshold_shaped(
    worse: RationalIntervalSet,
    indifferent: RationalIntervalSet,
    better: RationalIntervalSet,
) -> bool:
    """Worse weights below indifferent weights below better weights, each
    region connected."""
    for region in (worse, indifferent, better):
        if len(region.intervals) > 1:
            return False
    boundary_pairs = [(worse, indifferent), (worse, better), (indifferent, better)]
    for low_region, high_region in boundary_pairs:
        hi = _upper_bound(low_region)
        lo = _lower_bound(high_region)
        if hi is not None and lo is not None and hi > lo:
            return False
    return True
