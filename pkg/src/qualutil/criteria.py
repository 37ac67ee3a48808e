"""Worst-case (maximin) preference encoded as expected utility.

Rank n outcomes ``x0 < x1 < ... < x{n-1}`` and give outcome ``x_i`` the
utility ``-eps**-(n-1-i)``, so the worst outcome carries the most negative
infinite value and the best carries -1.  Under qualitative comparison of
expected utilities a two-outcome gamble is then judged by its worst outcome
first and by the probability of that worst outcome second, which is exactly
the worst-case ordering :func:`maximin_compare_oracle` states directly.

The tempting positive mirror image, utility ``eps**(n-1-i)``, does not work:
with positive infinitesimal powers the *largest* term dominates an expected
value, so comparisons collapse onto the best outcome instead of the worst.
:func:`best_case_power_utilities` keeps that assignment around as a
regression contrast; a test documents the disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import IndexOrder, InvalidWeight
from .nsreal import NSReal, eps
from .prefcore import Lottery, PrefOrdering, UtilityAssignment

__all__ = [
    "MaximinSpec",
    "maximin_utilities",
    "best_case_power_utilities",
    "maximin_compare_oracle",
    "two_point_lottery",
]

Weight = Union[int, Fraction]


@dataclass(frozen=True)
class MaximinSpec:
    """A linearly ordered outcome set ``x0 ... x{n-1}``, worst first."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError("need at least two ranked outcomes")

    @property
    def outcome_ids(self) -> tuple[str, ...]:
        return tuple(f"x{i}" for i in range(self.n))

    def outcome(self, index: int) -> str:
        if not 0 <= index < self.n:
            raise IndexError(f"outcome index {index} out of range 0..{self.n - 1}")
        return f"x{index}"


def maximin_utilities(spec: MaximinSpec) -> UtilityAssignment:
    """The signed assignment ``u(x_i) = -eps**-(n-1-i)``.

    Worst outcome most negative and infinitely so, best outcome -1; the
    expected value of any gamble is dominated by its worst outcome's term.
    """
    return UtilityAssignment.from_mapping(
        {spec.outcome(i): -eps(-(spec.n - 1 - i)) for i in range(spec.n)},
        signed=True,
    )


def best_case_power_utilities(spec: MaximinSpec) -> UtilityAssignment:
    """The nonnegative contrast ``u(x_i) = eps**(n-1-i)``.

    Kept only to document why it fails as a worst-case encoding: the best
    outcome's term has the smallest exponent and therefore dominates, so
    qualitative comparison ranks gambles by their *best* outcome.
    """
    return UtilityAssignment.from_mapping(
        {spec.outcome(i): eps(spec.n - 1 - i) for i in range(spec.n)}
    )


def _check_pair(spec: MaximinSpec, low: int, high: int) -> None:
    if not (0 <= low < spec.n and 0 <= high < spec.n):
        raise IndexError(f"outcome indices ({low}, {high}) out of range 0..{spec.n - 1}")
    if low >= high:
        raise IndexOrder(f"expected low < high, got ({low}, {high})")


def _check_weight(weight: Weight) -> Fraction:
    w = Fraction(weight)
    if not 0 < w < 1:
        raise InvalidWeight("gamble weight must lie strictly between 0 and 1")
    return w


def two_point_lottery(spec: MaximinSpec, low: int, weight: Weight, high: int) -> Lottery:
    """The gamble paying ``x_low`` with probability ``weight``, else ``x_high``."""
    _check_pair(spec, low, high)
    w = _check_weight(weight)
    return Lottery.from_mapping({spec.outcome(low): w, spec.outcome(high): 1 - w})


def maximin_compare_oracle(
    spec: MaximinSpec,
    low: int,
    weight: Weight,
    high: int,
    other_low: int,
    other_weight: Weight,
    other_high: int,
) -> PrefOrdering:
    """Worst-case ordering of two two-point gambles, stated directly.

    The gamble with the worse worst outcome loses; between equal worst
    outcomes the higher probability of hitting that worst outcome loses;
    otherwise the gambles are indifferent (upside is ignored entirely).
    """
    _check_pair(spec, low, high)
    _check_pair(spec, other_low, other_high)
    w = _check_weight(weight)
    other_w = _check_weight(other_weight)
    if low < other_low:
        return PrefOrdering.WORSE
    if low > other_low:
        return PrefOrdering.BETTER
    if w > other_w:
        return PrefOrdering.WORSE
    if w < other_w:
        return PrefOrdering.BETTER
    return PrefOrdering.INDIFFERENT
