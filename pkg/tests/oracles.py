"""Independent reference computations used to cross-check the library.

Everything here is deliberately written from first principles rather than by
calling back into the code paths under test: the comparison oracle works on
raw coefficient dictionaries via Laurent long division, and the overriding
oracle spells out the defining quantifier over mixtures instead of using the
closed-form rule shipped in the package.
"""

from __future__ import annotations

import random
from fractions import Fraction

from qualutil import (
    AAModel,
    Act,
    Lottery,
    NSReal,
    PrefStructure,
    QOrdering,
    Regime,
    UtilityAssignment,
    eps,
    qcompare,
    rational,
)

# --- ratio-based comparison oracle -----------------------------------------


def _term_dict(value: NSReal) -> dict[int, Fraction]:
    return {exponent: coefficient for exponent, coefficient in value.terms}


def _lead(terms: dict[int, Fraction]) -> tuple[int, Fraction]:
    exponent = min(terms)
    return exponent, terms[exponent]


def _subtract_scaled(
    minuend: dict[int, Fraction],
    factor_exp: int,
    factor_coeff: Fraction,
    series: dict[int, Fraction],
) -> dict[int, Fraction]:
    result = dict(minuend)
    for exponent, coefficient in series.items():
        shifted = exponent + factor_exp
        updated = result.get(shifted, Fraction(0)) - factor_coeff * coefficient
        if updated:
            result[shifted] = updated
        else:
            result.pop(shifted, None)
    return result


def standard_part_of_ratio(numerator: NSReal, denominator: NSReal) -> Fraction:
    """Coefficient of the constant term in the series numerator/denominator.

    Computed by long division of Laurent polynomials, carried out until the
    remainder can no longer contribute to exponent zero.  The denominator
    must be nonzero.
    """

    num = _term_dict(numerator)
    den = _term_dict(denominator)
    if not den:
        raise ZeroDivisionError("division by zero")
    den_exp, den_coeff = _lead(den)
    constant = Fraction(0)
    while num:
        rem_exp, rem_coeff = _lead(num)
        quotient_exp = rem_exp - den_exp
        if quotient_exp > 0:
            break
        quotient_coeff = rem_coeff / den_coeff
        if quotient_exp == 0:
            constant = quotient_coeff
        num = _subtract_scaled(num, quotient_exp, quotient_coeff, den)
    return constant


def ratio_compare(left: NSReal, right: NSReal) -> QOrdering:
    """Comparison of two positive magnitudes via the ratio definition.

    ``left`` strictly exceeds ``right`` exactly when the relative shortfall
    ``(left - right) / left`` has a positive standard part, i.e. when the gap
    is a non-negligible fraction of the larger magnitude.
    """

    difference = left - right
    direction = difference.sign()
    if direction == 0:
        return QOrdering.EQUIVALENT
    if direction > 0:
        ratio = standard_part_of_ratio(difference, left)
        return QOrdering.GREATER if ratio > 0 else QOrdering.EQUIVALENT
    ratio = standard_part_of_ratio(-difference, right)
    return QOrdering.LESS if ratio > 0 else QOrdering.EQUIVALENT


# --- brute-force overriding oracle ------------------------------------------


def brute_force_overrides(
    top: NSReal,
    bottom: NSReal,
    pool: list[NSReal],
    denominator: int = 8,
) -> bool:
    """Overriding spelled out as its defining mixture quantifier.

    ``top`` overrides ``bottom`` when ``top`` strictly exceeds ``bottom`` and
    mixing ``top`` with anything at or below ``bottom`` is equivalent to
    mixing it with ``bottom`` itself, at every mixing weight.  The quantifier
    over "anything below" ranges over ``pool`` extended with halves and zero,
    and the weight quantifier over a grid; both are thorough enough because a
    violation at one weight persists at every weight.
    """

    if qcompare(top, bottom) is not QOrdering.GREATER:
        return False
    half = Fraction(1, 2)
    candidates = list(pool) + [value * half for value in pool] + [rational(0)]
    weights = [Fraction(k, denominator) for k in range(1, denominator)]
    for low in candidates:
        if low.sign() < 0:
            continue
        if qcompare(bottom, low) is QOrdering.LESS:
            continue
        for weight in weights:
            mixed_low = top * weight + low * (1 - weight)
            mixed_bottom = top * weight + bottom * (1 - weight)
            if qcompare(mixed_low, mixed_bottom) is not QOrdering.EQUIVALENT:
                return False
    return True


# --- random model generators -------------------------------------------------


STANDARD_POOL = [
    Fraction(0),
    Fraction(1),
    Fraction(1, 2),
    Fraction(1, 3),
    Fraction(2, 3),
    Fraction(1, 4),
    Fraction(3, 4),
    Fraction(2),
    Fraction(5, 2),
]


def _standard_utility_pool(rng: random.Random) -> list[NSReal]:
    return [rational(value) for value in rng.sample(STANDARD_POOL, 4)]


def _nonstandard_utility_pool(rng: random.Random) -> list[NSReal]:
    candidates = [
        rational(0),
        rational(1),
        rational(Fraction(1, 2)),
        rational(2),
        eps(),
        eps() * Fraction(1, 3),
        eps(2),
        rational(1) + eps(),
        rational(Fraction(1, 2)) - eps(),
        eps(-1),
    ]
    return rng.sample(candidates, 4)


def _random_simplex(rng: random.Random, size: int, denominator: int) -> list[Fraction]:
    cuts = sorted(rng.randrange(denominator + 1) for _ in range(size - 1))
    weights = []
    previous = 0
    for cut in cuts:
        weights.append(Fraction(cut - previous, denominator))
        previous = cut
    weights.append(Fraction(denominator - previous, denominator))
    return weights


def random_lottery(rng: random.Random, outcomes: list[str]) -> Lottery:
    while True:
        chosen = rng.sample(outcomes, rng.randint(1, min(3, len(outcomes))))
        weights = _random_simplex(rng, len(chosen), 6)
        mapping = {
            outcome: rational(weight)
            for outcome, weight in zip(chosen, weights)
            if weight
        }
        if mapping:
            return Lottery.from_mapping(mapping)


def random_nonstandard_lottery(rng: random.Random, outcomes: list[str]) -> Lottery:
    lottery = random_lottery(rng, outcomes)
    items = dict(lottery.probs)
    if len(items) >= 2 and rng.random() < 0.7:
        tilt = eps() * Fraction(1, rng.randint(1, 4))
        first, second = sorted(items)[:2]
        items[first] = items[first] + tilt
        items[second] = items[second] - tilt
        if all(value.sign() > 0 for value in items.values()):
            return Lottery.from_mapping(items)
    return lottery


def random_structure(
    rng: random.Random,
    regime: Regime,
    generator_count: int = 3,
    grid_denominator: int = 4,
    closure_depth: int = 1,
) -> PrefStructure:
    """A small random preference structure suitable for exhaustive audits."""

    outcomes = ["a", "b", "c", "d"]
    if regime is Regime.NS_UTIL:
        pool = _nonstandard_utility_pool(rng)
    else:
        pool = _standard_utility_pool(rng)
    utilities = UtilityAssignment.from_mapping(
        {outcome: value for outcome, value in zip(outcomes, pool)}
    )
    builder = (
        random_nonstandard_lottery if regime is Regime.NS_PROB else random_lottery
    )
    generators = tuple(builder(rng, outcomes) for _ in range(generator_count))
    return PrefStructure(
        regime=regime,
        utilities=utilities,
        generators=generators,
        grid_denominator=grid_denominator,
        closure_depth=closure_depth,
    )


def random_acts_structure(
    rng: random.Random,
    regime: Regime = Regime.STD,
    state_count: int = 3,
    act_count: int = 3,
) -> PrefStructure:
    """A random structure carrying a belief over states and a pool of acts."""

    base = random_structure(rng, regime, generator_count=2, closure_depth=0)
    outcomes = list(base.utilities.outcomes)
    states = [f"s{i}" for i in range(state_count)]
    weights = _random_simplex(rng, state_count, 6)
    if weights[0] == 1:
        weights = [Fraction(1, 2), Fraction(1, 2)] + [Fraction(0)] * (state_count - 2)
    belief = {state: rational(weight) for state, weight in zip(states, weights)}
    model = AAModel.from_mappings(states, belief, base.utilities, regime)
    acts = []
    arm_lotteries = []
    for _ in range(act_count):
        arms = {}
        for state in states:
            if rng.random() < 0.5:
                arms[state] = rng.choice(base.generators)
            else:
                arms[state] = random_lottery(rng, outcomes)
            arm_lotteries.append(arms[state])
        acts.append(Act.from_mapping(arms))
    return PrefStructure(
        regime=base.regime,
        utilities=base.utilities,
        generators=base.generators + tuple(arm_lotteries),
        grid_denominator=base.grid_denominator,
        closure_depth=0,
        model=model,
        acts=tuple(acts),
    )
