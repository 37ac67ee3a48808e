"""Acceptance gate: nine exact-arithmetic criteria, one test per criterion.

Each test prints a single PASS/FAIL line for its criterion (visible with
``pytest -s``; ``pytest -v`` shows the same nine verdicts as test outcomes).
Every check is exact: no tolerances anywhere.
"""

import itertools
import random
from fractions import Fraction

from oracles import (
    random_acts_structure,
    random_structure,
    ratio_compare,
)
from qualutil import (
    EPS,
    Lottery,
    MaximinSpec,
    NSReal,
    PrefOrdering,
    QOrdering,
    Regime,
    audit,
    check_A1,
    check_A2,
    check_A2prime,
    check_A3,
    check_A3doubleprime,
    check_A3prime,
    check_A4,
    check_A5prime,
    check_B2,
    check_gamma_property,
    check_property_P,
    eps,
    expected_utility,
    is_negligible,
    lexicographic_compare,
    lexicographic_mix,
    lexicographic_mixture_partition,
    maximin_compare_oracle,
    maximin_utilities,
    mix,
    qcompare,
    qualitative_prefers,
    rational,
    render_nsreal,
    parse_nsreal,
    replay,
    two_point_lottery,
)
from qualutil.auditor import PrefStructure
from qualutil.fixtures import (
    consolation_document,
    dice_document,
    lexicographic_chain,
    maximin_document,
    surgery_document,
)
from qualutil.prefcore import UtilityAssignment, case1_functional
from qualutil.acts import null_state_analytic, null_state_sweep

F = Fraction

B = PrefOrdering.BETTER
I = PrefOrdering.INDIFFERENT


def _conclude(number, description, failures):
    status = "FAIL" if failures else "PASS"
    print(f"{status} criterion {number}: {description}")
    assert not failures, f"criterion {number}: {failures[:5]}"


def _random_nsreal(rng, allow_zero=True):
    terms = []
    for _ in range(rng.randint(0 if allow_zero else 1, 3)):
        exponent = rng.randint(-3, 3)
        numerator = rng.randint(-6, 6)
        if numerator == 0:
            continue
        terms.append((exponent, F(numerator, rng.randint(1, 9))))
    return NSReal.from_terms(terms)


def test_criterion_1_dice_comparisons():
    failures = []
    doc = dice_document()
    utilities = doc.utilities

    def compare(a, b):
        return qualitative_prefers(doc.lottery(a), doc.lottery(b), utilities)

    if compare("b6", "b4") is not I:
        failures.append("b6 vs b4 not indifferent")
    if compare("e6", "b6") is not I:
        failures.append("e6 vs b6 not indifferent")
    if compare("e", "f") is not B:
        failures.append("e vs f not better")
    rendered_e = render_nsreal(expected_utility(doc.lottery("e"), utilities))
    if rendered_e != "eps":
        failures.append(f"u(e) rendered {rendered_e!r}")
    rendered_f = render_nsreal(expected_utility(doc.lottery("f"), utilities))
    if rendered_f != "1/12*eps":
        failures.append(f"u(f) rendered {rendered_f!r}")
    _conclude(1, "edge-landing die comparisons and exact rendering", failures)


def test_criterion_2_consolation_prize_indifference():
    failures = []
    for chance in (F(1, 4), F(1, 2), F(3, 4)):
        doc = consolation_document(chance)
        utilities = doc.utilities
        raffles = [doc.lottery(name) for name in ("one", "two", "three")]
        for a, b in itertools.product(raffles, repeat=2):
            if qualitative_prefers(a, b, utilities) is not I:
                failures.append(f"raffles not indifferent at chance {chance}")
        if (
            qualitative_prefers(
                doc.lottery("magazine_sure"), doc.lottery("nothing_sure"), utilities
            )
            is not B
        ):
            failures.append(f"magazine not better than nothing at chance {chance}")
    _conclude(2, "consolation prize indifference with a strict sure gap", failures)


def test_criterion_3_infinite_utility_mixtures():
    failures = []
    doc = surgery_document()
    utilities = doc.utilities
    life, quo, death = (doc.lottery(name) for name in ("l", "p", "d"))
    if utilities.utility("long_life") != eps(-1):
        failures.append("long life utility is not eps^-1")
    for mu in (F(1, 1000), F(1, 100), F(1, 2), F(999, 1000)):
        gamble = mix(mu, life, death)
        if qualitative_prefers(gamble, quo, utilities) is not B:
            failures.append(f"mixture at {mu} not better than the status quo")
    report = check_property_P(quo, life, death, utilities, Regime.NS_UTIL)
    if report.holds:
        failures.append("indifference threshold unexpectedly exists")
    if not report.indifference_set.is_empty:
        failures.append("indifference set not empty")
    if report.failure is None:
        failures.append("failure mode not reported")
    _conclude(3, "infinitely valued outcome defeats every standard threshold", failures)


def test_criterion_4_maximin_oracle_and_audit():
    failures = []
    weights = [F(k, 8) for k in range(1, 8)]
    for n in range(2, 6):
        spec = MaximinSpec(n)
        utilities = maximin_utilities(spec)
        gambles = [
            (low, w, high)
            for low, high in itertools.combinations(range(n), 2)
            for w in weights
        ]
        for first, second in itertools.product(gambles, repeat=2):
            expected = maximin_compare_oracle(spec, *first, *second)
            actual = qualitative_prefers(
                two_point_lottery(spec, *first),
                two_point_lottery(spec, *second),
                utilities,
            )
            if actual is not expected:
                failures.append(f"n={n}: {first} vs {second}: {actual} != {expected}")
    structure = maximin_document().structure()
    report = audit(structure)
    a2 = report.verdict("A2")
    if a2.holds:
        failures.append("independence unexpectedly holds on the maximin instance")
    elif a2.counterexample is None or not replay(a2.counterexample, structure):
        failures.append("independence counterexample does not replay")
    _conclude(4, "worst-case ranking matches its oracle; audit certifies the break", failures)


def test_criterion_5_postulate_soundness_suites():
    failures = []
    rng = random.Random(501)
    antecedent_hits = 0

    def implication(structure):
        nonlocal antecedent_hits
        a2 = check_A2(structure).holds
        a3p = check_A3prime(structure).holds
        a3pp = check_A3doubleprime(structure).holds
        if a2 and a3p and a3pp:
            antecedent_hits += 1
            if not check_A3(structure).holds:
                failures.append("A2+A3'+A3'' held but A3 failed")

    for index in range(100):
        structure = random_structure(
            rng, Regime.STD, grid_denominator=3, closure_depth=1
        )
        for check in (check_A1, check_A2, check_A3, check_gamma_property):
            verdict = check(structure)
            if not verdict.holds:
                failures.append(f"STD #{index}: {verdict.postulate} failed")
        implication(structure)

    for index in range(100):
        structure = random_structure(
            rng, Regime.NS_UTIL, grid_denominator=3, closure_depth=1
        )
        for check in (check_A1, check_A2prime, check_A3prime, check_A3doubleprime):
            verdict = check(structure)
            if not verdict.holds:
                failures.append(f"NS-UTIL #{index}: {verdict.postulate} failed")
        implication(structure)

    # Deterministic commensurate instances keep the implication check from
    # being vacuous on the nonstandard side.
    commensurate = PrefStructure(
        regime=Regime.NS_UTIL,
        utilities=UtilityAssignment.from_mapping(
            {"a": rational(1), "b": rational(F(1, 2)), "c": rational(0)}
        ),
        generators=tuple(Lottery.degenerate(o) for o in ("a", "b", "c")),
        grid_denominator=4,
        closure_depth=1,
    )
    implication(commensurate)
    if antecedent_hits < 100:
        failures.append(f"implication antecedent hit only {antecedent_hits} times")
    _conclude(5, "postulates hold on 200 random structures; primed set implies A3", failures)


def test_criterion_6_lexicographic_contrast():
    failures = []
    best, middle, worst = lexicographic_chain()
    if lexicographic_compare(worst, middle) is not PrefOrdering.WORSE:
        failures.append("worst not below middle")
    if lexicographic_compare(middle, best) is not PrefOrdering.WORSE:
        failures.append("middle not below best")
    if lexicographic_compare(best, worst) is not B:
        failures.append("best not above worst")
    beta = F(2, 5)
    mixed = lexicographic_mix(beta, best, worst)
    if lexicographic_compare(mixed, middle) is not PrefOrdering.WORSE:
        failures.append("weight 2/5 does not land strictly below the middle")
    parts = lexicographic_mixture_partition(best, worst, middle)
    level = parts.get(I)
    if level is not None and not level.is_empty:
        failures.append("an exact indifference weight exists")
    _conclude(6, "lexicographic order satisfies the antecedent yet never crosses", failures)


def test_criterion_7_nonstandard_probability_suite():
    failures = []
    rng = random.Random(701)
    standard_weights = (F(1, 3), F(1, 2), F(2, 3))
    for index in range(100):
        structure = random_structure(
            rng, Regime.NS_PROB, grid_denominator=3, closure_depth=1
        )
        utilities = structure.utilities
        lotteries = structure.generators
        p = lotteries[rng.randrange(len(lotteries))]
        q = lotteries[rng.randrange(len(lotteries))]
        for weight in standard_weights:
            combined = case1_functional(mix(weight, p, q, Regime.NS_PROB), utilities)
            split = weight * case1_functional(p, utilities) + (
                1 - weight
            ) * case1_functional(q, utilities)
            if combined != split:
                failures.append(f"#{index}: standard-weight linearity broke at {weight}")
        # A nonstandard weight is linear only after collapsing
        # infinitesimals: the exact mixture value and the formal combination
        # agree in standard part.
        tilted = case1_functional(mix(EPS, p, q, Regime.NS_PROB), utilities)
        formal = EPS * rational(case1_functional(p, utilities)) + (
            rational(1) - EPS
        ) * rational(case1_functional(q, utilities))
        if tilted != formal.standard_part():
            failures.append(f"#{index}: infinitesimal-weight pseudo-linearity broke")
        if not check_B2(structure).holds:
            failures.append(f"#{index}: B2 failed")

    separating = dice_document().structure()
    if not is_negligible(EPS, separating.utilities, separating.generators):
        failures.append("eps not negligible on the separating instance")
    if is_negligible(F(1, 2), separating.utilities, separating.generators):
        failures.append("1/2 wrongly negligible on the separating instance")
    _conclude(7, "pseudo-linear functional and independence for relevant weights", failures)


def test_criterion_8_acts_suite():
    failures = []
    rng = random.Random(801)
    for index in range(50):
        structure = random_acts_structure(rng, Regime.STD)
        if not check_A4(structure).holds:
            failures.append(f"STD acts #{index}: A4 failed")
        for state in structure.model.states:
            swept = null_state_sweep(state, structure.model, structure.acts)
            analytic = null_state_analytic(state, structure.model, structure.acts)
            if swept != analytic:
                failures.append(f"STD acts #{index}: nullity rules disagree at {state}")
    for index in range(50):
        structure = random_acts_structure(rng, Regime.NS_UTIL)
        if not check_A5prime(structure).holds:
            failures.append(f"NS-UTIL acts #{index}: A5' failed")
        for state in structure.model.states:
            swept = null_state_sweep(state, structure.model, structure.acts)
            analytic = null_state_analytic(state, structure.model, structure.acts)
            if swept != analytic:
                failures.append(f"NS-UTIL acts #{index}: nullity rules disagree at {state}")
    _conclude(8, "state-contingent postulates and nullity agreement on 100 models", failures)


def test_criterion_9_field_and_format_suite():
    failures = []
    rng = random.Random(901)

    for index in range(1000):
        value = _random_nsreal(rng)
        rendered = render_nsreal(value)
        if parse_nsreal(rendered) != value:
            failures.append(f"round trip #{index} broke on {rendered!r}")
            break

    zero = NSReal.from_terms([])
    one = rational(1)
    for index in range(1000):
        x = _random_nsreal(rng)
        y = _random_nsreal(rng)
        z = _random_nsreal(rng)
        ok = (
            x + y == y + x
            and x * y == y * x
            and (x + y) + z == x + (y + z)
            and (x * y) * z == x * (y * z)
            and x * (y + z) == x * y + x * z
            and x + zero == x
            and x * one == x
            and x + (-x) == zero
        )
        if not ok:
            failures.append(f"ring axiom broke at triple #{index}")
            break
        if x < y and not (x + z < y + z):
            failures.append(f"order-translation compatibility broke at #{index}")
            break
        if x.sign() > 0 and y.sign() > 0 and (x * y).sign() != 1:
            failures.append(f"positivity broke at #{index}")
            break

    for index in range(1000):
        x = _random_nsreal(rng, allow_zero=False)
        y = _random_nsreal(rng, allow_zero=False)
        if x.sign() < 0:
            x = -x
        if y.sign() < 0:
            y = -y
        if x.is_zero() or y.is_zero():
            continue
        if qcompare(x, y) is not ratio_compare(x, y):
            failures.append(f"comparison oracle disagreed at #{index}: {x}, {y}")
            break
    _conclude(9, "number field round trips, ring laws, and the ratio oracle", failures)
