"""Exact arithmetic with infinitesimals and the qualitative preference
relations it induces over lotteries and acts, plus finite audits of the
underlying postulates.

The building blocks:

* :mod:`qualutil.nsreal`: exact numbers with infinitesimal and infinite
  parts, and the qualitative comparison that ignores relatively negligible
  differences.
* :mod:`qualutil.prefcore`: lotteries, utility assignments, the three
  comparison regimes, mixing, overriding, negligible weights.
* :mod:`qualutil.acts`: state-dependent acts, beliefs, null states.
* :mod:`qualutil.criteria`: worst-case-first (maximin) preferences encoded
  with signed utilities, plus the closed-form comparison rule.
* :mod:`qualutil.auditor`: postulate checks over finite mixture closures
  with replayable counterexample certificates.
* :mod:`qualutil.formats`: literal grammar, model documents, reports.
* :mod:`qualutil.fixtures`: built-in example models and their gate.
"""

from .errors import (
    ClosureTooLarge,
    ConsistencyError,
    IndexOrder,
    InfiniteValue,
    InvalidWeight,
    MissingModel,
    MissingUtility,
    ParseError,
    PreconditionViolated,
    QualUtilError,
    RegimeMismatch,
    SchemaError,
    UnknownIdentifier,
    UnknownState,
    ZeroDenominator,
)
from .nsreal import EPS, NSReal, ONE, QOrdering, ZERO, eps, qcompare, rational
from .solver import (
    AffineValue,
    RationalInterval,
    RationalIntervalSet,
    partition_affine_comparison,
    partition_unit_interval,
)
from .prefcore import (
    Lottery,
    PrefOrdering,
    PropertyPReport,
    Regime,
    UtilityAssignment,
    case1_functional,
    check_property_P,
    close_under_mixtures,
    compare_values,
    expected_utility,
    grid_weights,
    is_negligible,
    mix,
    overrides,
    overrides_values,
    prefers,
    qualitative_prefers,
)
from .acts import (
    AAModel,
    Act,
    act_prefers,
    act_utility,
    constant_act,
    is_null,
    null_state_analytic,
    null_state_sweep,
)
from .criteria import (
    MaximinSpec,
    best_case_power_utilities,
    maximin_compare_oracle,
    maximin_utilities,
    two_point_lottery,
)
from .auditor import (
    AUDIT_SIZE_LIMIT,
    AuditReport,
    Counterexample,
    MixtureWitness,
    PrefStructure,
    Verdict,
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
    lexicographic_compare,
    lexicographic_mix,
    lexicographic_mixture_partition,
    mixture_closure,
    replay,
    solve_mixture_relation,
)
from .formats import (
    ModelDocument,
    load_model,
    parse_model,
    parse_nsreal,
    render_nsreal,
    render_report,
)
from .fixtures import (
    ExampleCheck,
    available_fixtures,
    fixture_path,
    load_fixture,
    run_examples,
)

__version__ = "0.1.0"

__all__ = [
    "AAModel",
    "AUDIT_SIZE_LIMIT",
    "Act",
    "AffineValue",
    "AuditReport",
    "ClosureTooLarge",
    "ConsistencyError",
    "Counterexample",
    "EPS",
    "ExampleCheck",
    "IndexOrder",
    "InfiniteValue",
    "InvalidWeight",
    "Lottery",
    "MaximinSpec",
    "MissingModel",
    "MissingUtility",
    "MixtureWitness",
    "ModelDocument",
    "NSReal",
    "ONE",
    "ParseError",
    "PrefOrdering",
    "PrefStructure",
    "PreconditionViolated",
    "PropertyPReport",
    "QOrdering",
    "QualUtilError",
    "RationalInterval",
    "RationalIntervalSet",
    "Regime",
    "RegimeMismatch",
    "SchemaError",
    "UnknownIdentifier",
    "UnknownState",
    "UtilityAssignment",
    "Verdict",
    "ZERO",
    "ZeroDenominator",
    "act_prefers",
    "act_utility",
    "audit",
    "available_fixtures",
    "best_case_power_utilities",
    "case1_functional",
    "check_A1",
    "check_A2",
    "check_A2prime",
    "check_A3",
    "check_A3doubleprime",
    "check_A3prime",
    "check_A4",
    "check_A5prime",
    "check_B2",
    "check_gamma_property",
    "check_property_P",
    "close_under_mixtures",
    "compare_values",
    "constant_act",
    "eps",
    "expected_utility",
    "fixture_path",
    "grid_weights",
    "is_negligible",
    "is_null",
    "lexicographic_compare",
    "lexicographic_mix",
    "lexicographic_mixture_partition",
    "load_fixture",
    "load_model",
    "maximin_compare_oracle",
    "maximin_utilities",
    "mix",
    "mixture_closure",
    "null_state_analytic",
    "null_state_sweep",
    "overrides",
    "overrides_values",
    "parse_model",
    "parse_nsreal",
    "partition_affine_comparison",
    "partition_unit_interval",
    "prefers",
    "qcompare",
    "qualitative_prefers",
    "rational",
    "render_nsreal",
    "render_report",
    "replay",
    "run_examples",
    "solve_mixture_relation",
    "two_point_lottery",
]
