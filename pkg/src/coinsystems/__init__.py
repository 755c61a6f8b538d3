"""Tools for studying coin systems under greedy and optimal change-making.

A coin system is a strictly increasing tuple of denominations starting at 1
with an unlimited supply of each coin.  The package decides whether the
greedy algorithm is optimal for every amount (the system is then *orderly*),
locates minimal counterexamples, classifies small systems in closed form,
generates fixed-gap families with a prescribed orderliness pattern, and runs
exhaustive searches over bounded enumerations.
"""

from .core import (
    DEFAULT_VALUE_CAP,
    MAX_COIN_VALUE,
    CoinSystem,
    Pattern,
    Representation,
    ResourceLimitError,
    greedy_count,
    greedy_representation,
    lex_compare,
    lex_smallest_optimal,
    opt_count,
)
from .canonicality import (
    CanonicalityReport,
    CounterexampleCandidate,
    CounterexampleWitness,
    OnePointVerdict,
    SupportCheck,
    counterexample_candidates,
    disjoint_support_check,
    gap_filter,
    is_orderly,
    is_tight,
    jump_filter,
    min_counterexample_oracle,
    one_point_check,
    sum_pair_counterexample,
)
from .characterize import (
    SixValueClass,
    classify6,
    implied_pattern,
    is_totally_orderly,
    orderly3,
    orderly4,
    orderly5,
    pattern,
    regenerate_six_value,
)
from .families import (
    FamilyParams,
    FixedGapPrefixCheck,
    FixedGapPrefixReport,
    FixedGapSpec,
    family_membership,
    fixed_gap_prefix_check,
    gen_D,
    gen_E,
    gen_F,
    gen_fixed_gap,
    verify_target_pattern,
)
from .search import (
    ConjectureFinding,
    ConjectureSummary,
    EnumeratedSystem,
    EnumSpec,
    InternalDisagreementError,
    agreement_sweep,
    conjecture_scan,
    enumerate_systems,
    pattern_census,
    summarize_findings,
)

__all__ = [
    "CanonicalityReport",
    "CoinSystem",
    "ConjectureFinding",
    "ConjectureSummary",
    "CounterexampleCandidate",
    "CounterexampleWitness",
    "DEFAULT_VALUE_CAP",
    "EnumSpec",
    "EnumeratedSystem",
    "FamilyParams",
    "FixedGapPrefixCheck",
    "FixedGapPrefixReport",
    "FixedGapSpec",
    "InternalDisagreementError",
    "MAX_COIN_VALUE",
    "OnePointVerdict",
    "Pattern",
    "Representation",
    "ResourceLimitError",
    "SixValueClass",
    "SupportCheck",
    "agreement_sweep",
    "classify6",
    "conjecture_scan",
    "counterexample_candidates",
    "disjoint_support_check",
    "enumerate_systems",
    "family_membership",
    "fixed_gap_prefix_check",
    "gap_filter",
    "gen_D",
    "gen_E",
    "gen_F",
    "gen_fixed_gap",
    "greedy_count",
    "greedy_representation",
    "implied_pattern",
    "is_orderly",
    "is_tight",
    "is_totally_orderly",
    "jump_filter",
    "lex_compare",
    "lex_smallest_optimal",
    "min_counterexample_oracle",
    "one_point_check",
    "opt_count",
    "orderly3",
    "orderly4",
    "orderly5",
    "pattern",
    "pattern_census",
    "regenerate_six_value",
    "sum_pair_counterexample",
    "summarize_findings",
    "verify_target_pattern",
]
