"""Exact arithmetic for finitely exchangeable 0/1 populations.

A population of N binary outcomes whose joint law is permutation-invariant is
fully described by a prior on its success count.  This package builds such
priors, computes the predictive probabilities they induce (exactly, as
rationals), classifies them against the Binomial tightness boundary, verifies
the gambler's-belief and belief-in-maturity properties by exhaustive
enumeration, and decides finite extendibility via exact linear feasibility.
"""

from .classify import (
    Belief,
    BeliefReport,
    Counterexample,
    GamblerAnalysis,
    Holds,
    IndexRecord,
    IndexSide,
    MaturityAnalysis,
    RatioValue,
    TiesPolicy,
    TightnessLabel,
    TightnessVerdict,
    binomial_tightness_ratio,
    defined_streak_hazards,
    is_indifferent,
    is_symmetric,
    second_order_class,
    tightness_class,
    tightness_ratio,
    verify_gambler,
    verify_maturity,
)
from .errors import (
    ApproximateModeError,
    HistoryFullError,
    InvalidParameterError,
    MaturityError,
    ZeroProbabilityHistoryError,
)
from .extend import (
    ExtendibilityResult,
    MixtureWitness,
    extendibility_check,
    extendibility_profile,
    verify_witness,
)
from .figures import FIGURE_IDS, FigureData, FigurePoint, emit_figure_data, render_figure
from .model import (
    HistorySummary,
    PredictiveTable,
    posterior_gamma,
    predictive_one,
    predictive_table,
    remaining_population_prior,
    sequence_probability,
    streak_hazard,
)
from .numerics import (
    ApproxReal,
    Ordering,
    Rational,
    binomial_coefficient,
    compare_values,
    decimal_string,
    falling_factorial,
    format_rational,
    parse_rational,
    rising_factorial,
    scalar_to_string,
)
from .priors import (
    GammaPrior,
    PriorMode,
    from_beta_binomial,
    from_binomial,
    from_binomial_mixture,
    from_cmp_binomial,
    from_degenerate,
    from_hypergeometric,
    from_pmf,
    hypergeometric_pmf,
    mixture_from_json_dict,
    prior_from_json_dict,
    uniform,
)
from .verify import run_certificate

__version__ = "0.1.0"

__all__ = [
    "ApproxReal",
    "ApproximateModeError",
    "Belief",
    "BeliefReport",
    "Counterexample",
    "ExtendibilityResult",
    "FIGURE_IDS",
    "FigureData",
    "FigurePoint",
    "GamblerAnalysis",
    "GammaPrior",
    "HistoryFullError",
    "HistorySummary",
    "Holds",
    "IndexRecord",
    "IndexSide",
    "InvalidParameterError",
    "MaturityAnalysis",
    "MaturityError",
    "MixtureWitness",
    "Ordering",
    "PredictiveTable",
    "PriorMode",
    "Rational",
    "RatioValue",
    "TiesPolicy",
    "TightnessLabel",
    "TightnessVerdict",
    "ZeroProbabilityHistoryError",
    "binomial_coefficient",
    "binomial_tightness_ratio",
    "compare_values",
    "decimal_string",
    "defined_streak_hazards",
    "emit_figure_data",
    "extendibility_check",
    "extendibility_profile",
    "falling_factorial",
    "format_rational",
    "from_beta_binomial",
    "from_binomial",
    "from_binomial_mixture",
    "from_cmp_binomial",
    "from_degenerate",
    "from_hypergeometric",
    "from_pmf",
    "hypergeometric_pmf",
    "is_indifferent",
    "is_symmetric",
    "mixture_from_json_dict",
    "parse_rational",
    "posterior_gamma",
    "predictive_one",
    "predictive_table",
    "remaining_population_prior",
    "prior_from_json_dict",
    "render_figure",
    "rising_factorial",
    "run_certificate",
    "scalar_to_string",
    "second_order_class",
    "sequence_probability",
    "streak_hazard",
    "tightness_class",
    "tightness_ratio",
    "uniform",
    "verify_gambler",
    "verify_maturity",
    "verify_witness",
]
