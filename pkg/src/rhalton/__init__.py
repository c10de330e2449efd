"""Randomized Halton point sets and the estimation toolkit around them.

The core object is a seeded, conceptually infinite matrix of digit-
scrambled radical inverses: any finite block of it can be generated,
extended, or re-generated entry-for-entry from the seed alone.  On top
of that sit replicated integral estimators, a small suite of test
integrands with high-accuracy reference moments, mean-dimension
estimation, and star-discrepancy oracles used by the test suite.
"""

from .discrepancy import (
    local_discrepancy,
    star_discrepancy_1d,
    star_discrepancy_bruteforce,
)
from .estimator import (
    EfficiencyReport,
    ExperimentResult,
    ReplicatedEstimate,
    ReplicationPlan,
    efficiency_experiment,
    efficiency_with_bounds,
    mc_baseline,
    mse_estimate,
    pool_values,
    replicate_estimate,
)
from .generator import BlockRequest, SeedSpec, column_seed, rhalton
from .integrands import (
    G_KINDS,
    KINDS,
    IntegrandSpec,
    ReferenceMoments,
    cached_moments,
    evaluate,
    profile,
    reference_moments,
    sumsq_true_mean,
    true_mean,
)
from .meandim import (
    MeanDimensionResult,
    large_d_limit,
    mean_dimension,
    numerator_estimate,
)
from .normal import norm_cdf, norm_pdf, norm_quantile
from .primes import DEFAULT_CAP, PrimeTable, default_table, nth_prime, sieve_upper_bound
from .radical import (
    MAX_INDEX,
    PermutationStream,
    digit_depth,
    make_permutation_stream,
    radical_inverse,
    scrambled_radical_inverse,
)

__version__ = "0.1.0"

__all__ = [
    "BlockRequest",
    "DEFAULT_CAP",
    "EfficiencyReport",
    "ExperimentResult",
    "G_KINDS",
    "IntegrandSpec",
    "KINDS",
    "MAX_INDEX",
    "MeanDimensionResult",
    "PermutationStream",
    "PrimeTable",
    "ReferenceMoments",
    "ReplicatedEstimate",
    "ReplicationPlan",
    "SeedSpec",
    "cached_moments",
    "column_seed",
    "default_table",
    "digit_depth",
    "efficiency_experiment",
    "efficiency_with_bounds",
    "evaluate",
    "large_d_limit",
    "local_discrepancy",
    "make_permutation_stream",
    "mc_baseline",
    "mean_dimension",
    "mse_estimate",
    "norm_cdf",
    "norm_pdf",
    "norm_quantile",
    "nth_prime",
    "numerator_estimate",
    "pool_values",
    "profile",
    "radical_inverse",
    "reference_moments",
    "replicate_estimate",
    "rhalton",
    "scrambled_radical_inverse",
    "sieve_upper_bound",
    "star_discrepancy_1d",
    "star_discrepancy_bruteforce",
    "sumsq_true_mean",
    "true_mean",
    "__version__",
]
