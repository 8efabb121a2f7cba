"""Exact moment/cumulant conversions over rationals and univariate polynomials.

The package computes classical, boolean, and free cumulants from moments and
back, all through one partition-weighted transform, entirely in exact
arithmetic.  Free cumulants are always the unscaled coefficients r_k of the
series R with M(t) = R(t M(t)).
"""

__version__ = "0.1.0"

from .partitions import (
    Partition,
    composition_multiplicity,
    enumerate_partitions,
    partition_coefficient,
)
from .scalars import (
    Polynomial,
    Scalar,
    factorial,
    falling_factorial,
    stirling_first,
    stirling_second,
    variable,
)
from .transforms import (
    CumulantSequence,
    MomentSequence,
    WeightSpec,
    boolean_cumulants_from_moments,
    classical_cumulants_from_moments,
    convert,
    factorial_moments_from_moments,
    free_cumulants_from_moments,
    moments_from_boolean_cumulants,
    moments_from_classical_cumulants,
    moments_from_factorial_moments,
    moments_from_free_cumulants,
    partition_sum,
    partition_transform,
)
from .distributions import (
    bernoulli_moments,
    binomial_moments,
    compound_poisson_moments,
    distribution_moments,
    exponential_moments,
    gaussian_moments,
    marchenko_pastur_moments,
    poisson_moments,
    uniform_moments,
    wigner_moments,
)

__all__ = [
    "Polynomial",
    "Scalar",
    "variable",
    "factorial",
    "falling_factorial",
    "stirling_first",
    "stirling_second",
    "Partition",
    "enumerate_partitions",
    "partition_coefficient",
    "composition_multiplicity",
    "MomentSequence",
    "CumulantSequence",
    "WeightSpec",
    "partition_sum",
    "partition_transform",
    "classical_cumulants_from_moments",
    "moments_from_classical_cumulants",
    "boolean_cumulants_from_moments",
    "moments_from_boolean_cumulants",
    "free_cumulants_from_moments",
    "moments_from_free_cumulants",
    "factorial_moments_from_moments",
    "moments_from_factorial_moments",
    "convert",
    "poisson_moments",
    "compound_poisson_moments",
    "exponential_moments",
    "uniform_moments",
    "bernoulli_moments",
    "binomial_moments",
    "gaussian_moments",
    "wigner_moments",
    "marchenko_pastur_moments",
    "distribution_moments",
]
