"""Resolution information toolkit.

Minimum-KL belief updates that push semantic ambiguity below a target,
Gaussian-family ambiguity floors, and large-deviation verification of the
ambiguity exponent. Thin Python layer over the C++ core in ``resinfo._core``.
"""

from ._core import (
    CurvePoint,
    DecayModel,
    DiscreteBelief,
    FloorResult,
    GaussianBelief,
    HalfSpace,
    MonteCarloEstimate,
    OrthantPolytope,
    PolytopeResolution,
    PrecisionLimit,
    ProjectionEstimate,
    RateEstimate,
    Region,
    ResolutionResult,
    ResolvabilityBound,
    SemanticPartition,
    __version__,
    ambiguity,
    ambiguity_floor,
    binary_divergence,
    binomial_tail_exact,
    brute_force_projection,
    decay_model_ambiguity,
    gaussian_kl,
    gaussian_resolvability_bound,
    halfspace_ambiguity_curve,
    halfspace_delta0,
    halfspace_mass,
    halfspace_optimal_shift,
    halfspace_resolution_info,
    isotropic_shrink_cost,
    kl_divergence,
    log1p_safe,
    monte_carlo_ambiguity,
    most_likely_region,
    optimal_posterior,
    polytope_ambiguity_curve,
    polytope_mass,
    polytope_resolution_info,
    polytope_sigma_star,
    region_ambiguity,
    region_mass,
    resolution_info_partition,
    resolution_info_region,
    resolvability_bound,
    sample_complexity_lower_bound,
    sanov_rate_check,
    std_normal_cdf,
    std_normal_pdf,
    std_normal_quantile,
    std_normal_tail,
    total_variation,
    xlogx,
)

__all__ = [name for name in dir() if not name.startswith("_")] + ["__version__"]
