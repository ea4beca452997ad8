"""Empirical Bayes credible bands for equispaced nonparametric regression."""

from ._core import (
    AlphaBracket,
    Band,
    PosteriorParams,
    ReplicationMetrics,
    SimConfig,
    SimulationResult,
    SummaryRow,
    analyze,
    ball_coverage,
    band_widths,
    beta_density,
    build_band,
    credible_radius,
    default_bracket,
    estimate_alpha,
    eval_test_function,
    excess_mass,
    fit_posterior,
    generate_data,
    log_marginal_likelihood,
    noncoverage_fraction,
    normalization_constant,
    percentile,
    posterior_params,
    run_replication,
    run_simulation,
    sample_posterior,
    sample_test_function,
    sup_coverage,
    synthesize,
)

__all__ = [
    "AlphaBracket",
    "Band",
    "PosteriorParams",
    "ReplicationMetrics",
    "SimConfig",
    "SimulationResult",
    "SummaryRow",
    "analyze",
    "ball_coverage",
    "band_widths",
    "beta_density",
    "build_band",
    "credible_radius",
    "default_bracket",
    "estimate_alpha",
    "eval_test_function",
    "excess_mass",
    "fit_posterior",
    "generate_data",
    "log_marginal_likelihood",
    "noncoverage_fraction",
    "normalization_constant",
    "percentile",
    "posterior_params",
    "run_replication",
    "run_simulation",
    "sample_posterior",
    "sample_test_function",
    "sup_coverage",
    "synthesize",
]
