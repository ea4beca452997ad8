#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ebband {

/// Search interval for the smoothness hyperparameter.
struct AlphaBracket {
    double lower = 0.0;
    double upper = 1.0;
};

/// [0, ln n]
AlphaBracket default_bracket(std::size_t n);

/// Per-coordinate Gaussian posterior under the prior theta_j ~ N(0, j^{-1-2 alpha}).
struct PosteriorParams {
    double alpha_hat = 0.0;
    double n_eff = 0.0;  // n / sigma^2; +inf for noiseless data
    std::vector<double> post_mean;
    std::vector<double> post_var;
    AlphaBracket bracket;

    std::size_t n() const noexcept { return post_mean.size(); }
};

/// A set of posterior draws, one coefficient vector per draw.
using DrawSet = std::vector<std::vector<double>>;

/**
 * Log marginal likelihood of the coefficients, dropping terms constant in alpha:
 *
 *   l(alpha) = -1/2 sum_j [ log v_j + S_j^2 / v_j ],  v_j = j^{-1-2 alpha} + 1/n_eff.
 *
 * Summed in index order, so the result is reproducible bit for bit.
 */
double log_marginal_likelihood(std::span<const double> coeffs, double n_eff, double alpha);

/**
 * Marginal maximum likelihood estimate of alpha over the bracket.
 *
 * Evaluates l on 200 equispaced points (endpoints included), then runs a
 * golden-section search over the two cells adjacent to the best grid point.
 * The better of the grid point and the refined point is returned, so a
 * likelihood that is monotone on the bracket yields the endpoint exactly.
 */
double estimate_alpha(std::span<const double> coeffs, double n_eff, AlphaBracket bracket);

/// Conjugate posterior at a fixed alpha:
/// mean_j = S_j n_eff / (n_eff + j^{1+2 alpha}),  var_j = 1 / (n_eff + j^{1+2 alpha}).
PosteriorParams posterior_params(std::span<const double> coeffs, double n_eff, double alpha,
                                 AlphaBracket bracket);
PosteriorParams posterior_params(std::span<const double> coeffs, double n_eff, double alpha);

/// estimate_alpha followed by posterior_params.
PosteriorParams fit_posterior(std::span<const double> coeffs, double n_eff, AlphaBracket bracket);

/// Posterior of the coordinates factor_j * theta_j: means scale by factor_j,
/// variances by factor_j^2.
PosteriorParams rescale(const PosteriorParams& params, std::span<const double> factors);

/**
 * Reproducible source of posterior draws.  Draw k is generated from its own
 * generator seeded with mix_seed(seed, k), so any draw can be regenerated
 * on demand without storing the whole set.
 */
class PosteriorSampler {
public:
    PosteriorSampler(const PosteriorParams& params, std::uint64_t seed);

    std::size_t dim() const noexcept { return mean_.size(); }

    /// Writes draw k into out (out.size() == dim()).
    void draw(std::size_t k, std::span<double> out) const;

private:
    std::vector<double> mean_;
    std::vector<double> sd_;
    std::uint64_t seed_;
};

/// N independent draws; identical seed gives identical draws.
/// Throws std::domain_error for N == 0.
DrawSet sample_posterior(const PosteriorParams& params, std::size_t num_draws, std::uint64_t seed);

/// round-half-up(level * N), clamped to [1, N].
std::size_t kept_count(double level, std::size_t num_draws);

/// Euclidean distance between two coefficient vectors of equal length.
double l2_distance(std::span<const double> a, std::span<const double> b);

/**
 * Indices of the m closest draws, ordered by (distance, index).  The order
 * is a stable sort so ties are broken by draw index.
 */
std::vector<std::size_t> closest_indices(std::span<const double> distances, std::size_t m);

/// Distance to center of the m-th closest draw, m = kept_count(level, N).
/// Throws std::domain_error for an empty draw set or level outside (0, 1).
double credible_radius(const DrawSet& draws, std::span<const double> center, double level);

}  // namespace ebband
