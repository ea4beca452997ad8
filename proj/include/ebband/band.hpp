#pragma once

#include <cstddef>
#include <vector>

#include "ebband/ebayes.hpp"

namespace ebband {

/// Pointwise envelope of the kept posterior draws on the design grid.
struct Band {
    std::vector<double> lower;
    std::vector<double> upper;
    std::vector<double> center;  // synthesized posterior mean
    std::size_t kept = 0;
    double radius = 0.0;  // coefficient-space distance of the last kept draw

    std::size_t n() const noexcept { return lower.size(); }
};

/**
 * Keeps the round-half-up(level * N) draws closest to the posterior mean in
 * coefficient l2 distance, synthesizes them on the grid and takes the
 * pointwise min and max.  Throws std::domain_error for N < 2, level outside
 * (0, 1), or draws whose length differs from the posterior.
 */
Band build_band(const DrawSet& draws, const PosteriorParams& params, double level);

/// Same construction without materializing the draw set: distances are
/// computed in one pass and only the kept draws are regenerated and
/// synthesized.  Gives the same band as build_band on
/// sample_posterior(params, num_draws, seed).
Band build_band(const PosteriorSampler& sampler, const PosteriorParams& params,
                std::size_t num_draws, double level);

}  // namespace ebband
