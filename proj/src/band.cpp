#include "ebband/band.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "ebband/transform.hpp"

namespace ebband {
namespace {

void check_inputs(std::size_t num_draws, double level) {
    if (num_draws < 2) {
        throw std::domain_error("build_band: need at least two draws");
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw std::domain_error("build_band: level must lie in (0, 1)");
    }
}

// fetch(k, buffer) writes draw k into buffer.  Called once per draw for the
// distances and once more for each kept draw.
template <class Fetch>
Band envelope(const Fetch& fetch, const PosteriorParams& params, std::size_t num_draws,
              double level) {
    check_inputs(num_draws, level);
    const std::size_t n = params.n();
    std::vector<double> coeffs(n);

    std::vector<double> distances(num_draws);
    for (std::size_t k = 0; k < num_draws; ++k) {
        fetch(k, coeffs);
        distances[k] = l2_distance(coeffs, params.post_mean);
    }

    const std::size_t m = kept_count(level, num_draws);
    const std::vector<std::size_t> kept = closest_indices(distances, m);

    Band band;
    band.kept = m;
    band.radius = distances[kept.back()];
    band.lower.assign(n, std::numeric_limits<double>::infinity());
    band.upper.assign(n, -std::numeric_limits<double>::infinity());
    band.center = synthesize(params.post_mean, n);

    std::vector<double> curve(n);
    for (const std::size_t k : kept) {
        fetch(k, coeffs);
        synthesize_into(coeffs, curve);
        for (std::size_t i = 0; i < n; ++i) {
            band.lower[i] = std::min(band.lower[i], curve[i]);
            band.upper[i] = std::max(band.upper[i], curve[i]);
        }
    }
    return band;
}

}  // namespace

Band build_band(const DrawSet& draws, const PosteriorParams& params, double level) {
    for (const auto& d : draws) {
        if (d.size() != params.n()) {
            throw std::domain_error("build_band: draw length differs from posterior");
        }
    }
    auto fetch = [&](std::size_t k, std::span<double> out) {
        std::copy(draws[k].begin(), draws[k].end(), out.begin());
    };
    return envelope(fetch, params, draws.size(), level);
}

Band build_band(const PosteriorSampler& sampler, const PosteriorParams& params,
                std::size_t num_draws, double level) {
    if (sampler.dim() != params.n()) {
        throw std::domain_error("build_band: sampler dimension differs from posterior");
    }
    auto fetch = [&](std::size_t k, std::span<double> out) { sampler.draw(k, out); };
    return envelope(fetch, params, num_draws, level);
}

}  // namespace ebband
