#include "ebband/ebayes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ebband/seeding.hpp"

namespace ebband {
namespace {

constexpr std::size_t kCoarseGridPoints = 200;
constexpr double kGoldenTolerance = 1e-7;

void check_n_eff(double n_eff) {
    if (!(n_eff > 0.0)) {
        throw std::domain_error("n_eff must be positive");
    }
}

void check_bracket(AlphaBracket bracket) {
    if (!std::isfinite(bracket.lower) || !std::isfinite(bracket.upper) || bracket.lower < 0.0 ||
        bracket.lower > bracket.upper) {
        throw std::domain_error("alpha bracket must satisfy 0 <= lower <= upper < inf");
    }
}

void check_level(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw std::domain_error("level must lie in (0, 1)");
    }
}

// Caches log j and S_j^2 so repeated evaluations cost one exp per coordinate.
class MarginalLikelihood {
public:
    MarginalLikelihood(std::span<const double> coeffs, double n_eff)
        : log_index_(coeffs.size()), squares_(coeffs.size()), inv_n_eff_(1.0 / n_eff) {
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            log_index_[j] = std::log(static_cast<double>(j + 1));
            squares_[j] = coeffs[j] * coeffs[j];
        }
    }

    double operator()(double alpha) const {
        const double exponent = -(1.0 + 2.0 * alpha);
        double sum = 0.0;
        for (std::size_t j = 0; j < squares_.size(); ++j) {
            const double v = std::exp(exponent * log_index_[j]) + inv_n_eff_;
            sum += std::log(v) + squares_[j] / v;
        }
        return -0.5 * sum;
    }

private:
    std::vector<double> log_index_;
    std::vector<double> squares_;
    double inv_n_eff_;
};

// Maximizes f on [a, b] by golden-section search.
template <class F>
double golden_section_max(const F& f, double a, double b, double tol) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return fc >= fd ? c : d;
}

}  // namespace

AlphaBracket default_bracket(std::size_t n) {
    return {0.0, std::log(static_cast<double>(std::max<std::size_t>(n, 1)))};
}

double log_marginal_likelihood(std::span<const double> coeffs, double n_eff, double alpha) {
    check_n_eff(n_eff);
    if (!(alpha >= 0.0)) {
        throw std::domain_error("alpha must be nonnegative");
    }
    return MarginalLikelihood(coeffs, n_eff)(alpha);
}

double estimate_alpha(std::span<const double> coeffs, double n_eff, AlphaBracket bracket) {
    check_n_eff(n_eff);
    check_bracket(bracket);
    if (coeffs.empty()) {
        throw std::domain_error("estimate_alpha: no coefficients");
    }
    if (bracket.lower == bracket.upper) {
        return bracket.lower;
    }

    const MarginalLikelihood loglik(coeffs, n_eff);
    const double step =
        (bracket.upper - bracket.lower) / static_cast<double>(kCoarseGridPoints - 1);
    auto grid = [&](std::size_t k) {
        return k + 1 == kCoarseGridPoints ? bracket.upper
                                          : bracket.lower + static_cast<double>(k) * step;
    };

    std::size_t best = 0;
    double best_value = loglik(grid(0));
    for (std::size_t k = 1; k < kCoarseGridPoints; ++k) {
        const double value = loglik(grid(k));
        if (value > best_value) {
            best = k;
            best_value = value;
        }
    }

    const double lo = grid(best == 0 ? 0 : best - 1);
    const double hi = grid(std::min(best + 1, kCoarseGridPoints - 1));
    const double refined = golden_section_max(loglik, lo, hi, kGoldenTolerance);
    return loglik(refined) > best_value ? refined : grid(best);
}

PosteriorParams posterior_params(std::span<const double> coeffs, double n_eff, double alpha,
                                 AlphaBracket bracket) {
    check_n_eff(n_eff);
    if (!(alpha >= 0.0)) {
        throw std::domain_error("alpha must be nonnegative");
    }
    PosteriorParams params;
    params.alpha_hat = alpha;
    params.n_eff = n_eff;
    params.bracket = bracket;
    params.post_mean.resize(coeffs.size());
    params.post_var.resize(coeffs.size());
    const double exponent = 1.0 + 2.0 * alpha;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        const double precision = std::pow(static_cast<double>(j + 1), exponent);
        const double shrink = std::isinf(n_eff) ? 1.0 : n_eff / (n_eff + precision);
        params.post_mean[j] = shrink * coeffs[j];
        params.post_var[j] = 1.0 / (n_eff + precision);
    }
    return params;
}

PosteriorParams posterior_params(std::span<const double> coeffs, double n_eff, double alpha) {
    return posterior_params(coeffs, n_eff, alpha, default_bracket(coeffs.size()));
}

PosteriorParams fit_posterior(std::span<const double> coeffs, double n_eff, AlphaBracket bracket) {
    const double alpha = estimate_alpha(coeffs, n_eff, bracket);
    return posterior_params(coeffs, n_eff, alpha, bracket);
}

PosteriorParams rescale(const PosteriorParams& params, std::span<const double> factors) {
    if (factors.size() != params.n()) {
        throw std::domain_error("rescale: factor count differs from posterior length");
    }
    PosteriorParams out = params;
    for (std::size_t j = 0; j < factors.size(); ++j) {
        out.post_mean[j] *= factors[j];
        out.post_var[j] *= factors[j] * factors[j];
    }
    return out;
}

PosteriorSampler::PosteriorSampler(const PosteriorParams& params, std::uint64_t seed)
    : mean_(params.post_mean), sd_(params.post_var.size()), seed_(seed) {
    if (params.post_var.size() != mean_.size()) {
        throw std::domain_error("posterior mean and variance lengths differ");
    }
    std::transform(params.post_var.begin(), params.post_var.end(), sd_.begin(),
                   [](double v) { return std::sqrt(std::max(v, 0.0)); });
}

void PosteriorSampler::draw(std::size_t k, std::span<double> out) const {
    if (out.size() != mean_.size()) {
        throw std::domain_error("draw buffer has the wrong length");
    }
    std::mt19937_64 rng(mix_seed(seed_, k));
    std::normal_distribution<double> normal;
    for (std::size_t j = 0; j < out.size(); ++j) {
        out[j] = mean_[j] + sd_[j] * normal(rng);
    }
}

DrawSet sample_posterior(const PosteriorParams& params, std::size_t num_draws, std::uint64_t seed) {
    if (num_draws == 0) {
        throw std::domain_error("sample_posterior: need at least one draw");
    }
    const PosteriorSampler sampler(params, seed);
    DrawSet draws(num_draws, std::vector<double>(sampler.dim()));
    for (std::size_t k = 0; k < num_draws; ++k) {
        sampler.draw(k, draws[k]);
    }
    return draws;
}

std::size_t kept_count(double level, std::size_t num_draws) {
    check_level(level);
    const double target = std::floor(level * static_cast<double>(num_draws) + 0.5);
    const auto m = static_cast<std::size_t>(std::max(target, 1.0));
    return std::min(m, num_draws);
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw std::domain_error("l2_distance: length mismatch");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        const double d = a[j] - b[j];
        sum += d * d;
    }
    return std::sqrt(sum);
}

std::vector<std::size_t> closest_indices(std::span<const double> distances, std::size_t m) {
    std::vector<std::size_t> order(distances.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return distances[a] < distances[b]; });
    order.resize(std::min(m, order.size()));
    return order;
}

double credible_radius(const DrawSet& draws, std::span<const double> center, double level) {
    check_level(level);
    if (draws.empty()) {
        throw std::domain_error("credible_radius: no draws");
    }
    std::vector<double> distances(draws.size());
    for (std::size_t k = 0; k < draws.size(); ++k) {
        distances[k] = l2_distance(draws[k], center);
    }
    const std::size_t m = kept_count(level, draws.size());
    std::nth_element(distances.begin(), distances.begin() + static_cast<std::ptrdiff_t>(m - 1),
                     distances.end());
    return distances[m - 1];
}

}  // namespace ebband
