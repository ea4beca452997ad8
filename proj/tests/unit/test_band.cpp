#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "ebband/band.hpp"
#include "ebband/transform.hpp"

using Catch::Approx;
using namespace ebband;

namespace {

PosteriorParams test_posterior(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<double> s(n);
    for (std::size_t j = 1; j <= n; ++j) {
        s[j - 1] = std::pow(static_cast<double>(j), -1.0) * normal(rng) + normal(rng) / std::sqrt(n);
    }
    return posterior_params(s, static_cast<double>(n), 0.8);
}

// Naive envelope: sort every draw by distance, keep m, take min/max per point.
Band naive_band(const DrawSet& draws, const PosteriorParams& p, double level) {
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t k = 0; k < draws.size(); ++k) {
        order.emplace_back(l2_distance(draws[k], p.post_mean), k);
    }
    std::sort(order.begin(), order.end());
    const std::size_t m = kept_count(level, draws.size());
    const std::size_t n = p.n();
    Band b;
    b.lower.assign(n, std::numeric_limits<double>::infinity());
    b.upper.assign(n, -std::numeric_limits<double>::infinity());
    for (std::size_t r = 0; r < m; ++r) {
        const std::vector<double> g = synthesize_direct(draws[order[r].second]);
        for (std::size_t i = 0; i < n; ++i) {
            b.lower[i] = std::min(b.lower[i], g[i]);
            b.upper[i] = std::max(b.upper[i], g[i]);
        }
    }
    b.kept = m;
    b.radius = order[m - 1].first;
    return b;
}

}  // namespace

TEST_CASE("band matches a naive envelope") {
    const PosteriorParams p = test_posterior(64, 1);
    const DrawSet draws = sample_posterior(p, 300, 2);
    const Band fast = build_band(draws, p, 0.95);
    const Band slow = naive_band(draws, p, 0.95);
    REQUIRE(fast.n() == 64);
    CHECK(fast.kept == 285);
    CHECK(fast.kept == slow.kept);
    CHECK(fast.radius == slow.radius);
    for (std::size_t i = 0; i < 64; ++i) {
        CHECK(fast.lower[i] == Approx(slow.lower[i]).margin(1e-12));
        CHECK(fast.upper[i] == Approx(slow.upper[i]).margin(1e-12));
        CHECK(fast.lower[i] <= fast.center[i]);
        CHECK(fast.center[i] <= fast.upper[i]);
    }
    const std::vector<double> center = synthesize(p.post_mean, 64);
    CHECK(fast.center == center);
}

TEST_CASE("streaming band equals the materialized band") {
    const PosteriorParams p = test_posterior(256, 3);
    const DrawSet draws = sample_posterior(p, 500, 77);
    const Band a = build_band(draws, p, 0.9);
    const Band b = build_band(PosteriorSampler(p, 77), p, 500, 0.9);
    CHECK(a.lower == b.lower);
    CHECK(a.upper == b.upper);
    CHECK(a.center == b.center);
    CHECK(a.kept == b.kept);
    CHECK(a.radius == b.radius);
}

TEST_CASE("degenerate draws give a zero-width band") {
    PosteriorParams p = test_posterior(16, 5);
    std::fill(p.post_var.begin(), p.post_var.end(), 0.0);
    const Band b = build_band(sample_posterior(p, 10, 1), p, 0.95);
    CHECK(b.lower == b.upper);
    CHECK(b.lower == b.center);
    CHECK(b.radius == 0.0);
}

TEST_CASE("N = 4 keeps all four draws") {
    const PosteriorParams p = test_posterior(8, 6);
    const DrawSet draws = sample_posterior(p, 4, 8);
    const Band b = build_band(draws, p, 0.95);
    CHECK(b.kept == 4);
    for (std::size_t i = 0; i < 8; ++i) {
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (const auto& d : draws) {
            const double g = synthesize(d, 8)[i];
            lo = std::min(lo, g);
            hi = std::max(hi, g);
        }
        CHECK(b.lower[i] == Approx(lo).margin(1e-13));
        CHECK(b.upper[i] == Approx(hi).margin(1e-13));
    }
}

TEST_CASE("band errors") {
    const PosteriorParams p = test_posterior(8, 6);
    CHECK_THROWS_AS(build_band(sample_posterior(p, 1, 1), p, 0.95), std::domain_error);
    CHECK_THROWS_AS(build_band(sample_posterior(p, 4, 1), p, 1.0), std::domain_error);
    CHECK_THROWS_AS(build_band(sample_posterior(p, 4, 1), p, 0.0), std::domain_error);
    DrawSet bad(3, std::vector<double>(7, 0.0));
    CHECK_THROWS_AS(build_band(bad, p, 0.5), std::domain_error);
    CHECK_THROWS_AS(build_band(PosteriorSampler(p, 1), p, 1, 0.95), std::domain_error);
}
