#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include "ebband/metrics.hpp"
#include "ebband/transform.hpp"

using Catch::Approx;
using namespace ebband;

namespace {

Band constant_band(std::size_t n, double lo, double hi) {
    Band b;
    b.lower.assign(n, lo);
    b.upper.assign(n, hi);
    b.center.assign(n, 0.5 * (lo + hi));
    return b;
}

std::vector<double> ramp(std::size_t n) {
    std::vector<double> f(n);
    for (std::size_t i = 1; i <= n; ++i) {
        f[i - 1] = 2.0 * grid_point(i, n);
    }
    return f;
}

}  // namespace

TEST_CASE("noncoverage_fraction") {
    CHECK(noncoverage_fraction(std::vector<double>(10, 0.0), constant_band(10, -1.0, 1.0)) == 0.0);

    const std::size_t n = 4096;
    CHECK(std::abs(noncoverage_fraction(ramp(n), constant_band(n, 0.0, 1.0)) - 0.5) <= 1.0 / n);

    const Band b = constant_band(5, -1.0, 2.0);
    CHECK(noncoverage_fraction(b.upper, b) == 0.0);
    CHECK(noncoverage_fraction(b.lower, b) == 0.0);

    CHECK_THROWS_AS(noncoverage_fraction(std::vector<double>(4, 0.0), b), std::domain_error);
}

TEST_CASE("excess_mass") {
    const ExcessMass inside = excess_mass(std::vector<double>(6, 0.5), constant_band(6, 0.0, 1.0));
    CHECK(inside.absolute == 0.0);
    CHECK(inside.relative == 0.0);

    const std::size_t n = 4096;
    const std::vector<double> f = ramp(n);
    const ExcessMass e = excess_mass(f, constant_band(n, 0.0, 1.0));
    CHECK(std::abs(e.absolute - 0.25) <= 2.0 / n);
    // mass of 2t on [0,1] is 1
    CHECK(std::abs(e.relative - 0.25) <= 2.0 / n);

    std::vector<double> f2 = f;
    for (auto& v : f2) {
        v *= 2.0;
    }
    const ExcessMass e2 = excess_mass(f2, constant_band(n, 0.0, 2.0));
    CHECK(e2.absolute == Approx(2.0 * e.absolute).epsilon(1e-14));
    CHECK(e2.relative == Approx(e.relative).epsilon(1e-14));

    const ExcessMass zero_mass = excess_mass(std::vector<double>(3, 0.0), constant_band(3, 1.0, 2.0));
    CHECK(zero_mass.absolute == Approx(1.0));
    CHECK(zero_mass.relative == std::numeric_limits<double>::infinity());
}

TEST_CASE("sup_coverage") {
    const std::vector<double> f{0.1, 0.2, 0.3};
    Band b;
    b.lower = f;
    b.upper = f;
    CHECK(sup_coverage(f, b));
    b.lower[1] = 0.25;
    CHECK_FALSE(sup_coverage(f, b));

    std::mt19937_64 rng(4);
    std::normal_distribution<double> normal;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> truth(20);
        Band band = constant_band(20, -1.5, 1.5);
        for (auto& v : truth) {
            v = normal(rng);
        }
        CHECK(sup_coverage(truth, band) == (noncoverage_fraction(truth, band) == 0.0));
    }
}

TEST_CASE("ball_coverage") {
    const std::vector<double> a{1.0, 2.0, 3.0};
    CHECK(ball_coverage(a, a, 0.0));
    CHECK_FALSE(ball_coverage(std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 0.0}, 0.999));
    CHECK(ball_coverage(std::vector<double>{1.0, 0.0}, std::vector<double>{0.0, 0.0}, 1.0));
    CHECK_THROWS_AS(ball_coverage(a, std::vector<double>{1.0}, 1.0), std::domain_error);

    // coefficient distance equals grid L2 distance between synthesized curves
    std::mt19937_64 rng(12);
    std::normal_distribution<double> normal;
    const std::size_t n = 512;
    std::vector<double> s(n);
    std::vector<double> t(n);
    for (std::size_t j = 0; j < n; ++j) {
        s[j] = normal(rng) / (j + 1.0);
        t[j] = normal(rng) / (j + 1.0);
    }
    const std::vector<double> gs = synthesize(s, n);
    const std::vector<double> gt = synthesize(t, n);
    double grid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        grid += (gs[i] - gt[i]) * (gs[i] - gt[i]);
    }
    grid = std::sqrt(grid / n);
    CHECK(std::abs(l2_distance(s, t) - grid) < 1e-9);
}

TEST_CASE("band_widths") {
    const BandWidths c = band_widths(constant_band(7, -0.25, 0.5));
    CHECK(c.max_width == 0.75);
    CHECK(c.ave_width == Approx(0.75).epsilon(1e-15));
    const BandWidths z = band_widths(constant_band(7, 1.0, 1.0));
    CHECK(z.max_width == 0.0);
    CHECK(z.ave_width == 0.0);

    Band b = constant_band(4, 0.0, 1.0);
    b.upper[2] = 3.0;
    const BandWidths w = band_widths(b);
    CHECK(w.max_width == 3.0);
    CHECK(w.ave_width == 1.5);
    CHECK(w.max_width >= w.ave_width);
}
