#pragma once

#include <cstddef>
#include <vector>

namespace ebband {

inline constexpr int kNumTestCases = 5;

/// Density of a Beta(a, b) distribution at t in [0, 1].
/// Throws std::domain_error for a <= 0, b <= 0 or t outside [0, 1].
double beta_density(double a, double b, double t);

/// Scale c such that the integral over [0, 1] of (c * raw_case(t))^2 is one.
/// Computed once per case and cached.
double normalization_constant(int case_id);

/// Unnormalized signal for case 1..5.
double raw_test_function(int case_id, double t);

/// normalization_constant(case_id) * raw_test_function(case_id, t).
double eval_test_function(int case_id, double t);

/**
 * One of the five benchmark regression signals on [0, 1], scaled to unit
 * L2 norm:
 *
 *   1. B(10,5) + B(7,7) + B(5,10)
 *   2. 3 B(30,17) + 2 B(3,11)
 *   3. 7 B(15,30) + 2 sin(32 pi t - 2 pi / 3) - 3 cos(16 pi t) - cos(64 pi t)
 *   4. triangle on [1/3, 2/3] peaking at 1/2
 *   5. constant 1 with a spike of height 0.4 on [0.45, 0.55]
 *
 * where B(a,b) is the Beta(a,b) density.  At t = 1/2 in cases 4 and 5 the
 * two indicator pieces overlap; only the rising piece is evaluated.
 */
class TestFunction {
public:
    explicit TestFunction(int case_id);

    int case_id() const noexcept { return case_id_; }
    double normalization_constant() const noexcept { return scale_; }

    double operator()(double t) const;

    /// Values on the design grid t_i = i/n, i = 1..n.
    std::vector<double> sample(std::size_t n) const;

private:
    int case_id_;
    double scale_;
};

}  // namespace ebband
