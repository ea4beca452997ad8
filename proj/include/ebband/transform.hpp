#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

namespace ebband {

class TestFunction;

/// Observations y_i = f(t_i) + sigma * eps_i on the grid t_i = i/n.
struct RegressionData {
    std::vector<double> y;
    double sigma = 1.0;

    std::size_t n() const noexcept { return y.size(); }
};

/// Calibrated cosine coefficients S_j = theta_j + (sigma / sqrt(n)) Z_j.
struct SequenceObservations {
    std::vector<double> coeffs;
    double noise_level = 0.0;  // sigma / sqrt(n)

    std::size_t n() const noexcept { return coeffs.size(); }
};

/// Grid location of sample i (1-based) on an n-point design.
inline double grid_point(std::size_t i, std::size_t n) {
    return static_cast<double>(i) / static_cast<double>(n);
}

RegressionData generate_data(const TestFunction& f, std::size_t n, double sigma,
                             std::mt19937_64& rng);

/**
 * Forward transform of grid samples to calibrated cosine coefficients,
 *
 *   S_j = (sqrt(2) / n) sum_i C[j,i] y_i,  j = 1..n,
 *   C[j,i] = (w_j / sqrt(2)) cos((j - 1) pi (i - 1/2) / n),  w_1 = 1, w_j = sqrt(2) otherwise.
 *
 * C C^T = (n/2) I, so sum_j S_j^2 equals (1/n) sum_i y_i^2 and the noise on
 * each S_j has variance sigma^2 / n.  Runs in O(n log n).
 */
std::vector<double> analyze(std::span<const double> y);
SequenceObservations analyze(const RegressionData& data);

/// Inverse of analyze: g_i = sqrt(2) sum_j C[j,i] theta_j.
/// Throws std::domain_error if theta.size() != n.
std::vector<double> synthesize(std::span<const double> theta, std::size_t n);

/// Allocation-free synthesize; out.size() must equal theta.size().
void synthesize_into(std::span<const double> theta, std::span<double> out);

/// O(n^2) matrix-product versions of the two transforms, kept as references.
std::vector<double> analyze_direct(std::span<const double> y);
std::vector<double> synthesize_direct(std::span<const double> theta);

/// Kernel entry C[j,i] for 1-based j, i.
double cosine_kernel(std::size_t j, std::size_t i, std::size_t n);

/**
 * The posterior is fitted on the plain cosine averages
 *
 *   X_j = (1/n) sum_i y_i cos((j - 1) pi (i - 1/2) / n) = S_j / w_j,
 *
 * treated as a sequence model with noise level sigma / sqrt(n).  These
 * convert between the two coordinate systems.
 */
double model_scale_weight(std::size_t j);
std::vector<double> to_model_scale(std::span<const double> coeffs);
std::vector<double> from_model_scale(std::span<const double> model_coeffs);

}  // namespace ebband
