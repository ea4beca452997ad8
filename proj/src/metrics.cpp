#include "ebband/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ebband {
namespace {

void check_lengths(std::span<const double> truth, const Band& band) {
    if (truth.size() != band.lower.size() || truth.size() != band.upper.size()) {
        throw std::domain_error("truth and band lengths differ");
    }
    if (truth.empty()) {
        throw std::domain_error("empty grid");
    }
}

}  // namespace

double noncoverage_fraction(std::span<const double> truth, const Band& band) {
    check_lengths(truth, band);
    std::size_t outside = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (truth[i] < band.lower[i] || truth[i] > band.upper[i]) {
            ++outside;
        }
    }
    return static_cast<double>(outside) / static_cast<double>(truth.size());
}

ExcessMass excess_mass(std::span<const double> truth, const Band& band) {
    check_lengths(truth, band);
    double excess = 0.0;
    double mass = 0.0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        excess += std::max(truth[i] - band.upper[i], 0.0) + std::max(band.lower[i] - truth[i], 0.0);
        mass += std::abs(truth[i]);
    }
    const auto n = static_cast<double>(truth.size());
    ExcessMass result;
    result.absolute = excess / n;
    if (result.absolute == 0.0) {
        result.relative = 0.0;
    } else if (mass == 0.0) {
        result.relative = std::numeric_limits<double>::infinity();
    } else {
        result.relative = excess / mass;
    }
    return result;
}

bool sup_coverage(std::span<const double> truth, const Band& band) {
    check_lengths(truth, band);
    for (std::size_t i = 0; i < truth.size(); ++i) {
        if (!(band.lower[i] <= truth[i] && truth[i] <= band.upper[i])) {
            return false;
        }
    }
    return true;
}

bool ball_coverage(std::span<const double> theta_true, std::span<const double> post_mean,
                   double radius) {
    if (theta_true.size() != post_mean.size()) {
        throw std::domain_error("ball_coverage: length mismatch");
    }
    if (!(radius >= 0.0)) {
        throw std::domain_error("ball_coverage: radius must be nonnegative");
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < theta_true.size(); ++j) {
        const double d = theta_true[j] - post_mean[j];
        sum += d * d;
    }
    return std::sqrt(sum) <= radius;
}

BandWidths band_widths(const Band& band) {
    if (band.lower.size() != band.upper.size() || band.lower.empty()) {
        throw std::domain_error("band_widths: malformed band");
    }
    BandWidths widths;
    double total = 0.0;
    for (std::size_t i = 0; i < band.lower.size(); ++i) {
        const double w = band.upper[i] - band.lower[i];
        widths.max_width = std::max(widths.max_width, w);
        total += w;
    }
    widths.ave_width = total / static_cast<double>(band.lower.size());
    return widths;
}

}  // namespace ebband
