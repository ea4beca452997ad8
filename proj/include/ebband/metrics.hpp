#pragma once

#include <span>

#include "ebband/band.hpp"

namespace ebband {

struct ExcessMass {
    double absolute = 0.0;
    double relative = 0.0;  // +inf when the truth has zero mass but escapes the band
};

struct BandWidths {
    double max_width = 0.0;
    double ave_width = 0.0;
};

// All grid integrals use uniform weight 1/n; boundary contact counts as covered.

/// Fraction of grid points where the truth lies strictly outside the band.
double noncoverage_fraction(std::span<const double> truth, const Band& band);

ExcessMass excess_mass(std::span<const double> truth, const Band& band);

bool sup_coverage(std::span<const double> truth, const Band& band);

/// True iff ||theta_true - post_mean||_2 <= radius.
bool ball_coverage(std::span<const double> theta_true, std::span<const double> post_mean,
                   double radius);

BandWidths band_widths(const Band& band);

}  // namespace ebband
