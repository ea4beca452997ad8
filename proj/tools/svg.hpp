#pragma once

#include <iosfwd>
#include <vector>

#include "ebband/band.hpp"

namespace ebband::svg {

/// Renders observed data (gray dots), the band (filled polygon), the band
/// center (dashed) and the truth (solid) on the design grid.
void write_band_plot(std::ostream& out, const Band& band, const std::vector<double>& truth,
                     const std::vector<double>& data);

}  // namespace ebband::svg
