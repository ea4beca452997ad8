#include "svg.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <string>

#include "ebband/csv.hpp"
#include "ebband/transform.hpp"

namespace ebband::svg {
namespace {

constexpr double kWidth = 900.0;
constexpr double kHeight = 450.0;
constexpr double kMargin = 30.0;

struct Frame {
    double y_min;
    double y_max;

    double px(double t) const { return kMargin + t * (kWidth - 2 * kMargin); }
    double py(double v) const {
        return kHeight - kMargin - (v - y_min) / (y_max - y_min) * (kHeight - 2 * kMargin);
    }
};

std::string point(double x, double y) {
    return csv::format_real(x) + "," + csv::format_real(y);
}

}  // namespace

void write_band_plot(std::ostream& out, const Band& band, const std::vector<double>& truth,
                     const std::vector<double>& data) {
    const std::size_t n = band.n();
    if (truth.size() != n || data.size() != n || n == 0) {
        throw std::domain_error("write_band_plot: column lengths differ");
    }
    double lo = *std::min_element(band.lower.begin(), band.lower.end());
    double hi = *std::max_element(band.upper.begin(), band.upper.end());
    for (std::size_t i = 0; i < n; ++i) {
        lo = std::min({lo, truth[i], data[i]});
        hi = std::max({hi, truth[i], data[i]});
    }
    if (hi <= lo) {
        hi = lo + 1.0;
    }
    const Frame frame{lo, hi};
    auto t = [n](std::size_t i) { return grid_point(i + 1, n); };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    out << "<g fill=\"#999999\" fill-opacity=\"0.5\">\n";
    for (std::size_t i = 0; i < n; ++i) {
        out << "<circle cx=\"" << csv::format_real(frame.px(t(i))) << "\" cy=\""
            << csv::format_real(frame.py(data[i])) << "\" r=\"1\"/>\n";
    }
    out << "</g>\n";

    out << "<polygon fill=\"orange\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < n; ++i) {
        out << point(frame.px(t(i)), frame.py(band.upper[i])) << ' ';
    }
    for (std::size_t i = n; i-- > 0;) {
        out << point(frame.px(t(i)), frame.py(band.lower[i])) << ' ';
    }
    out << "\"/>\n";

    auto polyline = [&](const std::vector<double>& ys, const char* style) {
        out << "<polyline fill=\"none\" " << style << " points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            out << point(frame.px(t(i)), frame.py(ys[i])) << ' ';
        }
        out << "\"/>\n";
    };
    polyline(truth, "stroke=\"black\" stroke-width=\"1.5\"");
    polyline(band.center, "stroke=\"black\" stroke-width=\"1\" stroke-dasharray=\"6,4\"");
    out << "</svg>\n";
}

}  // namespace ebband::svg
