#include "ebband/csv.hpp"

#include <array>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "ebband/transform.hpp"

namespace ebband::csv {
namespace {

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        fields.push_back(line.substr(start, comma - start));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

template <class T>
T parse(std::string_view field, std::size_t line_no) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw std::runtime_error("line " + std::to_string(line_no) + ": cannot parse '" +
                                 std::string(field) + "'");
    }
    return value;
}

std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
    }
    return line;
}

}  // namespace

std::string format_real(double value) {
    std::array<char, 64> buffer{};
    const auto [ptr, ec] = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                         std::chars_format::general, 17);
    if (ec != std::errc{}) {
        throw std::runtime_error("format_real: conversion failed");
    }
    return std::string(buffer.data(), ptr);
}

void write_band(std::ostream& out, const Band& band, const std::vector<double>& truth,
                const std::vector<double>& data) {
    const std::size_t n = band.n();
    if (truth.size() != n || data.size() != n || band.center.size() != n) {
        throw std::domain_error("write_band: column lengths differ");
    }
    out << kBandHeader << '\n';
    for (std::size_t i = 0; i < n; ++i) {
        out << format_real(grid_point(i + 1, n)) << ',' << format_real(band.lower[i]) << ','
            << format_real(band.upper[i]) << ',' << format_real(band.center[i]) << ','
            << format_real(truth[i]) << ',' << format_real(data[i]) << '\n';
    }
}

void write_replications(std::ostream& out, int case_id, std::size_t n, std::size_t draws,
                        const std::vector<ReplicationMetrics>& reps) {
    out << kReplicationHeader << '\n';
    for (const auto& r : reps) {
        out << r.rep << ',' << case_id << ',' << n << ',' << draws << ','
            << format_real(r.alpha_hat) << ',' << format_real(r.max_width) << ','
            << format_real(r.ave_width) << ',' << format_real(r.nc) << ',' << format_real(r.re)
            << ',' << (r.sup_covered ? 1 : 0) << ',' << (r.ball_covered ? 1 : 0) << ','
            << format_real(r.radius) << '\n';
    }
}

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows) {
    out << kSummaryHeader << '\n';
    for (const auto& s : rows) {
        out << s.case_id << ',' << s.n << ',' << format_real(s.mean_max_width) << ','
            << format_real(s.mean_ave_width) << ',' << format_real(s.nc_p95) << ','
            << format_real(s.re_p95) << ',' << format_real(s.sup_cover_rate) << ','
            << format_real(s.ball_cover_rate) << ',' << format_real(s.mean_alpha_hat) << '\n';
    }
}

std::vector<ReplicationRecord> read_replications(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || strip_cr(line) != kReplicationHeader) {
        throw std::runtime_error("per-replication CSV: unexpected header");
    }
    std::vector<ReplicationRecord> records;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = strip_cr(line);
        if (view.empty()) {
            continue;
        }
        const auto f = split(view);
        if (f.size() != 12) {
            throw std::runtime_error("line " + std::to_string(line_no) + ": expected 12 fields");
        }
        ReplicationRecord rec;
        rec.metrics.rep = parse<std::size_t>(f[0], line_no);
        rec.case_id = parse<int>(f[1], line_no);
        rec.n = parse<std::size_t>(f[2], line_no);
        rec.draws = parse<std::size_t>(f[3], line_no);
        rec.metrics.alpha_hat = parse<double>(f[4], line_no);
        rec.metrics.max_width = parse<double>(f[5], line_no);
        rec.metrics.ave_width = parse<double>(f[6], line_no);
        rec.metrics.nc = parse<double>(f[7], line_no);
        rec.metrics.re = parse<double>(f[8], line_no);
        rec.metrics.sup_covered = parse<int>(f[9], line_no) != 0;
        rec.metrics.ball_covered = parse<int>(f[10], line_no) != 0;
        rec.metrics.radius = parse<double>(f[11], line_no);
        records.push_back(rec);
    }
    return records;
}

}  // namespace ebband::csv
