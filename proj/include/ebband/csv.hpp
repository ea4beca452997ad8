#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ebband/band.hpp"
#include "ebband/harness.hpp"

namespace ebband::csv {

/// 17 significant digits, "%.17g" style, independent of the C locale.
std::string format_real(double value);

inline constexpr std::string_view kBandHeader = "t,lower,upper,center,truth,data";
inline constexpr std::string_view kReplicationHeader =
    "rep,case,n,draws,alpha_hat,max_width,ave_width,nc,re,sup_cover,ball_cover,radius";
inline constexpr std::string_view kSummaryHeader =
    "case,n,mean_max_width,mean_ave_width,nc_p95,re_p95,sup_cover_rate,ball_cover_rate,"
    "mean_alpha_hat";

void write_band(std::ostream& out, const Band& band, const std::vector<double>& truth,
                const std::vector<double>& data);

void write_replications(std::ostream& out, int case_id, std::size_t n, std::size_t draws,
                        const std::vector<ReplicationMetrics>& reps);

void write_summary(std::ostream& out, const std::vector<SummaryRow>& rows);

struct ReplicationRecord {
    int case_id = 0;
    std::size_t n = 0;
    std::size_t draws = 0;
    ReplicationMetrics metrics;
};

/// Parses a per-replication CSV as written by write_replications.
/// Throws std::runtime_error on a malformed header or row.
std::vector<ReplicationRecord> read_replications(std::istream& in);

}  // namespace ebband::csv
