#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ebband/band.hpp"
#include "ebband/ebayes.hpp"

namespace ebband {

struct SimConfig {
    int case_id = 1;
    std::size_t n = 1024;
    double sigma = 1.0;
    std::size_t reps = 500;
    std::size_t draws = 2000;
    double level = 0.95;
    std::uint64_t base_seed = 1;
    std::optional<AlphaBracket> bracket;  // defaults to [0, ln n]

    /// Throws std::domain_error on an invalid configuration.
    void validate() const;
};

struct ReplicationMetrics {
    std::size_t rep = 0;
    double alpha_hat = 0.0;
    double max_width = 0.0;
    double ave_width = 0.0;
    double nc = 0.0;
    double re = 0.0;
    bool sup_covered = false;
    bool ball_covered = false;
    double radius = 0.0;
};

struct SummaryRow {
    int case_id = 0;
    std::size_t n = 0;
    double mean_max_width = 0.0;
    double mean_ave_width = 0.0;
    double nc_p95 = 0.0;
    double re_p95 = 0.0;
    double sup_cover_rate = 0.0;
    double ball_cover_rate = 0.0;
    double mean_alpha_hat = 0.0;
};

struct SimulationResult {
    std::vector<ReplicationMetrics> replications;  // in replication order
    SummaryRow summary;
};

/// Everything one replication produces before it is reduced to metrics.
struct BandRun {
    std::vector<double> data;        // y_i
    std::vector<double> truth;       // f(t_i)
    std::vector<double> theta_true;  // analyze(truth)
    PosteriorParams params;  // in the calibrated coordinates of analyze()
    Band band;
};

/// Seed of replication rep_index: mix_seed(base_seed, rep_index).
std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t rep_index);

/// Data, transform, alpha fit, posterior draws and band for one replication.
BandRun simulate_band(const SimConfig& config, std::size_t rep_index);

/// Full pipeline for one replication: data, transform, alpha fit,
/// posterior draws, band, metrics.  Deterministic in (config, rep_index).
ReplicationMetrics run_replication(const SimConfig& config, std::size_t rep_index);

/// k-th smallest value with k = ceil(p * count).
/// Throws std::domain_error for empty input or p outside (0, 1).
double percentile(std::span<const double> values, double p);

/// Aggregates replications in the given order.
SummaryRow summarize(int case_id, std::size_t n, std::span<const ReplicationMetrics> reps);

/// Runs config.reps replications on up to `workers` threads.  The result
/// does not depend on the worker count.
SimulationResult run_simulation(const SimConfig& config, unsigned workers = 1);

}  // namespace ebband
