#include "ebband/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ebband/band.hpp"
#include "ebband/metrics.hpp"
#include "ebband/seeding.hpp"
#include "ebband/testfns.hpp"
#include "ebband/transform.hpp"

namespace ebband {
namespace {

// Streams derived from a replication seed.
constexpr std::uint64_t kDataStream = 1;
constexpr std::uint64_t kPosteriorStream = 2;

}  // namespace

void SimConfig::validate() const {
    if (case_id < 1 || case_id > kNumTestCases) {
        throw std::domain_error("case must be in 1..5");
    }
    if (n < 2) {
        throw std::domain_error("n must be at least 2");
    }
    if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
        throw std::domain_error("sigma must be finite and nonnegative");
    }
    if (reps < 1) {
        throw std::domain_error("reps must be at least 1");
    }
    if (draws < 2) {
        throw std::domain_error("draws must be at least 2");
    }
    if (!(level > 0.0 && level < 1.0)) {
        throw std::domain_error("level must lie in (0, 1)");
    }
}

std::uint64_t replication_seed(std::uint64_t base_seed, std::size_t rep_index) {
    return mix_seed(base_seed, static_cast<std::uint64_t>(rep_index));
}

BandRun simulate_band(const SimConfig& config, std::size_t rep_index) {
    config.validate();
    const std::uint64_t seed = replication_seed(config.base_seed, rep_index);
    const TestFunction f(config.case_id);

    std::mt19937_64 data_rng(mix_seed(seed, kDataStream));
    RegressionData data = generate_data(f, config.n, config.sigma, data_rng);
    const SequenceObservations obs = analyze(data);

    const double n_eff = static_cast<double>(config.n) / (config.sigma * config.sigma);
    const AlphaBracket bracket = config.bracket.value_or(default_bracket(config.n));

    // Fit on the plain cosine averages, then express the posterior in the
    // calibrated coordinates where l2 distance is the grid L2 distance.
    const std::vector<double> model_coeffs = to_model_scale(obs.coeffs);
    const PosteriorParams model = fit_posterior(model_coeffs, n_eff, bracket);
    std::vector<double> weights(config.n);
    for (std::size_t j = 0; j < config.n; ++j) {
        weights[j] = model_scale_weight(j + 1);
    }

    BandRun run;
    run.params = rescale(model, weights);
    const PosteriorSampler sampler(run.params, mix_seed(seed, kPosteriorStream));
    run.band = build_band(sampler, run.params, config.draws, config.level);
    run.truth = f.sample(config.n);
    run.theta_true = analyze(run.truth);
    run.data = std::move(data.y);
    return run;
}

ReplicationMetrics run_replication(const SimConfig& config, std::size_t rep_index) {
    const BandRun run = simulate_band(config, rep_index);
    const BandWidths widths = band_widths(run.band);

    ReplicationMetrics m;
    m.rep = rep_index;
    m.alpha_hat = run.params.alpha_hat;
    m.max_width = widths.max_width;
    m.ave_width = widths.ave_width;
    m.nc = noncoverage_fraction(run.truth, run.band);
    m.re = excess_mass(run.truth, run.band).relative;
    m.sup_covered = sup_coverage(run.truth, run.band);
    m.ball_covered = ball_coverage(run.theta_true, run.params.post_mean, run.band.radius);
    m.radius = run.band.radius;
    return m;
}

double percentile(std::span<const double> values, double p) {
    if (values.empty()) {
        throw std::domain_error("percentile: empty input");
    }
    if (!(p > 0.0 && p < 1.0)) {
        throw std::domain_error("percentile: p must lie in (0, 1)");
    }
    const auto count = static_cast<double>(values.size());
    // The small offset keeps p * count from rounding up past an integer.
    auto k = static_cast<std::size_t>(std::ceil(p * count - 1e-9));
    k = std::clamp<std::size_t>(k, 1, values.size());
    std::vector<double> sorted(values.begin(), values.end());
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(k - 1),
                     sorted.end());
    return sorted[k - 1];
}

SummaryRow summarize(int case_id, std::size_t n, std::span<const ReplicationMetrics> reps) {
    if (reps.empty()) {
        throw std::domain_error("summarize: no replications");
    }
    SummaryRow row;
    row.case_id = case_id;
    row.n = n;
    std::vector<double> nc;
    std::vector<double> re;
    nc.reserve(reps.size());
    re.reserve(reps.size());
    double sup = 0.0;
    double ball = 0.0;
    for (const auto& r : reps) {
        row.mean_max_width += r.max_width;
        row.mean_ave_width += r.ave_width;
        row.mean_alpha_hat += r.alpha_hat;
        sup += r.sup_covered ? 1.0 : 0.0;
        ball += r.ball_covered ? 1.0 : 0.0;
        nc.push_back(r.nc);
        re.push_back(r.re);
    }
    const auto count = static_cast<double>(reps.size());
    row.mean_max_width /= count;
    row.mean_ave_width /= count;
    row.mean_alpha_hat /= count;
    row.sup_cover_rate = sup / count;
    row.ball_cover_rate = ball / count;
    row.nc_p95 = percentile(nc, 0.95);
    row.re_p95 = percentile(re, 0.95);
    return row;
}

SimulationResult run_simulation(const SimConfig& config, unsigned workers) {
    config.validate();
    workers = std::clamp<unsigned>(workers, 1, static_cast<unsigned>(config.reps));

    SimulationResult result;
    result.replications.resize(config.reps);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t rep = next++; rep < config.reps; rep = next++) {
            try {
                result.replications[rep] = run_replication(config, rep);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = config.reps;
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    result.summary = summarize(config.case_id, config.n, result.replications);
    return result;
}

}  // namespace ebband
