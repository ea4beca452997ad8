#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <utility>

#include "ebband/csv.hpp"
#include "ebband/harness.hpp"
#include "ebband/transform.hpp"
#include "svg.hpp"

namespace ebband::cli {
namespace {

// Unwritable output path.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    return file;
}

void finish_output(std::ofstream& file, const std::string& path) {
    file.flush();
    if (!file) {
        throw IoError("error writing '" + path + "'");
    }
}

const CLI::Validator kOpenUnitInterval(
    [](const std::string& text) -> std::string {
        double v = 0.0;
        std::istringstream in(text);
        in.imbue(std::locale::classic());
        if (!(in >> v) || !(v > 0.0 && v < 1.0)) {
            return "value must lie strictly between 0 and 1";
        }
        return {};
    },
    "(0,1)");

unsigned resolve_workers(int flag_value) {
    if (flag_value > 0) {
        return static_cast<unsigned>(flag_value);
    }
    if (const char* env = std::getenv("EBBAND_WORKERS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1) {
            throw std::domain_error("EBBAND_WORKERS must be a positive integer");
        }
        return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

struct BandOptions {
    int case_id = 1;
    std::size_t n = 0;
    std::size_t draws = 2000;
    double sigma = 1.0;
    std::uint64_t seed = 1;
    double level = 0.95;
    std::string out;
    std::string svg;
};

int cmd_band(const BandOptions& opt, std::ostream& log) {
    SimConfig config;
    config.case_id = opt.case_id;
    config.n = opt.n;
    config.draws = opt.draws;
    config.sigma = opt.sigma;
    config.base_seed = opt.seed;
    config.level = opt.level;
    config.reps = 1;
    config.validate();

    std::ofstream csv_file = open_output(opt.out);
    std::ofstream svg_file;
    if (!opt.svg.empty()) {
        svg_file = open_output(opt.svg);
    }

    const BandRun run = simulate_band(config, 0);
    csv::write_band(csv_file, run.band, run.truth, run.data);
    finish_output(csv_file, opt.out);
    if (!opt.svg.empty()) {
        svg::write_band_plot(svg_file, run.band, run.truth, run.data);
        finish_output(svg_file, opt.svg);
    }
    log << "alpha_hat " << csv::format_real(run.params.alpha_hat) << ", kept " << run.band.kept
        << " of " << opt.draws << " draws, radius " << csv::format_real(run.band.radius) << '\n';
    return kOk;
}

struct SimulateOptions {
    int case_id = 1;
    std::size_t n = 0;
    std::size_t reps = 500;
    std::size_t draws = 2000;
    double sigma = 1.0;
    std::uint64_t seed = 1;
    std::string out;
    std::string summary;
    int workers = 0;
};

int cmd_simulate(const SimulateOptions& opt, std::ostream& log) {
    SimConfig config;
    config.case_id = opt.case_id;
    config.n = opt.n;
    config.reps = opt.reps;
    config.draws = opt.draws;
    config.sigma = opt.sigma;
    config.base_seed = opt.seed;
    config.validate();
    const unsigned workers = resolve_workers(opt.workers);

    std::ofstream reps_file = open_output(opt.out);
    std::ofstream summary_file;
    if (!opt.summary.empty()) {
        summary_file = open_output(opt.summary);
    }

    const SimulationResult result = run_simulation(config, workers);
    csv::write_replications(reps_file, config.case_id, config.n, config.draws,
                            result.replications);
    finish_output(reps_file, opt.out);
    if (!opt.summary.empty()) {
        csv::write_summary(summary_file, {result.summary});
        finish_output(summary_file, opt.summary);
    }
    const SummaryRow& s = result.summary;
    log << "case " << s.case_id << ", n " << s.n << ": mean max width "
        << csv::format_real(s.mean_max_width) << ", mean ave width "
        << csv::format_real(s.mean_ave_width) << ", sup coverage "
        << csv::format_real(s.sup_cover_rate) << ", l2 coverage "
        << csv::format_real(s.ball_cover_rate) << '\n';
    return kOk;
}

struct SummaryOptions {
    std::string in;
    std::string out;
};

int cmd_summary(const SummaryOptions& opt, std::ostream& out) {
    std::ifstream file(opt.in, std::ios::binary);
    if (!file) {
        throw IoError("cannot open '" + opt.in + "' for reading");
    }
    const auto records = csv::read_replications(file);
    if (records.empty()) {
        throw std::domain_error("no replications in '" + opt.in + "'");
    }

    // Groups keep the order in which (case, n) first appears.
    std::vector<std::pair<int, std::size_t>> keys;
    std::map<std::pair<int, std::size_t>, std::vector<ReplicationMetrics>> groups;
    for (const auto& rec : records) {
        const auto key = std::make_pair(rec.case_id, rec.n);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            keys.push_back(key);
        }
        it->second.push_back(rec.metrics);
    }
    std::vector<SummaryRow> rows;
    for (const auto& key : keys) {
        rows.push_back(summarize(key.first, key.second, groups[key]));
    }

    if (opt.out.empty()) {
        csv::write_summary(out, rows);
    } else {
        std::ofstream file_out = open_output(opt.out);
        csv::write_summary(file_out, rows);
        finish_output(file_out, opt.out);
    }
    return kOk;
}

int cmd_transform_check(std::size_t n, std::ostream& out) {
    if (n < 2) {
        throw std::domain_error("--n must be at least 2");
    }
    std::mt19937_64 rng(n);
    std::normal_distribution<double> normal;
    std::vector<double> y(n);
    for (double& v : y) {
        v = normal(rng);
    }

    const std::vector<double> coeffs = analyze(y);
    const std::vector<double> back = synthesize(coeffs, n);
    double round_trip = 0.0;
    double grid_energy = 0.0;
    double coeff_energy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        round_trip = std::max(round_trip, std::abs(back[i] - y[i]));
        grid_energy += y[i] * y[i];
        coeff_energy += coeffs[i] * coeffs[i];
    }
    grid_energy /= static_cast<double>(n);
    const double parseval = std::abs(grid_energy - coeff_energy) / grid_energy;

    // Column k of C C^T is C applied to row k of C; C v = (n / sqrt 2) analyze(v).
    const double half_n = static_cast<double>(n) / 2.0;
    const double to_kernel = static_cast<double>(n) / std::sqrt(2.0);
    double gram = 0.0;
    std::vector<double> row(n);
    for (std::size_t k = 1; k <= n; ++k) {
        for (std::size_t i = 1; i <= n; ++i) {
            row[i - 1] = cosine_kernel(k, i, n);
        }
        const std::vector<double> column = analyze(row);
        for (std::size_t j = 1; j <= n; ++j) {
            const double expected = j == k ? half_n : 0.0;
            gram = std::max(gram, std::abs(to_kernel * column[j - 1] - expected));
        }
    }

    constexpr double kTolerance = 1e-8;
    out << "n " << n << '\n'
        << "round_trip_max_abs_error " << csv::format_real(round_trip) << '\n'
        << "gram_max_abs_deviation " << csv::format_real(gram) << '\n'
        << "parseval_relative_error " << csv::format_real(parseval) << '\n';
    const bool ok = round_trip < kTolerance && gram < kTolerance && parseval < kTolerance;
    out << (ok ? "ok" : "FAILED") << '\n';
    return ok ? kOk : kCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Empirical Bayes credible bands for nonparametric regression", "ebband"};
    app.require_subcommand(1);

    BandOptions band;
    auto* band_cmd = app.add_subcommand("band", "Build the band for one simulated data set");
    band_cmd->add_option("--case", band.case_id, "Test function 1..5")
        ->required()
        ->check(CLI::Range(1, 5));
    band_cmd->add_option("--n", band.n, "Number of equispaced observations")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    band_cmd->add_option("--draws", band.draws, "Posterior draws N")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    band_cmd->add_option("--sigma", band.sigma, "Noise level")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    band_cmd->add_option("--seed", band.seed, "Random seed")->capture_default_str();
    band_cmd->add_option("--level", band.level, "Fraction of draws kept")
        ->capture_default_str()
        ->check(kOpenUnitInterval);
    band_cmd->add_option("--out", band.out, "Band CSV path")->required();
    band_cmd->add_option("--svg", band.svg, "Optional SVG plot path");

    SimulateOptions sim;
    auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo coverage study");
    sim_cmd->add_option("--case", sim.case_id, "Test function 1..5")
        ->required()
        ->check(CLI::Range(1, 5));
    sim_cmd->add_option("--n", sim.n, "Number of equispaced observations")
        ->required()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    sim_cmd->add_option("--reps", sim.reps, "Replications")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{1}, std::numeric_limits<std::size_t>::max()));
    sim_cmd->add_option("--draws", sim.draws, "Posterior draws N per replication")
        ->capture_default_str()
        ->check(CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
    sim_cmd->add_option("--sigma", sim.sigma, "Noise level")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    sim_cmd->add_option("--seed", sim.seed, "Base seed")->capture_default_str();
    sim_cmd->add_option("--out", sim.out, "Per-replication CSV path")->required();
    sim_cmd->add_option("--summary", sim.summary, "Summary CSV path");
    sim_cmd->add_option("--workers", sim.workers,
                        "Worker threads (default: $EBBAND_WORKERS, else all cores)")
        ->check(CLI::PositiveNumber);

    SummaryOptions summary;
    auto* summary_cmd =
        app.add_subcommand("summary", "Aggregate a per-replication CSV into table rows");
    summary_cmd->add_option("--in", summary.in, "Per-replication CSV")->required();
    summary_cmd->add_option("--out", summary.out, "Summary CSV path (default: stdout)");

    std::size_t check_n = 0;
    auto* check_cmd =
        app.add_subcommand("transform-check", "Verify orthogonality of the cosine transform");
    check_cmd->add_option("--n", check_n, "Transform length")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadArguments;
    }

    try {
        if (*band_cmd) {
            return cmd_band(band, err);
        }
        if (*sim_cmd) {
            return cmd_simulate(sim, err);
        }
        if (*summary_cmd) {
            return cmd_summary(summary, out);
        }
        return cmd_transform_check(check_n, out);
    } catch (const IoError& e) {
        err << "ebband: " << e.what() << '\n';
        return kIoError;
    } catch (const std::domain_error& e) {
        err << "ebband: " << e.what() << '\n';
        return kBadArguments;
    } catch (const std::runtime_error& e) {
        err << "ebband: " << e.what() << '\n';
        return kIoError;
    }
}

}  // namespace ebband::cli
