#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ebband/harness.hpp"
#include "ebband/metrics.hpp"
#include "ebband/transform.hpp"

using Catch::Approx;
using namespace ebband;

namespace {

SimConfig small_config() {
    SimConfig c;
    c.case_id = 1;
    c.n = 256;
    c.reps = 12;
    c.draws = 400;
    c.base_seed = 31;
    return c;
}

bool same(const ReplicationMetrics& a, const ReplicationMetrics& b) {
    return a.rep == b.rep && a.alpha_hat == b.alpha_hat && a.max_width == b.max_width &&
           a.ave_width == b.ave_width && a.nc == b.nc && a.re == b.re &&
           a.sup_covered == b.sup_covered && a.ball_covered == b.ball_covered &&
           a.radius == b.radius;
}

}  // namespace

TEST_CASE("percentile uses the ceil(p * count) order statistic") {
    std::vector<double> v;
    for (int k = 100; k >= 1; --k) {
        v.push_back(k);
    }
    CHECK(percentile(v, 0.95) == 95.0);
    CHECK(percentile(std::vector<double>{3.0, 1.0, 2.0}, 0.5) == 2.0);
    CHECK(percentile(std::vector<double>{7.0}, 0.95) == 7.0);
    CHECK(percentile(std::vector<double>(20, 0.0), 0.95) == 0.0);
    CHECK_THROWS_AS(percentile(std::vector<double>{}, 0.5), std::domain_error);
    CHECK_THROWS_AS(percentile(v, 1.0), std::domain_error);
}

TEST_CASE("summarize") {
    std::vector<ReplicationMetrics> reps(4);
    for (std::size_t k = 0; k < 4; ++k) {
        reps[k].rep = k;
        reps[k].max_width = 1.0 + k;
        reps[k].ave_width = 0.5 * (1.0 + k);
        reps[k].alpha_hat = 2.0;
        reps[k].nc = k == 3 ? 0.25 : 0.0;
        reps[k].re = k == 3 ? 0.01 : 0.0;
        reps[k].sup_covered = k != 3;
        reps[k].ball_covered = true;
    }
    const SummaryRow row = summarize(2, 64, reps);
    CHECK(row.case_id == 2);
    CHECK(row.n == 64);
    CHECK(row.mean_max_width == 2.5);
    CHECK(row.mean_ave_width == 1.25);
    CHECK(row.mean_alpha_hat == 2.0);
    CHECK(row.sup_cover_rate == 0.75);
    CHECK(row.ball_cover_rate == 1.0);
    CHECK(row.nc_p95 == 0.25);
    CHECK(row.re_p95 == 0.01);
    CHECK_THROWS_AS(summarize(1, 1, std::vector<ReplicationMetrics>{}), std::domain_error);
}

TEST_CASE("SimConfig validation") {
    SimConfig c = small_config();
    CHECK_NOTHROW(c.validate());
    c.case_id = 6;
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c = small_config();
    c.draws = 1;
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c = small_config();
    c.level = 1.0;
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c = small_config();
    c.sigma = -1.0;
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c = small_config();
    c.n = 1;
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c = small_config();
    c.reps = 0;
    CHECK_THROWS_AS(run_simulation(c, 2), std::domain_error);
}

TEST_CASE("replications are deterministic") {
    const SimConfig c = small_config();
    CHECK(same(run_replication(c, 3), run_replication(c, 3)));
    CHECK(run_replication(c, 3).alpha_hat != run_replication(c, 4).alpha_hat);
    CHECK(replication_seed(1, 0) != replication_seed(1, 1));
    CHECK(replication_seed(1, 0) != replication_seed(2, 0));
}

TEST_CASE("worker count does not change the result") {
    const SimConfig c = small_config();
    const SimulationResult one = run_simulation(c, 1);
    const SimulationResult four = run_simulation(c, 4);
    const SimulationResult many = run_simulation(c, 64);
    REQUIRE(one.replications.size() == c.reps);
    for (std::size_t k = 0; k < c.reps; ++k) {
        CHECK(one.replications[k].rep == k);
        CHECK(same(one.replications[k], four.replications[k]));
        CHECK(same(one.replications[k], many.replications[k]));
        CHECK(same(one.replications[k], run_replication(c, k)));
    }
    CHECK(one.summary.mean_ave_width == four.summary.mean_ave_width);
    CHECK(one.summary.nc_p95 == many.summary.nc_p95);
}

TEST_CASE("replication invariants") {
    const SimConfig c = small_config();
    for (std::size_t k = 0; k < 4; ++k) {
        const ReplicationMetrics m = run_replication(c, k);
        CHECK(m.max_width >= m.ave_width);
        CHECK(m.ave_width >= 0.0);
        CHECK(m.nc >= 0.0);
        CHECK(m.nc <= 1.0);
        CHECK(m.re >= 0.0);
        CHECK((m.nc == 0.0) == m.sup_covered);
        CHECK(m.alpha_hat >= 0.0);
        CHECK(m.alpha_hat <= std::log(256.0));
    }
}

TEST_CASE("simulate_band outputs") {
    const SimConfig c = small_config();
    const BandRun run = simulate_band(c, 0);
    CHECK(run.data.size() == c.n);
    CHECK(run.truth.size() == c.n);
    CHECK(run.band.n() == c.n);
    CHECK(run.band.kept == 380);
    CHECK(run.params.n() == c.n);
    const std::vector<double> theta = analyze(run.truth);
    CHECK(run.theta_true == theta);
}

TEST_CASE("nearly noiseless data is covered everywhere") {
    SimConfig c = small_config();
    c.sigma = 1e-12;
    c.reps = 3;
    for (int case_id = 1; case_id <= 5; ++case_id) {
        c.case_id = case_id;
        for (std::size_t k = 0; k < c.reps; ++k) {
            const BandRun run = simulate_band(c, k);
            double err = 0.0;
            for (std::size_t i = 0; i < c.n; ++i) {
                err = std::max(err, std::abs(run.band.center[i] - run.truth[i]));
            }
            CAPTURE(case_id, k);
            CHECK(err < 1e-6);
        }
    }
}

TEST_CASE("custom bracket is respected") {
    SimConfig c = small_config();
    c.bracket = AlphaBracket{1.25, 1.25};
    CHECK(run_replication(c, 0).alpha_hat == 1.25);
}
