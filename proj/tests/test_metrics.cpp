#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "nbsim/metrics.hpp"
#include "nbsim/rng.hpp"

using namespace nbsim;

namespace {

SimulationRun run_with(std::size_t arrived, std::size_t completed) {
    SimulationRun run;
    run.arrived = arrived;
    run.completed = completed;
    return run;
}

// Brute-force utilization oracle: accumulate credited MI per host from the
// execution records, then divide by capacity over the window.
double utilization_oracle(const SimulationRun& run, double window_ms) {
    std::map<std::string, double> mi_per_host;
    for (const auto& h : run.hosts) mi_per_host[h.id] = 0.0;
    for (const auto& e : run.executions) {
        const double span = e.end_ms - e.start_ms;
        double credited;
        if (span <= 0.0) {
            credited = e.start_ms < window_ms ? e.length_mi : 0.0;
        } else {
            const double lo = e.start_ms < 0.0 ? 0.0 : e.start_ms;
            const double hi = e.end_ms > window_ms ? window_ms : e.end_ms;
            credited = hi > lo ? e.length_mi * (hi - lo) / span : 0.0;
        }
        mi_per_host[e.host_id] += credited;
    }
    double mi = 0.0;
    for (const auto& [id, v] : mi_per_host) mi += v;
    double cap = 0.0;
    for (const auto& h : run.hosts) cap += h.cpu_capacity_mips * window_ms / 1000.0;
    return mi / cap;
}

}  // namespace

TEST_CASE("success_ratio arithmetic and emptiness") {
    CHECK(success_ratio(run_with(10, 10)) == 1.0);
    CHECK(success_ratio(run_with(10, 5)) == 0.5);
    CHECK_THROWS_WITH_AS(success_ratio(run_with(0, 0)), "empty run", std::invalid_argument);
}

TEST_CASE("utilization: one host, one second, half loaded") {
    SimulationRun run;
    run.hosts = {{"h1", 2000.0, 4096.0, 100.0, {}}};
    run.executions = {{"t1", "r1", "h1", 0.0, 1000.0, 1000.0}};
    CHECK(utilization(run, 1000.0) == doctest::Approx(0.5));
}

TEST_CASE("utilization is zero with no executions and errors without hosts") {
    SimulationRun run;
    run.hosts = {{"h1", 2000.0, 4096.0, 100.0, {}}};
    CHECK(utilization(run, 1000.0) == 0.0);
    run.hosts.clear();
    CHECK_THROWS_AS(utilization(run, 1000.0), std::invalid_argument);
}

TEST_CASE("utilization matches the per-host accumulation oracle") {
    SplitMix64 rng(77);
    for (int trial = 0; trial < 100; ++trial) {
        SimulationRun run;
        const int hosts = 1 + static_cast<int>(rng.next() % 4);
        for (int h = 0; h < hosts; ++h)
            run.hosts.push_back({"h" + std::to_string(h),
                                 1000.0 + static_cast<double>(rng.next() % 3) * 500.0,
                                 4096.0, 100.0, {}});
        const int execs = static_cast<int>(rng.next() % 12);
        for (int i = 0; i < execs; ++i) {
            const double start = rng.uniform(0.0, 2000.0);
            run.executions.push_back({"t" + std::to_string(i), "r",
                                      "h" + std::to_string(rng.next() % hosts), start,
                                      start + rng.uniform(0.0, 1500.0),
                                      rng.uniform(100.0, 2000.0)});
        }
        const double window = rng.uniform(500.0, 2500.0);
        CHECK(std::abs(utilization(run, window) - utilization_oracle(run, window)) < 1e-9);
    }
}

TEST_CASE("utilization is additive over disjoint windows") {
    SplitMix64 rng(78);
    SimulationRun run;
    run.hosts = {{"h1", 2000.0, 4096.0, 100.0, {}}, {"h2", 3000.0, 4096.0, 100.0, {}}};
    for (int i = 0; i < 10; ++i) {
        const double start = rng.uniform(0.0, 1800.0);
        run.executions.push_back({"t" + std::to_string(i), "r", i % 2 ? "h1" : "h2", start,
                                  start + rng.uniform(1.0, 400.0), rng.uniform(100.0, 900.0)});
    }
    const double w = 1000.0;
    // MI in [0,2w) equals MI in [0,w) plus MI in [w,2w); in rate terms the
    // full-window rate is the mean of the two half-window rates.
    SimulationRun shifted = run;
    for (auto& e : shifted.executions) {
        e.start_ms -= w;
        e.end_ms -= w;
    }
    const double full = utilization(run, 2 * w);
    const double first = utilization(run, w);
    const double second = utilization(shifted, w);
    CHECK(full == doctest::Approx((first + second) / 2.0).epsilon(1e-9));
}

TEST_CASE("raw utilization quotient is total MI over total MIPS") {
    SimulationRun run;
    run.hosts = {{"h1", 2000.0, 4096.0, 100.0, {}}, {"h2", 2000.0, 4096.0, 100.0, {}}};
    run.executions = {{"t1", "r1", "h1", 0.0, 100.0, 1000.0},
                      {"t2", "r2", "h2", 0.0, 100.0, 3000.0}};
    CHECK(raw_utilization_quotient(run) == doctest::Approx(1.0));
}

TEST_CASE("regression: perfect linear fit") {
    const double xs[] = {100, 200, 300, 400, 500};
    const double ys[] = {0.1, 0.2, 0.3, 0.4, 0.5};
    auto s = regression(xs, ys);
    CHECK(s.adjusted_r_square == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s.standard_error == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(s.n == 5);
}

TEST_CASE("regression: constant response") {
    const double xs[] = {1, 2, 3, 4};
    const double ys[] = {7, 7, 7, 7};
    auto s = regression(xs, ys);
    CHECK(s.covariance == 0.0);
    CHECK(s.standard_error == 0.0);
    // R^2 = 0 convention: adjusted = 1 - (n-1)/(n-2).
    CHECK(s.adjusted_r_square == doctest::Approx(1.0 - 3.0 / 2.0));
}

TEST_CASE("regression matches hand-computed normal equations") {
    // Fixed 5-point dataset; expected values from the closed-form
    // least-squares solution worked by hand:
    //   xs = {1,2,3,4,5}, ys = {2,2.5,3.6,4.1,5.2}
    //   mean_x=3, mean_y=3.48, sxy=8.0, sxx=10, slope=0.8
    //   syy=6.508, sse=6.508-0.8*8.0=0.108
    const double xs[] = {1, 2, 3, 4, 5};
    const double ys[] = {2.0, 2.5, 3.6, 4.1, 5.2};
    auto s = regression(xs, ys);
    const double slope = 8.0 / 10.0;
    const double sse = 6.508 - slope * 8.0;
    const double r2 = 1.0 - sse / 6.508;
    CHECK(std::abs(s.covariance - 8.0 / 4.0) < 1e-9);
    CHECK(std::abs(s.standard_error - std::sqrt(sse / 3.0)) < 1e-9);
    CHECK(std::abs(s.adjusted_r_square - (1.0 - (1.0 - r2) * 4.0 / 3.0)) < 1e-9);
}

TEST_CASE("regression preconditions") {
    const double xs[] = {1, 2};
    const double ys[] = {1, 2};
    CHECK_THROWS_WITH_AS(regression(xs, ys), "n >= 3 required", std::invalid_argument);
    const double flat_x[] = {2, 2, 2};
    const double some_y[] = {1, 2, 3};
    CHECK_THROWS_WITH_AS(regression(flat_x, some_y), "no variance in predictor",
                         std::invalid_argument);
}

TEST_CASE("regression is permutation-invariant and covariance tracks slope sign") {
    SplitMix64 rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<double> xs, ys;
        const int n = 3 + static_cast<int>(rng.next() % 8);
        for (int i = 0; i < n; ++i) {
            xs.push_back(static_cast<double>(i + 1));
            ys.push_back(rng.uniform(-5.0, 5.0));
        }
        auto base = regression(xs, ys);
        // One random permutation applied to both vectors.
        std::vector<std::size_t> perm(xs.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.next() % i]);
        std::vector<double> px, py;
        for (std::size_t i : perm) {
            px.push_back(xs[i]);
            py.push_back(ys[i]);
        }
        auto permuted = regression(px, py);
        CHECK(std::abs(base.covariance - permuted.covariance) < 1e-9);
        CHECK(std::abs(base.adjusted_r_square - permuted.adjusted_r_square) < 1e-9);
        CHECK(std::abs(base.standard_error - permuted.standard_error) < 1e-9);
        CHECK(base.adjusted_r_square <= 1.0);
    }
}

TEST_CASE("metrics CSV headers and shape") {
    auto csv = metrics_to_csv({{"NBDMMM", 100, 10.0, 1.0, 0.25}});
    CHECK(csv.rfind("algorithm,task_count,arrival_interval_ms,success_ratio,utilization\n", 0) ==
          0);
    CHECK(csv.find("NBDMMM,100,10,1,0.25\n") != std::string::npos);

    RegressionStats rs{0.5, 0.25, 0.1, 5};
    auto rcsv = regression_to_csv({{"FCFS", rs}});
    CHECK(rcsv.find("FCFS,0.5,0.25,0.1,5") != std::string::npos);
}
