#include "nbsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace nbsim {

double success_ratio(const SimulationRun& run) {
    if (run.arrived == 0) throw std::invalid_argument("empty run");
    return static_cast<double>(run.completed) / static_cast<double>(run.arrived);
}

double utilization(const SimulationRun& run, double window_ms) {
    if (!(window_ms > 0)) throw std::invalid_argument("window_ms > 0");
    if (run.hosts.empty()) throw std::invalid_argument("no hosts");

    double executed_mi = 0.0;
    for (const auto& e : run.executions) {
        const double span = e.end_ms - e.start_ms;
        const double lo = std::max(e.start_ms, 0.0);
        const double hi = std::min(e.end_ms, window_ms);
        if (span <= 0.0) {
            if (e.start_ms < window_ms) executed_mi += e.length_mi;
            continue;
        }
        if (hi > lo) executed_mi += e.length_mi * (hi - lo) / span;
    }

    double capacity_mi = 0.0;
    for (const auto& h : run.hosts) capacity_mi += h.cpu_capacity_mips * window_ms / 1000.0;
    return executed_mi / capacity_mi;
}

double raw_utilization_quotient(const SimulationRun& run) {
    if (run.hosts.empty()) throw std::invalid_argument("no hosts");
    double executed_mi = 0.0;
    for (const auto& e : run.executions) executed_mi += e.length_mi;
    double capacity_mips = 0.0;
    for (const auto& h : run.hosts) capacity_mips += h.cpu_capacity_mips;
    return executed_mi / capacity_mips;
}

RunMetrics run_metrics(const SimulationRun& run, double window_ms) {
    RunMetrics m;
    m.success_ratio = success_ratio(run);
    m.utilization = utilization(run, window_ms);
    m.tasks_submitted = run.arrived;
    m.hosts = run.hosts.size();
    return m;
}

RegressionStats regression(std::span<const double> xs, std::span<const double> ys) {
    const std::size_t n = xs.size();
    if (n != ys.size()) throw std::invalid_argument("xs and ys length mismatch");
    if (n < 3) throw std::invalid_argument("n >= 3 required");

    const double dn = static_cast<double>(n);
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= dn;
    mean_y /= dn;

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (sxx == 0.0) throw std::invalid_argument("no variance in predictor");

    const double slope = sxy / sxx;
    const double sse = std::max(0.0, syy - slope * sxy);
    const double r_square = syy == 0.0 ? 0.0 : 1.0 - sse / syy;

    RegressionStats s;
    s.n = n;
    s.adjusted_r_square = 1.0 - (1.0 - r_square) * (dn - 1.0) / (dn - 2.0);
    s.covariance = sxy / (dn - 1.0);
    s.standard_error = std::sqrt(sse / (dn - 2.0));
    return s;
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

}  // namespace

std::string metrics_to_csv(const std::vector<MetricsRow>& rows) {
    std::string csv = "algorithm,task_count,arrival_interval_ms,success_ratio,utilization\n";
    for (const auto& r : rows) {
        csv += r.algorithm + "," + std::to_string(r.task_count) + "," +
               fmt(r.arrival_interval_ms) + "," + fmt(r.success_ratio) + "," +
               fmt(r.utilization) + "\n";
    }
    return csv;
}

std::string regression_to_csv(const std::vector<RegressionRow>& rows) {
    std::string csv = "algorithm,adjusted_r_square,covariance,standard_error,n\n";
    for (const auto& r : rows) {
        csv += r.algorithm + "," + fmt(r.stats.adjusted_r_square) + "," +
               fmt(r.stats.covariance) + "," + fmt(r.stats.standard_error) + "," +
               std::to_string(r.stats.n) + "\n";
    }
    return csv;
}

}  // namespace nbsim
