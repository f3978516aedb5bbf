#pragma once

#include <cstddef>
#include <span>

#include "nbsim/simulator.hpp"

namespace nbsim {

struct RunMetrics {
    double success_ratio = 0.0;   // in [0, 1]
    double utilization = 0.0;     // normalized RR, >= 0
    std::size_t tasks_submitted = 0;
    std::size_t hosts = 0;
};

struct RegressionStats {
    double adjusted_r_square = 0.0;  // <= 1
    double covariance = 0.0;
    double standard_error = 0.0;     // >= 0
    std::size_t n = 0;
};

/// Completed / arrived. Throws std::invalid_argument("empty run") when
/// nothing arrived.
double success_ratio(const SimulationRun& run);

/// Normalized resource utilization over [0, window_ms): MI executed across
/// all hosts divided by total host capacity over the window
/// (sum of cpu_capacity_mips x window_ms / 1000). MI of an occupancy interval
/// is credited proportionally to its overlap with the window. Throws on a
/// nonpositive window or an empty host set.
double utilization(const SimulationRun& run, double window_ms);

/// The utilization quotient in its raw printed form: total MI executed
/// divided by total host MIPS capacity. Units are seconds, kept for
/// side-by-side reporting next to the normalized rate.
double raw_utilization_quotient(const SimulationRun& run);

RunMetrics run_metrics(const SimulationRun& run, double window_ms);

/// Simple linear regression of ys on xs.
///  - adjusted R^2 = 1 - (1 - R^2)(n - 1)/(n - 2), single predictor
///  - covariance is the sample covariance of (xs, ys)
///  - standard_error is the standard error of the estimate,
///    sqrt(SSE / (n - 2))
/// Constant ys use the R^2 = 0 convention. Requires n >= 3 and a predictor
/// with variance; throws std::invalid_argument otherwise.
RegressionStats regression(std::span<const double> xs, std::span<const double> ys);

/// One sweep result row.
struct MetricsRow {
    std::string algorithm;
    std::size_t task_count = 0;
    double arrival_interval_ms = 0.0;
    double success_ratio = 0.0;
    double utilization = 0.0;
};

struct RegressionRow {
    std::string algorithm;
    RegressionStats stats;
};

/// "algorithm,task_count,arrival_interval_ms,success_ratio,utilization"
std::string metrics_to_csv(const std::vector<MetricsRow>& rows);

/// "algorithm,adjusted_r_square,covariance,standard_error,n"
std::string regression_to_csv(const std::vector<RegressionRow>& rows);

}  // namespace nbsim
