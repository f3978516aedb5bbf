#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nbsim/core.hpp"

namespace nbsim {

/// Per-task timing components. total_ms = network_latency_ms + execution_ms
/// exactly, by construction.
struct TimingBreakdown {
    std::string task_id;
    double distance = 0.0;            // plane units, to the nearest data center
    double network_latency_ms = 0.0;  // n_i
    double execution_ms = 0.0;        // e_i
    double total_ms = 0.0;            // n_i + e_i
    std::string chosen_datacenter_id;
};

/// Execution time in milliseconds. The effective rate is
/// min(task demand, resource capacity): a task cannot run faster than the
/// machine it lands on. length is MI, rates are MIPS, so MI/MIPS is seconds.
double execution_time_ms(const Task& task, const Resource& resource);

/// Euclidean distance on the flat coordinate plane.
double distance(const GeoPoint& a, const GeoPoint& b);

/// Minimal distance from the user to any data center, with the data center
/// chosen. Ties broken by smallest datacenter id. Throws
/// std::invalid_argument("no datacenters") on an empty list.
std::pair<double, std::string> nearest_distance(const CloudUser& user,
                                                const std::vector<DataCenter>& datacenters);

/// distance / bandwidth, where bandwidth is in plane units per millisecond.
double network_latency_ms(double dist, double bandwidth);

/// Full breakdown for one task on one resource: latency via the nearest data
/// center at the assigned resource's bandwidth, plus execution time. Server
/// switch time is not modeled.
TimingBreakdown total_time_ms(const Task& task, const Resource& resource,
                              const CloudUser& user,
                              const std::vector<DataCenter>& datacenters);

}  // namespace nbsim
