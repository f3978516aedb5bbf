#include "nbsim/timing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nbsim {

double execution_time_ms(const Task& task, const Resource& resource) {
    const double effective_mips = std::min(task.cpu_demand_mips, resource.cpu_mips);
    return task.length_mi / effective_mips * 1000.0;
}

double distance(const GeoPoint& a, const GeoPoint& b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

std::pair<double, std::string> nearest_distance(const CloudUser& user,
                                                const std::vector<DataCenter>& datacenters) {
    if (datacenters.empty()) throw std::invalid_argument("no datacenters");
    const DataCenter* best = nullptr;
    double best_d = 0.0;
    for (const auto& dc : datacenters) {
        const double d = distance(user.location, dc.location);
        if (!best || d < best_d || (d == best_d && dc.id < best->id)) {
            best = &dc;
            best_d = d;
        }
    }
    return {best_d, best->id};
}

double network_latency_ms(double dist, double bandwidth) {
    return dist / bandwidth;
}

TimingBreakdown total_time_ms(const Task& task, const Resource& resource,
                              const CloudUser& user,
                              const std::vector<DataCenter>& datacenters) {
    TimingBreakdown b;
    b.task_id = task.id;
    auto [d, dc_id] = nearest_distance(user, datacenters);
    b.distance = d;
    b.chosen_datacenter_id = dc_id;
    b.network_latency_ms = network_latency_ms(d, resource.bandwidth);
    b.execution_ms = execution_time_ms(task, resource);
    b.total_ms = b.network_latency_ms + b.execution_ms;
    return b;
}

}  // namespace nbsim
