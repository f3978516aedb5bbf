#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbsim/core.hpp"
#include "nbsim/timing.hpp"
#include "nbsim/valuation.hpp"

namespace nbsim {

enum class SchedulerKind { NBDMMM, DMMM, FCFS, GreedyR, GreedyP };

const char* to_string(SchedulerKind k);
std::optional<SchedulerKind> scheduler_kind_from_string(const std::string& name);

/// Output of one planning round. Within a round no task and no resource is
/// used twice; tasks left over when the pool runs out land in `unassigned`.
struct SchedulePlan {
    std::vector<Assignment> assignments;
    std::vector<std::string> unassigned;
};

/// Consumption value of a resource when offered to the user behind a task.
/// Static per-resource valuations ignore the task argument.
using ValueFn = std::function<double(const Task&, const Resource&)>;

/// Wraps a static per-resource valuation list into a ValueFn. Every resource
/// must be covered; throws std::invalid_argument otherwise on lookup.
ValueFn static_values(const std::vector<ResourceValuation>& valuations);

/// Network and geometry inputs needed to rank tasks by total time.
/// fixed_total_ms, when it covers a task, overrides the computed total
/// (used to replay externally measured timings).
///
/// Task ranking must not depend on which resource a task eventually gets, so
/// computed totals are evaluated against a fixed reference resource: the
/// highest-capacity resource in the pool (ties by smallest id). A task whose
/// user or data centers are unknown gets zero latency.
struct TimingContext {
    std::vector<CloudUser> users;
    std::vector<DataCenter> datacenters;
    std::map<std::string, double> fixed_total_ms;

    double total_ms_for(const Task& task, const Resource& reference) const;
};

/// Max-min pairing on execution time: repeatedly assigns the remaining task
/// with minimum e_i to the remaining resource with maximum value. Execution
/// time is measured against the pool's reference resource so the task order
/// is pairing-independent.
SchedulePlan dmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                  const std::vector<ResourceValuation>& valuations);
SchedulePlan dmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                  const ValueFn& value);

/// Same pairing structure as dmmm, but tasks are ranked by total time
/// (network latency + execution time). Degenerates to dmmm when every
/// latency is zero.
SchedulePlan nbdmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                    const std::vector<ResourceValuation>& valuations,
                    const TimingContext& timing);
SchedulePlan nbdmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                    const ValueFn& value, const TimingContext& timing);

/// Tasks in arrival order (ties by task id), each to the lowest-id free
/// resource.
SchedulePlan fcfs(const std::vector<Task>& tasks, const std::vector<Resource>& resources);

/// Quickest task first to the most powerful resource.
SchedulePlan greedy_r(const std::vector<Task>& tasks, const std::vector<Resource>& resources);

/// Quickest task first to the least powerful resource.
SchedulePlan greedy_p(const std::vector<Task>& tasks, const std::vector<Resource>& resources);

/// Index of the reference resource: maximum cpu_mips, ties by smallest id.
/// Throws std::invalid_argument on an empty pool.
std::size_t reference_resource(const std::vector<Resource>& resources);

}  // namespace nbsim
