#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nbsim/core.hpp"
#include "nbsim/schedulers.hpp"
#include "nbsim/valuation.hpp"

namespace nbsim {

/// Fleet description. Hosts cycle through mips_levels and are spread
/// round-robin across the configured data centers.
struct FleetSpec {
    int host_count = 20;
    std::vector<double> mips_levels{2000.0, 2500.0, 3000.0};
    double host_memory_mb = 4096.0;
    double host_storage_gb = 100.0;
    int resources_per_host = 1;
    double resource_memory_mb = 64.0;
    double resource_storage_mb = 256.0;
    double resource_bandwidth = 10.0;  // plane units per ms
};

/// Synthetic workload: task_count tasks at fixed arrival spacing, lengths and
/// demands drawn uniformly from the seeded generator.
struct WorkloadSpec {
    std::size_t task_count = 100;
    double arrival_interval_ms = 10.0;
    double min_length_mi = 200.0;
    double max_length_mi = 2000.0;
    double min_demand_mips = 2000.0;
    double max_demand_mips = 3000.0;
    std::vector<Task> trace_tasks;  // when nonempty, replaces the synthetic draw
};

struct ScenarioConfig {
    FleetSpec fleet;
    std::vector<DataCenter> datacenters;  // locations only; hosts are generated
    std::vector<CloudUser> users;
    WorkloadSpec workload;
    DecisionMatrix matrix = DecisionMatrix::with_default_priorities(
        {{"c1", 1.0}, {"c2", 2.0}, {"c3", 3.0}});
    std::map<std::string, double> static_resource_values;  // optional pinned values
    SchedulerKind scheduler = SchedulerKind::NBDMMM;
    std::uint64_t seed = 1;
    bool replenish = true;  // emulate an unbounded machine pool
};

/// Violations found by validate_config, one message per problem.
std::vector<std::string> validate_config(const ScenarioConfig& config);

enum class SimEventKind { Completed, Arrival, Assigned, Rejected };

const char* to_string(SimEventKind k);

struct SimEvent {
    double time_ms = 0.0;
    SimEventKind kind = SimEventKind::Arrival;
    std::string task_id;
    std::string resource_id;  // empty for Arrival/Rejected
};

/// One resource occupancy interval, kept for utilization accounting.
struct ExecutionRecord {
    std::string task_id;
    std::string resource_id;
    std::string host_id;
    double start_ms = 0.0;
    double end_ms = 0.0;
    double length_mi = 0.0;
};

struct SimulationRun {
    std::vector<SimEvent> events;  // sorted by (time, kind priority, task id)
    std::vector<Assignment> assignments;
    std::vector<ExecutionRecord> executions;
    std::vector<Task> tasks;
    std::vector<Host> hosts;
    std::size_t arrived = 0;
    std::size_t completed = 0;
    std::size_t rejected = 0;
};

/// Synthetic workload generation. Arrival k lands at k * arrival_interval_ms;
/// lengths and demands come from a SplitMix64 stream seeded with `seed`, so
/// the spec and seed fully determine the result. Task ids are zero-padded so
/// lexicographic id order equals generation order.
std::vector<Task> generate_workload(const WorkloadSpec& spec, std::uint64_t seed);

/// Deterministic event-driven run. The configured scheduler re-plans over
/// {queued tasks} x {free resources} after every batch of same-time events;
/// completions free their resource back into the pool. With replenish on,
/// the pool grows on demand and no task is ever rejected; with it off and an
/// empty fleet, tasks are rejected on arrival.
/// Throws std::invalid_argument listing violations on an invalid config.
SimulationRun run(const ScenarioConfig& config);

/// Event log as CSV: header "time_ms,kind,task_id,resource_id", LF endings.
std::string events_to_csv(const SimulationRun& run);

}  // namespace nbsim
