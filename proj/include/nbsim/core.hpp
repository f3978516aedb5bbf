#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace nbsim {

/// User classes recognized by the decision matrix, ordered from the
/// highest-priority class to the lowest.
enum class UserClass { HighEnd, Privileged, Casual, Naive, Underprivileged };

const char* to_string(UserClass c);
std::optional<UserClass> user_class_from_string(const std::string& name);

/// Point on a flat 2-D plane. Coordinates are dimensionless plane units.
struct GeoPoint {
    double x = 0.0;
    double y = 0.0;
};

/// A schedulable unit of work. length_mi is the task duration expressed in
/// million instructions; cpu_demand_mips is the CPU rate the task asks for.
struct Task {
    std::string id;
    double length_mi = 0.0;
    double cpu_demand_mips = 0.0;
    double arrival_ms = 0.0;
    std::string user_id;
    int scheduling_class = 0;  // latency sensitivity from the trace; reporting only
};

/// An allocatable machine (VM). bandwidth is in plane units per millisecond
/// and feeds the network-latency model.
struct Resource {
    std::string id;
    double memory_mb = 0.0;
    double bandwidth = 0.0;
    double cpu_mips = 0.0;
    std::string host_id;
    std::string datacenter_id;
};

struct Host {
    std::string id;
    double cpu_capacity_mips = 0.0;
    double memory_mb = 0.0;
    double storage_gb = 0.0;
    std::vector<std::string> resources;
};

struct DataCenter {
    std::string id;
    GeoPoint location;
    std::vector<Host> hosts;
};

struct CloudUser {
    std::string id;
    GeoPoint location;
    UserClass user_class = UserClass::Casual;
};

/// One task-to-resource pairing produced by a scheduler.
struct Assignment {
    std::string task_id;
    std::string resource_id;
    double resource_value = 0.0;   // consumption value v at assignment time
    double total_time_ms = 0.0;    // latency + execution total used for selection
    std::size_t assignment_order = 0;
};

/// Invariant checks. Returns std::nullopt when the entity is well formed,
/// otherwise a description of the first violated invariant. Violations are
/// data, not faults.
std::optional<std::string> validate(const Task& t);
std::optional<std::string> validate(const Resource& r);
std::optional<std::string> validate(const Host& h);
std::optional<std::string> validate(const GeoPoint& p);
std::optional<std::string> validate(const DataCenter& dc);
std::optional<std::string> validate(const CloudUser& u);

}  // namespace nbsim
