#include "nbsim/simulator.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "nbsim/rng.hpp"
#include "nbsim/timing.hpp"

namespace nbsim {

const char* to_string(SimEventKind k) {
    switch (k) {
        case SimEventKind::Completed: return "Completed";
        case SimEventKind::Arrival: return "Arrival";
        case SimEventKind::Assigned: return "Assigned";
        case SimEventKind::Rejected: return "Rejected";
    }
    return "?";
}

std::vector<std::string> validate_config(const ScenarioConfig& config) {
    std::vector<std::string> problems;
    const auto& f = config.fleet;
    if (f.host_count < 0) problems.push_back("fleet.host_count >= 0");
    if (f.host_count > 0 && f.mips_levels.empty())
        problems.push_back("fleet.mips_levels must be nonempty");
    for (double m : f.mips_levels)
        if (!(m > 0)) problems.push_back("fleet.mips_levels entries > 0");
    if (f.host_count > 0 && f.resources_per_host < 1)
        problems.push_back("fleet.resources_per_host >= 1");
    if (!(f.resource_bandwidth > 0)) problems.push_back("fleet.resource_bandwidth > 0");
    if (!(f.resource_memory_mb > 0)) problems.push_back("fleet.resource_memory_mb > 0");

    const auto& w = config.workload;
    if (w.trace_tasks.empty()) {
        if (!(w.arrival_interval_ms >= 0)) problems.push_back("workload.arrival_interval_ms >= 0");
        if (!(w.min_length_mi > 0) || w.max_length_mi < w.min_length_mi)
            problems.push_back("workload length range must be positive and ordered");
        if (!(w.min_demand_mips > 0) || w.max_demand_mips < w.min_demand_mips)
            problems.push_back("workload demand range must be positive and ordered");
    } else {
        for (const auto& t : w.trace_tasks)
            if (auto v = validate(t)) problems.push_back("task " + t.id + ": " + *v);
    }

    std::set<std::string> ids;
    for (const auto& u : config.users) {
        if (auto v = validate(u)) problems.push_back("user " + u.id + ": " + *v);
        if (!ids.insert("u:" + u.id).second) problems.push_back("duplicate user id " + u.id);
    }
    for (const auto& dc : config.datacenters) {
        if (dc.id.empty()) problems.push_back("datacenter id must be nonempty");
        if (auto v = validate(dc.location)) problems.push_back("datacenter " + dc.id + ": " + *v);
        if (!ids.insert("d:" + dc.id).second) problems.push_back("duplicate datacenter id " + dc.id);
    }
    for (const auto& c : config.matrix.criteria)
        if (!(c.weight > 0)) problems.push_back("matrix weight for " + c.name + " must be > 0");
    return problems;
}

namespace {

std::string padded_id(const char* prefix, std::size_t index, std::size_t count) {
    std::size_t width = 1;
    for (std::size_t c = count; c >= 10; c /= 10) ++width;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%s%0*zu", prefix, static_cast<int>(width), index + 1);
    return buf;
}

struct Fleet {
    std::vector<Host> hosts;
    std::vector<Resource> resources;
};

Fleet build_fleet(const ScenarioConfig& config) {
    Fleet fleet;
    const auto& spec = config.fleet;
    const std::size_t n_hosts = static_cast<std::size_t>(spec.host_count);
    std::size_t resource_index = 0;
    const std::size_t total_resources = n_hosts * static_cast<std::size_t>(spec.resources_per_host);
    for (std::size_t i = 0; i < n_hosts; ++i) {
        Host h;
        h.id = padded_id("h", i, n_hosts);
        h.cpu_capacity_mips = spec.mips_levels[i % spec.mips_levels.size()];
        h.memory_mb = spec.host_memory_mb;
        h.storage_gb = spec.host_storage_gb;
        std::string dc_id;
        if (!config.datacenters.empty())
            dc_id = config.datacenters[i % config.datacenters.size()].id;
        for (int k = 0; k < spec.resources_per_host; ++k) {
            Resource r;
            r.id = padded_id("r", resource_index++, total_resources);
            r.memory_mb = spec.resource_memory_mb;
            r.bandwidth = spec.resource_bandwidth;
            r.cpu_mips = h.cpu_capacity_mips;  // one core per VM at host speed
            r.host_id = h.id;
            r.datacenter_id = dc_id;
            h.resources.push_back(r.id);
            fleet.resources.push_back(std::move(r));
        }
        fleet.hosts.push_back(std::move(h));
    }
    return fleet;
}

struct Completion {
    double time_ms;
    std::string task_id;
    std::size_t resource_index;
    bool operator>(const Completion& o) const {
        if (time_ms != o.time_ms) return time_ms > o.time_ms;
        return task_id > o.task_id;
    }
};

int kind_priority(SimEventKind k) { return static_cast<int>(k); }

}  // namespace

std::vector<Task> generate_workload(const WorkloadSpec& spec, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<Task> tasks;
    tasks.reserve(spec.task_count);
    for (std::size_t i = 0; i < spec.task_count; ++i) {
        Task t;
        t.id = padded_id("t", i, spec.task_count);
        t.arrival_ms = static_cast<double>(i) * spec.arrival_interval_ms;
        t.length_mi = rng.uniform(spec.min_length_mi, spec.max_length_mi);
        t.cpu_demand_mips = rng.uniform(spec.min_demand_mips, spec.max_demand_mips);
        tasks.push_back(std::move(t));
    }
    return tasks;
}

SimulationRun run(const ScenarioConfig& config) {
    if (auto problems = validate_config(config); !problems.empty()) {
        std::string msg = "invalid config:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw std::invalid_argument(msg);
    }

    SimulationRun out;
    Fleet fleet = build_fleet(config);
    out.hosts = fleet.hosts;

    // Workload; synthetic tasks get users round-robin.
    std::vector<Task> tasks = config.workload.trace_tasks.empty()
                                  ? generate_workload(config.workload, config.seed)
                                  : config.workload.trace_tasks;
    std::vector<CloudUser> users = config.users;
    std::sort(users.begin(), users.end(),
              [](const CloudUser& a, const CloudUser& b) { return a.id < b.id; });
    for (std::size_t i = 0; i < tasks.size(); ++i)
        if (tasks[i].user_id.empty() && !users.empty())
            tasks[i].user_id = users[i % users.size()].id;
    out.tasks = tasks;

    // Consumption values. Static per-resource values when pinned in the
    // config, otherwise the decision matrix against the requesting user's
    // class. Cloned resources inherit their template's pinned value.
    std::map<std::string, double> pinned = config.static_resource_values;
    std::map<std::string, UserClass> class_of_user;
    for (const auto& u : users) class_of_user[u.id] = u.user_class;
    ValueFn value = [&](const Task& t, const Resource& r) -> double {
        if (!pinned.empty()) {
            auto it = pinned.find(r.id);
            return it == pinned.end() ? 0.0 : it->second;
        }
        auto uc = class_of_user.find(t.user_id);
        const UserClass cls = uc == class_of_user.end() ? UserClass::Casual : uc->second;
        return value_for(config.matrix, cls).value;
    };

    TimingContext timing{config.users, config.datacenters, {}};

    std::vector<Resource>& pool = fleet.resources;
    const std::size_t base_count = pool.size();
    std::vector<bool> busy(pool.size(), false);
    std::map<std::string, std::size_t> resource_index;
    for (std::size_t i = 0; i < pool.size(); ++i) resource_index[pool[i].id] = i;

    // Arrivals in (arrival, id) order; the queue holds task indexes.
    std::vector<std::size_t> arrival_order(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) arrival_order[i] = i;
    std::sort(arrival_order.begin(), arrival_order.end(), [&](std::size_t a, std::size_t b) {
        if (tasks[a].arrival_ms != tasks[b].arrival_ms)
            return tasks[a].arrival_ms < tasks[b].arrival_ms;
        return tasks[a].id < tasks[b].id;
    });
    std::size_t next_arrival = 0;
    std::vector<std::size_t> queued;
    std::priority_queue<Completion, std::vector<Completion>, std::greater<>> completions;
    std::map<std::string, std::size_t> task_index;
    for (std::size_t i = 0; i < tasks.size(); ++i) task_index[tasks[i].id] = i;

    std::size_t clone_counter = 0;
    std::size_t order_counter = 0;

    auto physical_total_ms = [&](const Task& t, const Resource& r) {
        double latency = 0.0;
        const CloudUser* user = nullptr;
        for (const auto& u : users)
            if (u.id == t.user_id) { user = &u; break; }
        if (user && !config.datacenters.empty()) {
            auto [d, dc] = nearest_distance(*user, config.datacenters);
            latency = network_latency_ms(d, r.bandwidth);
        }
        return latency + execution_time_ms(t, r);
    };

    while (next_arrival < arrival_order.size() || !completions.empty()) {
        double t = std::numeric_limits<double>::infinity();
        if (next_arrival < arrival_order.size())
            t = tasks[arrival_order[next_arrival]].arrival_ms;
        if (!completions.empty()) t = std::min(t, completions.top().time_ms);

        while (!completions.empty() && completions.top().time_ms == t) {
            Completion c = completions.top();
            completions.pop();
            busy[c.resource_index] = false;
            out.events.push_back({t, SimEventKind::Completed, c.task_id, pool[c.resource_index].id});
            ++out.completed;
        }
        while (next_arrival < arrival_order.size() &&
               tasks[arrival_order[next_arrival]].arrival_ms == t) {
            const std::size_t ti = arrival_order[next_arrival++];
            out.events.push_back({t, SimEventKind::Arrival, tasks[ti].id, {}});
            ++out.arrived;
            if (base_count == 0 && !config.replenish) {
                out.events.push_back({t, SimEventKind::Rejected, tasks[ti].id, {}});
                ++out.rejected;
            } else {
                queued.push_back(ti);
            }
        }

        if (queued.empty()) continue;

        if (config.replenish) {
            std::size_t free_count = 0;
            for (bool b : busy)
                if (!b) ++free_count;
            // Grow the pool on demand, cloning the base fleet round-robin.
            while (free_count < queued.size() && base_count > 0) {
                const std::size_t tpl = clone_counter % base_count;
                Resource clone = pool[tpl];
                clone.id += "+g" + std::to_string(++clone_counter);
                if (auto it = pinned.find(pool[tpl].id); it != pinned.end())
                    pinned[clone.id] = it->second;
                resource_index[clone.id] = pool.size();
                pool.push_back(std::move(clone));
                busy.push_back(false);
                ++free_count;
            }
        }

        std::vector<Resource> free_pool;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (!busy[i]) free_pool.push_back(pool[i]);
        if (free_pool.empty()) continue;

        std::vector<Task> queued_tasks;
        for (std::size_t ti : queued) queued_tasks.push_back(tasks[ti]);

        SchedulePlan plan;
        switch (config.scheduler) {
            case SchedulerKind::NBDMMM: plan = nbdmmm(queued_tasks, free_pool, value, timing); break;
            case SchedulerKind::DMMM: plan = dmmm(queued_tasks, free_pool, value); break;
            case SchedulerKind::FCFS: plan = fcfs(queued_tasks, free_pool); break;
            case SchedulerKind::GreedyR: plan = greedy_r(queued_tasks, free_pool); break;
            case SchedulerKind::GreedyP: plan = greedy_p(queued_tasks, free_pool); break;
        }

        std::set<std::string> assigned_ids;
        for (const Assignment& a : plan.assignments) {
            const std::size_t ti = task_index.at(a.task_id);
            const std::size_t ri = resource_index.at(a.resource_id);
            const double total = physical_total_ms(tasks[ti], pool[ri]);
            busy[ri] = true;
            out.events.push_back({t, SimEventKind::Assigned, a.task_id, a.resource_id});
            out.assignments.push_back({a.task_id, a.resource_id, a.resource_value, total,
                                       order_counter++});
            out.executions.push_back({a.task_id, a.resource_id, pool[ri].host_id, t, t + total,
                                      tasks[ti].length_mi});
            completions.push({t + total, a.task_id, ri});
            assigned_ids.insert(a.task_id);
        }
        std::erase_if(queued, [&](std::size_t ti) { return assigned_ids.count(tasks[ti].id) > 0; });
    }

    std::stable_sort(out.events.begin(), out.events.end(),
                     [](const SimEvent& a, const SimEvent& b) {
                         if (a.time_ms != b.time_ms) return a.time_ms < b.time_ms;
                         if (a.kind != b.kind) return kind_priority(a.kind) < kind_priority(b.kind);
                         return a.task_id < b.task_id;
                     });
    return out;
}

std::string events_to_csv(const SimulationRun& run) {
    std::string csv = "time_ms,kind,task_id,resource_id\n";
    char buf[64];
    for (const auto& e : run.events) {
        std::snprintf(buf, sizeof(buf), "%.6f", e.time_ms);
        csv += buf;
        csv += ',';
        csv += to_string(e.kind);
        csv += ',';
        csv += e.task_id;
        csv += ',';
        csv += e.resource_id;
        csv += '\n';
    }
    return csv;
}

}  // namespace nbsim
