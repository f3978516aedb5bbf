#include "nbsim/schedulers.hpp"

#include <algorithm>
#include <stdexcept>

namespace nbsim {

const char* to_string(SchedulerKind k) {
    switch (k) {
        case SchedulerKind::NBDMMM: return "NBDMMM";
        case SchedulerKind::DMMM: return "DMMM";
        case SchedulerKind::FCFS: return "FCFS";
        case SchedulerKind::GreedyR: return "GreedyR";
        case SchedulerKind::GreedyP: return "GreedyP";
    }
    return "?";
}

std::optional<SchedulerKind> scheduler_kind_from_string(const std::string& name) {
    if (name == "NBDMMM") return SchedulerKind::NBDMMM;
    if (name == "DMMM") return SchedulerKind::DMMM;
    if (name == "FCFS") return SchedulerKind::FCFS;
    if (name == "GreedyR") return SchedulerKind::GreedyR;
    if (name == "GreedyP") return SchedulerKind::GreedyP;
    return std::nullopt;
}

ValueFn static_values(const std::vector<ResourceValuation>& valuations) {
    std::map<std::string, double> by_id;
    for (const auto& v : valuations) by_id[v.resource_id] = v.value;
    return [by_id](const Task&, const Resource& r) {
        auto it = by_id.find(r.id);
        if (it == by_id.end())
            throw std::invalid_argument("no valuation for resource " + r.id);
        return it->second;
    };
}

std::size_t reference_resource(const std::vector<Resource>& resources) {
    if (resources.empty()) throw std::invalid_argument("no resources");
    std::size_t best = 0;
    for (std::size_t i = 1; i < resources.size(); ++i) {
        const auto& r = resources[i];
        const auto& b = resources[best];
        if (r.cpu_mips > b.cpu_mips || (r.cpu_mips == b.cpu_mips && r.id < b.id)) best = i;
    }
    return best;
}

double TimingContext::total_ms_for(const Task& task, const Resource& reference) const {
    if (auto it = fixed_total_ms.find(task.id); it != fixed_total_ms.end())
        return it->second;
    double latency = 0.0;
    const CloudUser* user = nullptr;
    for (const auto& u : users)
        if (u.id == task.user_id) { user = &u; break; }
    if (user && !datacenters.empty()) {
        auto [d, dc] = nearest_distance(*user, datacenters);
        latency = network_latency_ms(d, reference.bandwidth);
    }
    return latency + execution_time_ms(task, reference);
}

namespace {

// Shared max-min pairing loop: each iteration removes the remaining task
// with the smallest key (ties by task id) and the remaining resource with
// the largest value for that task (ties by resource id).
SchedulePlan pair_min_key_max_value(const std::vector<Task>& tasks,
                                    const std::vector<Resource>& resources,
                                    const ValueFn& value,
                                    const std::function<double(const Task&)>& key) {
    SchedulePlan plan;
    std::vector<std::size_t> task_order(tasks.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) task_order[i] = i;
    std::sort(task_order.begin(), task_order.end(), [&](std::size_t a, std::size_t b) {
        const double ka = key(tasks[a]), kb = key(tasks[b]);
        if (ka != kb) return ka < kb;
        return tasks[a].id < tasks[b].id;
    });

    std::vector<bool> resource_used(resources.size(), false);
    std::size_t assigned = 0;
    for (std::size_t ti : task_order) {
        const Task& task = tasks[ti];
        std::size_t best = resources.size();
        double best_value = 0.0;
        for (std::size_t ri = 0; ri < resources.size(); ++ri) {
            if (resource_used[ri]) continue;
            const double v = value(task, resources[ri]);
            if (best == resources.size() || v > best_value ||
                (v == best_value && resources[ri].id < resources[best].id)) {
                best = ri;
                best_value = v;
            }
        }
        if (best == resources.size()) {
            plan.unassigned.push_back(task.id);
            continue;
        }
        resource_used[best] = true;
        plan.assignments.push_back(
            {task.id, resources[best].id, best_value, key(task), assigned++});
    }
    return plan;
}

// Ordered index pairing used by fcfs and the greedy baselines: i-th task in
// task_order goes to the i-th resource in resource_order.
SchedulePlan pair_in_order(const std::vector<Task>& tasks,
                           const std::vector<Resource>& resources,
                           std::vector<std::size_t> task_order,
                           std::vector<std::size_t> resource_order,
                           const std::function<double(const Task&)>& key) {
    SchedulePlan plan;
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < task_order.size(); ++i) {
        const Task& task = tasks[task_order[i]];
        if (i >= resource_order.size()) {
            plan.unassigned.push_back(task.id);
            continue;
        }
        plan.assignments.push_back(
            {task.id, resources[resource_order[i]].id, 0.0, key(task), assigned++});
    }
    return plan;
}

std::vector<std::size_t> indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

}  // namespace

SchedulePlan dmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                  const ValueFn& value) {
    if (tasks.empty()) return {};
    if (resources.empty()) {
        SchedulePlan plan;
        for (const auto& t : tasks) plan.unassigned.push_back(t.id);
        std::sort(plan.unassigned.begin(), plan.unassigned.end());
        return plan;
    }
    const Resource& ref = resources[reference_resource(resources)];
    return pair_min_key_max_value(tasks, resources, value, [&](const Task& t) {
        return execution_time_ms(t, ref);
    });
}

SchedulePlan dmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                  const std::vector<ResourceValuation>& valuations) {
    return dmmm(tasks, resources, static_values(valuations));
}

SchedulePlan nbdmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                    const ValueFn& value, const TimingContext& timing) {
    if (tasks.empty()) return {};
    if (resources.empty()) {
        SchedulePlan plan;
        for (const auto& t : tasks) plan.unassigned.push_back(t.id);
        std::sort(plan.unassigned.begin(), plan.unassigned.end());
        return plan;
    }
    const Resource& ref = resources[reference_resource(resources)];
    return pair_min_key_max_value(tasks, resources, value, [&](const Task& t) {
        return timing.total_ms_for(t, ref);
    });
}

SchedulePlan nbdmmm(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                    const std::vector<ResourceValuation>& valuations,
                    const TimingContext& timing) {
    return nbdmmm(tasks, resources, static_values(valuations), timing);
}

SchedulePlan fcfs(const std::vector<Task>& tasks, const std::vector<Resource>& resources) {
    auto task_order = indices(tasks.size());
    std::sort(task_order.begin(), task_order.end(), [&](std::size_t a, std::size_t b) {
        if (tasks[a].arrival_ms != tasks[b].arrival_ms)
            return tasks[a].arrival_ms < tasks[b].arrival_ms;
        return tasks[a].id < tasks[b].id;
    });
    auto resource_order = indices(resources.size());
    std::sort(resource_order.begin(), resource_order.end(),
              [&](std::size_t a, std::size_t b) { return resources[a].id < resources[b].id; });
    return pair_in_order(tasks, resources, std::move(task_order), std::move(resource_order),
                         [&](const Task& t) {
                             return resources.empty()
                                        ? 0.0
                                        : execution_time_ms(t, resources[reference_resource(resources)]);
                         });
}

namespace {

SchedulePlan greedy(const std::vector<Task>& tasks, const std::vector<Resource>& resources,
                    bool most_powerful_first) {
    if (tasks.empty()) return {};
    std::function<double(const Task&)> key;
    if (resources.empty()) {
        key = [](const Task&) { return 0.0; };
    } else {
        const Resource& ref = resources[reference_resource(resources)];
        key = [&ref](const Task& t) { return execution_time_ms(t, ref); };
    }
    auto task_order = indices(tasks.size());
    std::sort(task_order.begin(), task_order.end(), [&](std::size_t a, std::size_t b) {
        const double ka = key(tasks[a]), kb = key(tasks[b]);
        if (ka != kb) return ka < kb;
        return tasks[a].id < tasks[b].id;
    });
    auto resource_order = indices(resources.size());
    std::sort(resource_order.begin(), resource_order.end(), [&](std::size_t a, std::size_t b) {
        if (resources[a].cpu_mips != resources[b].cpu_mips)
            return most_powerful_first ? resources[a].cpu_mips > resources[b].cpu_mips
                                       : resources[a].cpu_mips < resources[b].cpu_mips;
        return resources[a].id < resources[b].id;
    });
    return pair_in_order(tasks, resources, std::move(task_order), std::move(resource_order), key);
}

}  // namespace

SchedulePlan greedy_r(const std::vector<Task>& tasks, const std::vector<Resource>& resources) {
    return greedy(tasks, resources, true);
}

SchedulePlan greedy_p(const std::vector<Task>& tasks, const std::vector<Resource>& resources) {
    return greedy(tasks, resources, false);
}

}  // namespace nbsim
