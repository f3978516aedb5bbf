#include "nbsim/core.hpp"

#include <cmath>

namespace nbsim {

const char* to_string(UserClass c) {
    switch (c) {
        case UserClass::HighEnd: return "HighEnd";
        case UserClass::Privileged: return "Privileged";
        case UserClass::Casual: return "Casual";
        case UserClass::Naive: return "Naive";
        case UserClass::Underprivileged: return "Underprivileged";
    }
    return "?";
}

std::optional<UserClass> user_class_from_string(const std::string& name) {
    if (name == "HighEnd") return UserClass::HighEnd;
    if (name == "Privileged") return UserClass::Privileged;
    if (name == "Casual") return UserClass::Casual;
    if (name == "Naive") return UserClass::Naive;
    if (name == "Underprivileged") return UserClass::Underprivileged;
    return std::nullopt;
}

std::optional<std::string> validate(const Task& t) {
    if (t.id.empty()) return "id must be nonempty";
    if (!(t.length_mi > 0)) return "length_mi > 0";
    if (!(t.cpu_demand_mips > 0)) return "cpu_demand_mips > 0";
    if (!(t.arrival_ms >= 0)) return "arrival_ms >= 0";
    if (t.scheduling_class < 0 || t.scheduling_class > 3)
        return "scheduling_class in 0..3";
    return std::nullopt;
}

std::optional<std::string> validate(const Resource& r) {
    if (r.id.empty()) return "id must be nonempty";
    if (!(r.memory_mb > 0)) return "memory_mb > 0";
    if (!(r.bandwidth > 0)) return "bandwidth > 0";
    if (!(r.cpu_mips > 0)) return "cpu_mips > 0";
    return std::nullopt;
}

std::optional<std::string> validate(const Host& h) {
    if (h.id.empty()) return "id must be nonempty";
    if (!(h.cpu_capacity_mips > 0)) return "cpu_capacity_mips > 0";
    return std::nullopt;
}

std::optional<std::string> validate(const GeoPoint& p) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) return "coordinates finite";
    return std::nullopt;
}

std::optional<std::string> validate(const DataCenter& dc) {
    if (dc.id.empty()) return "id must be nonempty";
    if (auto v = validate(dc.location)) return v;
    if (dc.hosts.empty()) return "at least one host";
    for (const auto& h : dc.hosts)
        if (auto v = validate(h)) return v;
    return std::nullopt;
}

std::optional<std::string> validate(const CloudUser& u) {
    if (u.id.empty()) return "id must be nonempty";
    return validate(u.location);
}

}  // namespace nbsim
