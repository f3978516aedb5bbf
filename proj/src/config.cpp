#include "nbsim/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nbsim/trace.hpp"

namespace nbsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : s) {
        if (c == sep) {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(trim(current));
    return parts;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

double to_double(const std::string& s, std::size_t line) {
    try {
        std::size_t pos = 0;
        double v = std::stod(s, &pos);
        if (pos != s.size()) fail(line, "bad number '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        fail(line, "bad number '" + s + "'");
    } catch (const std::out_of_range&) {
        fail(line, "number out of range '" + s + "'");
    }
}

}  // namespace

ScenarioConfig load_scenario(std::istream& input) {
    ScenarioConfig cfg;
    cfg.matrix = DecisionMatrix::with_default_priorities({});
    bool matrix_seen = false;

    std::string workload_source = "synthetic";
    std::string trace_path;
    double time_scale = 1.0;

    std::string section;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        std::string t = trim(line);
        if (t.empty() || t[0] == '#' || t[0] == ';') continue;
        if (t.front() == '[') {
            if (t.back() != ']') fail(line_no, "unterminated section header");
            section = t.substr(1, t.size() - 2);
            continue;
        }
        const std::size_t eq = t.find('=');
        if (eq == std::string::npos) fail(line_no, "expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        if (key.empty()) fail(line_no, "empty key");

        if (section == "fleet") {
            if (key == "hosts") cfg.fleet.host_count = static_cast<int>(to_double(value, line_no));
            else if (key == "mips_levels") {
                cfg.fleet.mips_levels.clear();
                for (const auto& p : split(value, ','))
                    cfg.fleet.mips_levels.push_back(to_double(p, line_no));
            } else if (key == "host_memory_mb") cfg.fleet.host_memory_mb = to_double(value, line_no);
            else if (key == "host_storage_gb") cfg.fleet.host_storage_gb = to_double(value, line_no);
            else if (key == "resources_per_host")
                cfg.fleet.resources_per_host = static_cast<int>(to_double(value, line_no));
            else if (key == "resource_memory_mb")
                cfg.fleet.resource_memory_mb = to_double(value, line_no);
            else if (key == "resource_storage_mb")
                cfg.fleet.resource_storage_mb = to_double(value, line_no);
            else if (key == "resource_bandwidth")
                cfg.fleet.resource_bandwidth = to_double(value, line_no);
            else fail(line_no, "unknown fleet key '" + key + "'");
        } else if (section == "datacenters") {
            auto parts = split(value, ',');
            if (parts.size() != 2) fail(line_no, "datacenter wants 'x,y'");
            DataCenter dc;
            dc.id = key;
            dc.location = {to_double(parts[0], line_no), to_double(parts[1], line_no)};
            cfg.datacenters.push_back(std::move(dc));
        } else if (section == "users") {
            auto parts = split(value, ',');
            if (parts.size() != 3) fail(line_no, "user wants 'x,y,class'");
            CloudUser u;
            u.id = key;
            u.location = {to_double(parts[0], line_no), to_double(parts[1], line_no)};
            auto cls = user_class_from_string(parts[2]);
            if (!cls) fail(line_no, "unknown user class '" + parts[2] + "'");
            u.user_class = *cls;
            cfg.users.push_back(std::move(u));
        } else if (section == "matrix") {
            matrix_seen = true;
            cfg.matrix.criteria.push_back({key, to_double(value, line_no)});
        } else if (section == "values") {
            cfg.static_resource_values[key] = to_double(value, line_no);
        } else if (section == "workload") {
            if (key == "source") workload_source = value;
            else if (key == "task_count")
                cfg.workload.task_count = static_cast<std::size_t>(to_double(value, line_no));
            else if (key == "arrival_interval_ms")
                cfg.workload.arrival_interval_ms = to_double(value, line_no);
            else if (key == "min_length_mi") cfg.workload.min_length_mi = to_double(value, line_no);
            else if (key == "max_length_mi") cfg.workload.max_length_mi = to_double(value, line_no);
            else if (key == "min_demand_mips")
                cfg.workload.min_demand_mips = to_double(value, line_no);
            else if (key == "max_demand_mips")
                cfg.workload.max_demand_mips = to_double(value, line_no);
            else if (key == "trace_path") trace_path = value;
            else if (key == "time_scale") time_scale = to_double(value, line_no);
            else fail(line_no, "unknown workload key '" + key + "'");
        } else if (section == "run") {
            if (key == "scheduler") {
                auto kind = scheduler_kind_from_string(value);
                if (!kind)
                    fail(line_no, "unknown scheduler '" + value +
                                      "' (valid: NBDMMM, DMMM, FCFS, GreedyR, GreedyP)");
                cfg.scheduler = *kind;
            } else if (key == "seed") {
                cfg.seed = static_cast<std::uint64_t>(std::stoull(value));
            } else if (key == "replenish") {
                if (value == "true") cfg.replenish = true;
                else if (value == "false") cfg.replenish = false;
                else fail(line_no, "replenish wants true or false");
            } else {
                fail(line_no, "unknown run key '" + key + "'");
            }
        } else if (section.empty()) {
            fail(line_no, "key outside any section");
        } else {
            fail(line_no, "unknown section [" + section + "]");
        }
    }

    if (!matrix_seen)
        cfg.matrix = DecisionMatrix::with_default_priorities(
            {{"c1", 1.0}, {"c2", 2.0}, {"c3", 3.0}});

    if (workload_source == "trace") {
        if (trace_path.empty())
            throw std::invalid_argument("config: workload source 'trace' needs trace_path");
        auto parsed = parse_file(trace_path);
        WorkloadMapping mapping;
        mapping.time_scale = time_scale;
        mapping.min_length_mi = cfg.workload.min_length_mi;
        mapping.max_length_mi = cfg.workload.max_length_mi;
        mapping.min_demand_mips = cfg.workload.min_demand_mips;
        mapping.max_demand_mips = cfg.workload.max_demand_mips;
        mapping.seed = cfg.seed;
        cfg.workload.trace_tasks = to_workload(parsed.rows, mapping);
    } else if (workload_source != "synthetic") {
        throw std::invalid_argument("config: workload source must be synthetic or trace");
    }
    return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    return load_scenario(in);
}

}  // namespace nbsim
