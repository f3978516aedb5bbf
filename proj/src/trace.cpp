#include "nbsim/trace.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "nbsim/rng.hpp"

namespace nbsim {

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    const bool has_comma = line.find(',') != std::string::npos;
    auto flush = [&] {
        if (!current.empty()) {
            fields.push_back(current);
            current.clear();
        }
    };
    for (char c : line) {
        if ((has_comma && c == ',') || (!has_comma && (c == ' ' || c == '\t'))) {
            if (has_comma) {
                fields.push_back(current);  // comma fields may be empty
                current.clear();
            } else {
                flush();
            }
        } else if (c != '\r') {
            current += c;
        }
    }
    if (has_comma)
        fields.push_back(current);
    else
        flush();
    return fields;
}

// Integer field that may be written in scientific notation.
std::optional<long long> parse_integer(const std::string& s) {
    if (s.empty()) return std::nullopt;
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size() || !std::isfinite(v)) return std::nullopt;
        return static_cast<long long>(std::llround(v));
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

}  // namespace

ParseResult parse_rows(std::istream& input) {
    if (!input.good()) throw std::runtime_error("unreadable trace stream");
    ParseResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        std::string trimmed = line;
        while (!trimmed.empty() && (trimmed.back() == '\r' || trimmed.back() == ' '))
            trimmed.pop_back();
        if (trimmed.empty() || trimmed[0] == '#') continue;

        auto fields = split_fields(trimmed);
        if (fields.size() != 5) {
            result.issues.push_back({line_no, "expected 5 fields, got " +
                                                  std::to_string(fields.size())});
            continue;
        }
        TraceRow row;
        row.task_label = fields[0];
        auto ts = parse_integer(fields[1]);
        auto job = parse_integer(fields[2]);
        auto ev = parse_integer(fields[3]);
        auto cls = parse_integer(fields[4]);
        if (!ts || !job || !ev || !cls) {
            result.issues.push_back({line_no, "non-numeric field"});
            continue;
        }
        if (*ev < 0 || *ev > 5) {
            result.issues.push_back({line_no, "unknown event_type " + std::to_string(*ev)});
            continue;
        }
        row.timestamp = *ts;
        row.job_id = *job;
        row.event_type = static_cast<int>(*ev);
        row.scheduling_class = static_cast<int>(*cls);
        result.rows.push_back(std::move(row));
    }
    if (input.bad()) throw std::runtime_error("trace stream read error");
    return result;
}

ParseResult parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open trace file: " + path);
    return parse_rows(in);
}

std::string serialize_rows(const std::vector<TraceRow>& rows) {
    std::string out;
    for (const auto& r : rows) {
        out += r.task_label;
        out += ',';
        out += std::to_string(r.timestamp);
        out += ',';
        out += std::to_string(r.job_id);
        out += ',';
        out += std::to_string(r.event_type);
        out += ',';
        out += std::to_string(r.scheduling_class);
        out += '\n';
    }
    return out;
}

UsageSummary summarize(const std::vector<TraceRow>& rows, long long bucket_units) {
    if (bucket_units <= 0) throw std::invalid_argument("bucket_units > 0");
    UsageSummary s;
    for (const auto& r : rows) {
        if (r.event_type == static_cast<int>(TraceEventType::SubmitEligible)) {
            ++s.submitted;
            ++s.demand_by_bucket[r.timestamp / bucket_units];
        } else if (r.event_type == static_cast<int>(TraceEventType::Finish)) {
            ++s.finished;
        }
    }
    if (s.submitted > 0) {
        s.completion_ratio = static_cast<double>(s.finished) / static_cast<double>(s.submitted);
        s.peak_bucket = s.demand_by_bucket.begin()->first;
        s.trough_bucket = s.demand_by_bucket.begin()->first;
        for (const auto& [bucket, count] : s.demand_by_bucket) {
            if (count > s.demand_by_bucket.at(s.peak_bucket)) s.peak_bucket = bucket;
            if (count < s.demand_by_bucket.at(s.trough_bucket)) s.trough_bucket = bucket;
        }
    }
    return s;
}

std::vector<Task> to_workload(const std::vector<TraceRow>& rows, const WorkloadMapping& mapping) {
    SplitMix64 rng(mapping.seed);
    std::vector<Task> tasks;
    std::optional<long long> base;  // earliest submit, so arrivals are nonnegative
    for (const auto& r : rows)
        if (r.event_type == static_cast<int>(TraceEventType::SubmitEligible))
            if (!base || r.timestamp < *base) base = r.timestamp;
    for (const auto& r : rows) {
        if (r.event_type != static_cast<int>(TraceEventType::SubmitEligible)) continue;
        Task t;
        t.id = r.task_label;
        t.arrival_ms = static_cast<double>(r.timestamp - *base) * mapping.time_scale;
        t.length_mi = rng.uniform(mapping.min_length_mi, mapping.max_length_mi);
        t.cpu_demand_mips = rng.uniform(mapping.min_demand_mips, mapping.max_demand_mips);
        t.scheduling_class = r.scheduling_class;
        tasks.push_back(std::move(t));
    }
    return tasks;
}

std::string summary_to_csv(const UsageSummary& summary) {
    std::string csv = "bucket,count\n";
    for (const auto& [bucket, count] : summary.demand_by_bucket)
        csv += std::to_string(bucket) + "," + std::to_string(count) + "\n";
    csv += "\nmetric,value\n";
    csv += "submitted," + std::to_string(summary.submitted) + "\n";
    csv += "finished," + std::to_string(summary.finished) + "\n";
    if (summary.completion_ratio) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.6f", *summary.completion_ratio);
        csv += std::string("completion_ratio,") + buf + "\n";
        csv += "peak_bucket," + std::to_string(summary.peak_bucket) + "\n";
        csv += "trough_bucket," + std::to_string(summary.trough_bucket) + "\n";
    } else {
        csv += "completion_ratio,\n";
    }
    return csv;
}

}  // namespace nbsim
