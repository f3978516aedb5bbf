#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nbsim/core.hpp"

namespace nbsim {

/// Google-cluster-style job event codes.
enum class TraceEventType {
    SubmitEligible = 0,
    Schedule = 1,
    Evict = 2,
    Fail = 3,
    Finish = 4,
    Kill = 5,
};

/// One job-events row: task label, timestamp (opaque trace time units),
/// job id, event type 0-5, scheduling class 0-3.
struct TraceRow {
    std::string task_label;
    long long timestamp = 0;
    long long job_id = 0;
    int event_type = 0;
    int scheduling_class = 0;

    bool operator==(const TraceRow&) const = default;
};

struct ParseIssue {
    std::size_t line = 0;  // 1-based
    std::string message;
};

struct ParseResult {
    std::vector<TraceRow> rows;     // valid rows, in file order
    std::vector<ParseIssue> issues; // malformed rows with line numbers
};

/// Parses comma- or whitespace-delimited rows with the five job-event
/// columns. Numeric fields accept scientific notation ("2.45E+12"). Blank
/// lines and lines starting with '#' are skipped. Malformed rows are
/// reported, not fatal; an unreadable stream throws std::runtime_error.
ParseResult parse_rows(std::istream& input);
ParseResult parse_file(const std::string& path);

/// Canonical comma-delimited form; parse(serialize(rows)).rows == rows.
std::string serialize_rows(const std::vector<TraceRow>& rows);

struct UsageSummary {
    std::map<long long, std::size_t> demand_by_bucket;  // submits per bucket
    long long peak_bucket = 0;    // max demand, ties to the earliest bucket
    long long trough_bucket = 0;  // min demand, ties to the earliest bucket
    std::size_t submitted = 0;    // type-0 rows
    std::size_t finished = 0;     // type-4 rows
    std::optional<double> completion_ratio;  // finished / submitted; absent when no submits
};

/// Buckets type-0 rows by timestamp / bucket_units. bucket_units must be
/// positive (timestamps are opaque trace units, so the bucket width is too).
UsageSummary summarize(const std::vector<TraceRow>& rows, long long bucket_units);

/// How trace rows become simulator tasks. The job-events table carries no
/// task lengths or CPU demands, so those are drawn from a seeded uniform
/// distribution; arrival times are rebased to zero and scaled.
struct WorkloadMapping {
    double time_scale = 1.0;  // arrival_ms = (timestamp - first submit) * scale
    double min_length_mi = 200.0;
    double max_length_mi = 2000.0;
    double min_demand_mips = 2000.0;
    double max_demand_mips = 3000.0;
    std::uint64_t seed = 1;
};

/// One Task per type-0 row, in file order.
std::vector<Task> to_workload(const std::vector<TraceRow>& rows, const WorkloadMapping& mapping);

/// Demand-by-bucket table as CSV ("bucket,count") plus summary rows.
std::string summary_to_csv(const UsageSummary& summary);

}  // namespace nbsim
