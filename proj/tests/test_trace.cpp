#include <doctest.h>

#include <sstream>

#include "nbsim/trace.hpp"

using namespace nbsim;

namespace {
const char* kFixturePath = NBSIM_TEST_DATA_DIR "/google_trace_sample.csv";
}

TEST_CASE("parse_rows reads scientific-notation job-event rows") {
    std::istringstream in("T1,2.45E+12,6.48E+09,0,0\nT44,2.45E+12,6.48E+09,3,1\n");
    auto result = parse_rows(in);
    REQUIRE(result.rows.size() == 2);
    CHECK(result.issues.empty());
    CHECK(result.rows[0].task_label == "T1");
    CHECK(result.rows[0].timestamp == 2450000000000LL);
    CHECK(result.rows[0].job_id == 6480000000LL);
    CHECK(result.rows[0].event_type == 0);
    CHECK(result.rows[1].event_type == static_cast<int>(TraceEventType::Fail));
    CHECK(result.rows[1].scheduling_class == 1);
}

TEST_CASE("whitespace-delimited rows parse too") {
    std::istringstream in("T1 100 7 0 0\nT2\t200\t7\t4\t2\n");
    auto result = parse_rows(in);
    REQUIRE(result.rows.size() == 2);
    CHECK(result.rows[1].timestamp == 200);
    CHECK(result.rows[1].event_type == 4);
}

TEST_CASE("empty input yields an empty sequence") {
    std::istringstream in("");
    auto result = parse_rows(in);
    CHECK(result.rows.empty());
    CHECK(result.issues.empty());
}

TEST_CASE("malformed rows are reported with line numbers, not fatal") {
    std::istringstream in("T1,100,7,0,0\nnot a row\nT2,200,7,9,0\nT3,300,7,4,1\n");
    auto result = parse_rows(in);
    REQUIRE(result.rows.size() == 2);
    REQUIRE(result.issues.size() == 2);
    CHECK(result.issues[0].line == 2);
    CHECK(result.issues[1].line == 3);
    CHECK(result.issues[1].message == "unknown event_type 9");
}

TEST_CASE("parse -> serialize -> parse round-trips exactly") {
    auto first = parse_file(kFixturePath);
    REQUIRE(first.rows.size() == 50);
    CHECK(first.issues.empty());
    std::istringstream again(serialize_rows(first.rows));
    auto second = parse_rows(again);
    CHECK(second.rows == first.rows);
}

TEST_CASE("summarize counts the fixture's submits and finishes") {
    auto parsed = parse_file(kFixturePath);
    auto summary = summarize(parsed.rows, 3600LL * 1000000LL);
    CHECK(summary.submitted == 17);
    CHECK(summary.finished == 11);
    REQUIRE(summary.completion_ratio.has_value());
    CHECK(*summary.completion_ratio == doctest::Approx(11.0 / 17.0).epsilon(1e-12));
}

TEST_CASE("summarize: peak and trough buckets") {
    std::vector<TraceRow> rows = {
        {"a", 10, 1, 0, 0}, {"b", 11, 1, 0, 0}, {"c", 12, 1, 0, 0},  // bucket 1
        {"d", 25, 1, 0, 0},                                          // bucket 2
        {"e", 14, 1, 4, 0},
    };
    auto s = summarize(rows, 10);
    CHECK(s.demand_by_bucket.at(1) == 3);
    CHECK(s.demand_by_bucket.at(2) == 1);
    CHECK(s.peak_bucket == 1);
    CHECK(s.trough_bucket == 2);
}

TEST_CASE("summarize without submits reports the ratio as absent") {
    std::vector<TraceRow> rows = {{"a", 10, 1, 4, 0}};
    auto s = summarize(rows, 10);
    CHECK(!s.completion_ratio.has_value());
}

TEST_CASE("summarize is order-invariant") {
    auto parsed = parse_file(kFixturePath);
    auto rows = parsed.rows;
    std::reverse(rows.begin(), rows.end());
    auto a = summarize(parsed.rows, 1000);
    auto b = summarize(rows, 1000);
    CHECK(a.demand_by_bucket == b.demand_by_bucket);
    CHECK(a.completion_ratio == b.completion_ratio);
}

TEST_CASE("to_workload rebases arrivals and keeps submit multiplicity") {
    std::vector<TraceRow> rows = {
        {"a", 100, 1, 0, 0}, {"b", 150, 1, 4, 0}, {"c", 200, 1, 0, 1}, {"d", 300, 1, 0, 2}};
    WorkloadMapping mapping;
    auto tasks = to_workload(rows, mapping);
    REQUIRE(tasks.size() == 3);
    CHECK(tasks[0].arrival_ms == 0.0);
    CHECK(tasks[1].arrival_ms == 100.0);
    CHECK(tasks[2].arrival_ms == 200.0);
    CHECK(tasks[2].scheduling_class == 2);
    for (const auto& t : tasks) {
        CHECK(t.length_mi >= mapping.min_length_mi);
        CHECK(t.cpu_demand_mips >= mapping.min_demand_mips);
    }

    CHECK(to_workload({{"x", 5, 1, 4, 0}}, mapping).empty());

    auto fixture = parse_file(kFixturePath);
    CHECK(to_workload(fixture.rows, mapping).size() == 17);
}
