#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbsim/config.hpp"
#include "nbsim/metrics.hpp"
#include "nbsim/simulator.hpp"
#include "nbsim/trace.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUserError = 2;
constexpr int kExitEnvError = 3;

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

// Utilization window: the run's horizon (time of the last event).
double run_window_ms(const nbsim::SimulationRun& run) {
    double horizon = 0.0;
    for (const auto& e : run.events) horizon = std::max(horizon, e.time_ms);
    return horizon > 0.0 ? horizon : 1.0;
}

nbsim::MetricsRow row_for(const nbsim::ScenarioConfig& cfg, const nbsim::SimulationRun& run) {
    nbsim::MetricsRow row;
    row.algorithm = nbsim::to_string(cfg.scheduler);
    row.task_count = run.tasks.size();
    row.arrival_interval_ms = cfg.workload.arrival_interval_ms;
    row.success_ratio = nbsim::success_ratio(run);
    row.utilization = nbsim::utilization(run, run_window_ms(run));
    return row;
}

int cmd_run(const std::string& config_path, const std::string& scheduler,
            std::int64_t seed, const std::string& out_dir) {
    nbsim::ScenarioConfig cfg = nbsim::load_scenario_file(config_path);
    if (!scheduler.empty()) {
        auto kind = nbsim::scheduler_kind_from_string(scheduler);
        if (!kind) {
            std::cerr << "unknown scheduler '" << scheduler
                      << "' (valid: NBDMMM, DMMM, FCFS, GreedyR, GreedyP)\n";
            return kExitUserError;
        }
        cfg.scheduler = *kind;
    }
    if (seed >= 0) cfg.seed = static_cast<std::uint64_t>(seed);

    if (auto problems = nbsim::validate_config(cfg); !problems.empty()) {
        std::cerr << "invalid config:\n";
        for (const auto& p : problems) std::cerr << "  " << p << "\n";
        return kExitUserError;
    }

    nbsim::SimulationRun run = nbsim::run(cfg);
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "events.csv", nbsim::events_to_csv(run));
    write_file(fs::path(out_dir) / "metrics.csv", nbsim::metrics_to_csv({row_for(cfg, run)}));
    std::cout << "run: " << run.tasks.size() << " tasks, " << run.completed << " completed, "
              << run.rejected << " rejected\n";
    return kExitOk;
}

int cmd_sweep(const std::string& config_path, const std::string& sweep_spec,
              const std::string& out_dir) {
    const std::size_t eq = sweep_spec.find('=');
    if (eq == std::string::npos) {
        std::cerr << "--sweep wants AXIS=p1,p2,... with AXIS one of task_count, "
                     "arrival_interval_ms\n";
        return kExitUserError;
    }
    const std::string axis = sweep_spec.substr(0, eq);
    if (axis != "task_count" && axis != "arrival_interval_ms") {
        std::cerr << "unknown sweep axis '" << axis << "'\n";
        return kExitUserError;
    }
    std::vector<double> points;
    {
        std::string rest = sweep_spec.substr(eq + 1);
        std::string cur;
        for (char c : rest + ",") {
            if (c == ',') {
                if (!cur.empty()) points.push_back(std::stod(cur));
                cur.clear();
            } else {
                cur += c;
            }
        }
    }
    if (points.empty()) {
        std::cerr << "sweep needs at least one point\n";
        return kExitUserError;
    }

    const nbsim::ScenarioConfig base = nbsim::load_scenario_file(config_path);
    const std::vector<nbsim::SchedulerKind> kinds = {
        nbsim::SchedulerKind::NBDMMM, nbsim::SchedulerKind::DMMM, nbsim::SchedulerKind::FCFS,
        nbsim::SchedulerKind::GreedyR, nbsim::SchedulerKind::GreedyP};

    std::vector<nbsim::MetricsRow> rows;
    std::vector<nbsim::RegressionRow> regressions;
    for (auto kind : kinds) {
        std::vector<double> xs, ys;
        for (double p : points) {
            nbsim::ScenarioConfig cfg = base;
            cfg.scheduler = kind;
            if (axis == "task_count")
                cfg.workload.task_count = static_cast<std::size_t>(p);
            else
                cfg.workload.arrival_interval_ms = p;
            if (auto problems = nbsim::validate_config(cfg); !problems.empty()) {
                std::cerr << "invalid config at sweep point " << p << ":\n";
                for (const auto& pr : problems) std::cerr << "  " << pr << "\n";
                return kExitUserError;
            }
            nbsim::SimulationRun run = nbsim::run(cfg);
            nbsim::MetricsRow row = row_for(cfg, run);
            rows.push_back(row);
            xs.push_back(static_cast<double>(row.task_count));
            ys.push_back(row.utilization);
        }
        if (axis == "task_count") {
            try {
                regressions.push_back({nbsim::to_string(kind), nbsim::regression(xs, ys)});
            } catch (const std::invalid_argument& e) {
                std::cerr << "regression skipped for " << nbsim::to_string(kind) << ": "
                          << e.what() << "\n";
            }
        }
    }

    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "metrics.csv", nbsim::metrics_to_csv(rows));
    if (axis == "task_count")
        write_file(fs::path(out_dir) / "regression.csv", nbsim::regression_to_csv(regressions));
    std::cout << "sweep: " << rows.size() << " metric rows, " << regressions.size()
              << " regression rows\n";
    return kExitOk;
}

int cmd_trace(const std::string& trace_path, long long bucket, const std::string& out_dir) {
    nbsim::ParseResult parsed = nbsim::parse_file(trace_path);
    for (const auto& issue : parsed.issues)
        std::cerr << "warning: line " << issue.line << ": " << issue.message << "\n";
    if (parsed.rows.empty()) {
        std::cerr << "no valid rows in " << trace_path << "\n";
        return kExitUserError;
    }
    nbsim::UsageSummary summary = nbsim::summarize(parsed.rows, bucket);
    fs::create_directories(out_dir);
    write_file(fs::path(out_dir) / "usage.csv", nbsim::summary_to_csv(summary));
    std::cout << "trace: " << parsed.rows.size() << " rows, " << summary.submitted
              << " submits, " << summary.finished << " finishes\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"NBDMMM cloud scheduling simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir = "out", scheduler, sweep_spec, trace_path;
    std::int64_t seed = -1;
    long long bucket_ms = 3600LL * 1000LL;  // hourly buckets by default

    auto* run_cmd = app.add_subcommand("run", "Execute one scenario");
    run_cmd->add_option("--config", config_path, "Scenario config file")->required();
    run_cmd->add_option("--scheduler", scheduler, "Override the configured scheduler");
    run_cmd->add_option("--seed", seed, "Override the configured seed");
    run_cmd->add_option("--out", out_dir, "Output directory");

    auto* sweep_cmd = app.add_subcommand("sweep", "Run all schedulers over a parameter sweep");
    sweep_cmd->add_option("--config", config_path, "Scenario config file")->required();
    sweep_cmd->add_option("--sweep", sweep_spec, "AXIS=p1,p2,... (task_count or arrival_interval_ms)")
        ->required();
    sweep_cmd->add_option("--out", out_dir, "Output directory");

    auto* trace_cmd = app.add_subcommand("trace", "Summarize a job-events trace");
    trace_cmd->add_option("--trace", trace_path, "Trace file")->required();
    trace_cmd->add_option("--bucket-ms", bucket_ms, "Bucket width in trace time units");
    trace_cmd->add_option("--out", out_dir, "Output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) return cmd_run(config_path, scheduler, seed, out_dir);
        if (sweep_cmd->parsed()) return cmd_sweep(config_path, sweep_spec, out_dir);
        if (trace_cmd->parsed()) return cmd_trace(trace_path, bucket_ms, out_dir);
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitUserError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitEnvError;
    }
    return kExitOk;
}
