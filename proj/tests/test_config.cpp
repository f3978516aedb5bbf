#include <doctest.h>

#include <sstream>

#include "nbsim/config.hpp"

using namespace nbsim;

namespace {

const char* kSample = R"(# comment
[fleet]
hosts = 4
mips_levels = 2000, 2500
resource_bandwidth = 12.5

[datacenters]
dc1 = 0, 0
dc2 = 30, 40

[users]
u1 = 5, 5, HighEnd
u2 = -3, 4, Naive

[matrix]
cost = 1
deadline = 2
length = 3

[values]
r1 = 30
r2 = 105

[workload]
task_count = 17
arrival_interval_ms = 4

[run]
scheduler = GreedyR
seed = 99
replenish = false
)";

}  // namespace

TEST_CASE("load_scenario reads every section") {
    std::istringstream in(kSample);
    auto cfg = load_scenario(in);
    CHECK(cfg.fleet.host_count == 4);
    REQUIRE(cfg.fleet.mips_levels.size() == 2);
    CHECK(cfg.fleet.mips_levels[1] == 2500.0);
    CHECK(cfg.fleet.resource_bandwidth == 12.5);
    REQUIRE(cfg.datacenters.size() == 2);
    CHECK(cfg.datacenters[1].location.y == 40.0);
    REQUIRE(cfg.users.size() == 2);
    CHECK(cfg.users[0].user_class == UserClass::HighEnd);
    CHECK(cfg.users[1].location.x == -3.0);
    REQUIRE(cfg.matrix.criteria.size() == 3);
    CHECK(cfg.matrix.criteria[1].name == "deadline");
    CHECK(cfg.static_resource_values.at("r2") == 105.0);
    CHECK(cfg.workload.task_count == 17);
    CHECK(cfg.workload.arrival_interval_ms == 4.0);
    CHECK(cfg.scheduler == SchedulerKind::GreedyR);
    CHECK(cfg.seed == 99);
    CHECK(cfg.replenish == false);
    CHECK(validate_config(cfg).empty());
}

TEST_CASE("defaults: no matrix section falls back to weights 1,2,3") {
    std::istringstream in("[run]\nscheduler = FCFS\n");
    auto cfg = load_scenario(in);
    REQUIRE(cfg.matrix.criteria.size() == 3);
    CHECK(cfg.matrix.criteria[2].weight == 3.0);
    CHECK(cfg.fleet.host_count == 20);  // the default 20-node fleet
    CHECK(cfg.fleet.mips_levels == std::vector<double>{2000.0, 2500.0, 3000.0});
}

TEST_CASE("errors carry line numbers") {
    std::istringstream bad_number(R"([fleet]
hosts = many)");
    CHECK_THROWS_WITH_AS(load_scenario(bad_number), "config line 2: bad number 'many'",
                         std::invalid_argument);

    std::istringstream bad_scheduler("[run]\nscheduler = RoundRobin\n");
    try {
        load_scenario(bad_scheduler);
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()).find("NBDMMM, DMMM, FCFS, GreedyR, GreedyP") !=
              std::string::npos);
    }

    std::istringstream orphan("key = 1\n");
    CHECK_THROWS_AS(load_scenario(orphan), std::invalid_argument);

    std::istringstream bad_section("[nope]\nx = 1\n");
    CHECK_THROWS_AS(load_scenario(bad_section), std::invalid_argument);
}

TEST_CASE("a loaded scenario actually runs") {
    std::istringstream in(kSample);
    auto cfg = load_scenario(in);
    auto run = nbsim::run(cfg);
    CHECK(run.arrived == 17);
    CHECK(run.completed == 17);
}
