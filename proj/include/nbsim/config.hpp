#pragma once

#include <iosfwd>
#include <string>

#include "nbsim/simulator.hpp"

namespace nbsim {

/// Loads a scenario from the sectioned key-value format documented in the
/// README ([fleet], [datacenters], [users], [matrix], [values], [workload],
/// [run]). Throws std::invalid_argument with a line-numbered message on a
/// malformed file and std::runtime_error when the file cannot be read.
ScenarioConfig load_scenario(std::istream& input);
ScenarioConfig load_scenario_file(const std::string& path);

}  // namespace nbsim
