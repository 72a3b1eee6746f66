#pragma once

#include <cstdint>
#include <string>

#include "icar/types.hpp"
#include "icar/world.hpp"

namespace icar {

// Scenario files are line-oriented text, one record per entity:
//   car <id> <lane> <pos> <speed> <dest>
//   light <id> <lane> <pos> <initial_phase>
// with '#' comments and blank lines ignored. initial_phase is one of
// green|yellow|red (case-insensitive).
ScenarioSpec load_scenario(const std::string& path);
ScenarioSpec parse_scenario(const std::string& text, const std::string& origin = "<string>");

// Config files are flat key=value text mirroring the WorldConfig field names;
// light_durations takes three comma- or space-separated values (green yellow
// red). Missing keys keep their defaults; unknown keys are an error.
WorldConfig load_config(const std::string& path);
WorldConfig parse_config(const std::string& text, const std::string& origin = "<string>");

// Canonical serialization of every field, and the hash recorded in CSV
// metadata so outputs can be traced back to their exact configuration.
std::string canonical_config_string(const WorldConfig& cfg);
std::uint64_t config_hash(const WorldConfig& cfg);

}  // namespace icar
