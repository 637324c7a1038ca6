#pragma once

#include <string>
#include <vector>

#include "auvms/planner.hpp"
#include "auvms/world.hpp"

namespace auvms {

/// Scenario file contents: the world description plus the planner
/// parameters stored alongside it. Absent fields fall back to the
/// documented defaults; an absent goal_threshold follows goal.radius.
struct LoadedScenario {
  Scenario scenario;
  PlannerParams planner;
};

/// Parses a scenario document from JSON text. Throws InvalidScenario with
/// line/column context on parse errors and a field-by-field issue list on
/// semantic errors.
LoadedScenario parse_scenario(const std::string& json_text,
                              const std::string& origin = "<string>");

/// Reads and parses a scenario file.
LoadedScenario load_scenario(const std::string& path);

/// Serializes a scenario document; load(save(x)) is the identity and the
/// output is byte-stable for identical inputs.
std::string scenario_to_json(const LoadedScenario& doc);

/// Semantic lint: returns a list of human-readable issues, empty when the
/// scenario is valid. parse_scenario/load_scenario throw when this list is
/// non-empty.
std::vector<std::string> validate_scenario(const LoadedScenario& doc);

}  // namespace auvms
