#pragma once

#include <optional>
#include <string>

#include "auvms/bench.hpp"
#include "auvms/planner.hpp"
#include "auvms/postprocess.hpp"
#include "auvms/scenario_io.hpp"

namespace auvms {

struct RunOptions {
  double trajectory_speed = 0.1;  // m/s along the end-effector arc
  double trajectory_hz = 50.0;    // export sample rate
};

struct RunArtifacts {
  PlanResult result;
  std::optional<SmoothedPath> smoothed;
  std::optional<ValidatedTrajectory> trajectory;
  std::string output_dir;  // empty when nothing was written
};

/// Runs one planner on a loaded scenario, smooths and time-parameterizes
/// the result, and (when output_dir is non-empty) writes result.json,
/// path.csv, smoothed.csv, tree.csv and trajectory.csv there.
RunArtifacts run_plan(const LoadedScenario& doc, Algorithm algorithm,
                      const std::string& output_dir, const RunOptions& options);

}  // namespace auvms
