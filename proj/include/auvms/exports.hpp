#pragma once

#include <string>
#include <vector>

#include "auvms/planner.hpp"
#include "auvms/postprocess.hpp"
#include "auvms/types.hpp"
#include "auvms/world.hpp"

namespace auvms {

/// Delimited path table: one configuration per row at full precision, so a
/// reload reproduces the planner output bit for bit.
std::string render_path_csv(const std::vector<ConfigState>& path);
std::vector<ConfigState> parse_path_csv(const std::string& text);

/// Tree edge list with cached end-effector positions.
std::string render_tree_csv(const Tree& tree);

/// Sampled trajectory table: time, the 8 configuration coordinates
/// (unwrapped), and the end-effector position.
std::string render_trajectory_csv(const Trajectory& traj, const DHParams& dh,
                                  double sample_hz);

std::string render_result_json(const PlanResult& result,
                               const std::string& scenario_name,
                               const std::string& algorithm,
                               std::uint64_t seed, int smoothed_nodes);

void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

struct ReplayReport {
  bool ok = false;
  std::string reason;  // empty when ok
};

/// Independent re-check of an exported path against a scenario: the first
/// node must match the scenario start, every node must be collision-free,
/// every consecutive edge must pass edge_free, and the final end effector
/// must land within goal_threshold of the goal.
ReplayReport replay_path(const std::vector<ConfigState>& path,
                         const Scenario& scenario, double goal_threshold);

}  // namespace auvms
