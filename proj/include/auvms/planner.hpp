#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "auvms/types.hpp"
#include "auvms/world.hpp"

namespace auvms {

/// Search parameters. Defaults reproduce the reference scenario settings.
/// The goal test runs after every extension, so K only describes the
/// nominal inner-batch size of the original loop layout and has no effect
/// on the result; max_total_iterations is the hard cap.
struct PlannerParams {
  int K = 50;
  Vector8d c_step = (Vector8d() << 0.1, 0.1, 0.1, 0.08, 0.05, 0.05, 0.05,
                     0.05).finished();
  Vector6d w_step =
      (Vector6d() << 0.2, 0.2, 0.2, 0.05, 0.05, 0.05).finished();
  double p_g = 0.5;
  double goal_threshold = 0.3;
  std::uint64_t seed = 1;
  int max_total_iterations = 3000;
};

/// Deterministic uniform source: mt19937_64 with doubles built from the
/// top 53 bits, so streams are reproducible across platforms. Every draw
/// is counted.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform01() {
    ++draws_;
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  std::uint64_t draws() const { return draws_; }

 private:
  std::mt19937_64 engine_;
  std::uint64_t draws_ = 0;
};

/// Search tree rooted at the start configuration. Parents always precede
/// children, and the world pose of each node is cached on insertion.
struct Tree {
  std::vector<ConfigState> nodes;
  std::vector<int> parents;  // -1 for the root
  std::vector<EefPose> eef_cache;

  int size() const { return static_cast<int>(nodes.size()); }
};

enum class PlanStatus { Found, NotFound };

struct PlanResult {
  PlanStatus status = PlanStatus::NotFound;
  std::vector<ConfigState> raw_path;  // start..goal node when Found
  Tree tree;
  int iterations = 0;
  double elapsed_s = 0.0;
  std::uint64_t rng_draws = 0;
  int singular_skips = 0;
};

/// Distance from a node's cached end-effector position to the goal point.
double distance_to_goal(const Tree& tree, int index, const Scenario& scenario);

/// Index of the node whose end effector is closest to the goal; ties go to
/// the lowest index.
int closest_node_to_goal(const Tree& tree, const Scenario& scenario);

/// Workspace extension toward the goal: straight-line direction with every
/// position axis displacement capped by w_step and by the remaining
/// distance. Orientation rows stay zero (the goal is a position ball).
Vector6d workspace_step(const EefPose& from, const Scenario& scenario,
                        const Vector6d& w_step);

/// Weighted C-space metric used for nearest-neighbor queries: unit weight
/// on positions, 0.5 on angles, shortest arc on yaw and q4.
double cspace_distance(const ConfigState& a, const ConfigState& b);

/// One Jacobian-guided extension from the node nearest the goal. Appends
/// at most one node; returns whether the tree grew. A singular Jacobian is
/// not fatal: the counter is bumped and the tree is left unchanged.
bool extend_to_goal(Tree& tree, const Scenario& scenario,
                    const PlannerParams& params,
                    int* singular_skips = nullptr);

/// One uniform random extension (classic RRT step limited per dimension by
/// c_step). Consumes exactly eight draws from rng.
bool extend_randomly(Tree& tree, const Scenario& scenario,
                     const PlannerParams& params, Rng& rng);

/// Jacobian-guided search: each iteration draws u in [0,1) and extends
/// randomly when u < p_g, toward the workspace goal otherwise. Throws
/// InvalidScenario if the start configuration is not collision-free.
PlanResult plan_rrtauvms(const Scenario& scenario, const PlannerParams& params);

/// Baseline: uniform C-space RRT with the workspace goal-ball test. The
/// branch draw is still consumed every iteration so the stream discipline
/// matches the guided planner.
PlanResult plan_rrt_baseline(const Scenario& scenario,
                             const PlannerParams& params);

const char* to_string(PlanStatus status);

}  // namespace auvms
