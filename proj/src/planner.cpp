#include "auvms/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "auvms/errors.hpp"
#include "auvms/kinematics.hpp"
#include "auvms/redundancy.hpp"

namespace auvms {

namespace {

constexpr double kDuplicateTol = 1e-9;
// After this many consecutive failed goal extensions the same number of
// iterations is forced onto the random branch; a trapped greedy node would
// otherwise livelock the loop.
constexpr int kGoalStallLimit = 20;

void add_node(Tree& tree, const ConfigState& config, int parent,
              const EefPose& pose) {
  tree.nodes.push_back(config);
  tree.parents.push_back(parent);
  tree.eef_cache.push_back(pose);
}

}  // namespace

double distance_to_goal(const Tree& tree, int index,
                        const Scenario& scenario) {
  return (tree.eef_cache[static_cast<std::size_t>(index)].position -
          scenario.goal_position)
      .norm();
}

int closest_node_to_goal(const Tree& tree, const Scenario& scenario) {
  int best = 0;
  double best_dist = distance_to_goal(tree, 0, scenario);
  for (int i = 1; i < tree.size(); ++i) {
    const double d = distance_to_goal(tree, i, scenario);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

Vector6d workspace_step(const EefPose& from, const Scenario& scenario,
                        const Vector6d& w_step) {
  Vector6d dx = Vector6d::Zero();
  const Eigen::Vector3d d = scenario.goal_position - from.position;
  const double dist = d.norm();
  if (dist < 1e-12) return dx;
  const Eigen::Vector3d u = d / dist;
  double scale = dist;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(u[i]) > 0.0) scale = std::min(scale, w_step[i] / std::abs(u[i]));
  }
  dx.head<3>() = u * scale;
  return dx;
}

double cspace_distance(const ConfigState& a, const ConfigState& b) {
  double d2 = (a.position - b.position).squaredNorm();
  const double dyaw = wrap_angle(b.yaw - a.yaw);
  const double dq4 = wrap_angle(b.joints[3] - a.joints[3]);
  double ang2 = dyaw * dyaw + dq4 * dq4;
  for (int i = 0; i < 3; ++i) {
    const double dq = b.joints[i] - a.joints[i];
    ang2 += dq * dq;
  }
  return std::sqrt(d2 + 0.5 * ang2);
}

bool extend_to_goal(Tree& tree, const Scenario& scenario,
                    const PlannerParams& params, int* singular_skips) {
  const int nearest = closest_node_to_goal(tree, scenario);
  const ConfigState& from = tree.nodes[static_cast<std::size_t>(nearest)];
  const Vector6d dx = workspace_step(
      tree.eef_cache[static_cast<std::size_t>(nearest)], scenario,
      params.w_step);
  if (dx.norm() < 1e-12) return false;

  ConfigState candidate;
  try {
    const SystemJacobian j = system_jacobian(from, scenario.dh);
    const WeightMatrix w =
        system_weights(from.joints, scenario.limits, scenario.vehicle_weights);
    candidate = advance(from, resolve_velocity(j, w, dx));
  } catch (const SingularJacobian&) {
    if (singular_skips != nullptr) ++(*singular_skips);
    return false;
  }

  if (cspace_distance(candidate, from) < kDuplicateTol) return false;
  if (!config_free(candidate, scenario)) return false;
  EefPose pose;
  try {
    pose = eef_world_pose(candidate, scenario.dh);
  } catch (const SingularPitch&) {
    return false;  // pose not representable; skip this candidate
  }
  if (!edge_free(from, candidate, scenario, scenario.edge_resolution)) {
    return false;
  }
  add_node(tree, candidate, nearest, pose);
  return true;
}

namespace {

ConfigState sample_uniform(const Scenario& scenario, Rng& rng) {
  // Fixed draw discipline: 3 position + yaw + 4 joints = 8 draws.
  ConfigState s;
  for (int i = 0; i < 3; ++i) {
    s.position[i] = rng.uniform(scenario.bounds.min()[i], scenario.bounds.max()[i]);
  }
  s.yaw = rng.uniform(-kPi, kPi);
  for (int i = 0; i < 4; ++i) {
    const JointLimit& lim = scenario.limits[static_cast<std::size_t>(i)];
    s.joints[i] = lim.bounded ? rng.uniform(lim.min, lim.max)
                              : rng.uniform(-kPi, kPi);
  }
  return s;
}

int nearest_node(const Tree& tree, const ConfigState& sample) {
  int best = 0;
  double best_dist = cspace_distance(tree.nodes[0], sample);
  for (int i = 1; i < tree.size(); ++i) {
    const double d =
        cspace_distance(tree.nodes[static_cast<std::size_t>(i)], sample);
    if (d < best_dist) {
      best = i;
      best_dist = d;
    }
  }
  return best;
}

ConfigState step_toward(const ConfigState& from, const ConfigState& sample,
                        const Vector8d& c_step) {
  auto clamp_step = [](double delta, double cap) {
    return std::clamp(delta, -cap, cap);
  };
  ConfigState out;
  for (int i = 0; i < 3; ++i) {
    out.position[i] =
        from.position[i] +
        clamp_step(sample.position[i] - from.position[i], c_step[i]);
  }
  out.yaw =
      wrap_angle(from.yaw + clamp_step(wrap_angle(sample.yaw - from.yaw),
                                       c_step[3]));
  for (int i = 0; i < 3; ++i) {
    out.joints[i] =
        from.joints[i] +
        clamp_step(sample.joints[i] - from.joints[i], c_step[4 + i]);
  }
  out.joints[3] = wrap_angle(
      from.joints[3] +
      clamp_step(wrap_angle(sample.joints[3] - from.joints[3]), c_step[7]));
  return out;
}

}  // namespace

bool extend_randomly(Tree& tree, const Scenario& scenario,
                     const PlannerParams& params, Rng& rng) {
  const ConfigState sample = sample_uniform(scenario, rng);
  const int nearest = nearest_node(tree, sample);
  const ConfigState& from = tree.nodes[static_cast<std::size_t>(nearest)];
  const ConfigState candidate = step_toward(from, sample, params.c_step);

  if (cspace_distance(candidate, from) < kDuplicateTol) return false;
  if (!config_free(candidate, scenario)) return false;
  EefPose pose;
  try {
    pose = eef_world_pose(candidate, scenario.dh);
  } catch (const SingularPitch&) {
    return false;
  }
  if (!edge_free(from, candidate, scenario, scenario.edge_resolution)) {
    return false;
  }
  add_node(tree, candidate, nearest, pose);
  return true;
}

namespace {

PlanResult plan_common(const Scenario& scenario, const PlannerParams& params,
                       bool jacobian_guided) {
  if (!config_free(scenario.start, scenario)) {
    throw InvalidScenario("start configuration is not collision-free");
  }

  const auto t0 = std::chrono::steady_clock::now();
  PlanResult res;
  Rng rng(params.seed);

  EefPose start_pose;
  try {
    start_pose = eef_world_pose(scenario.start, scenario.dh);
  } catch (const SingularPitch&) {
    throw InvalidScenario("start end-effector pose is orientation-singular");
  }
  add_node(res.tree, scenario.start, -1, start_pose);

  int goal_node =
      distance_to_goal(res.tree, 0, scenario) < params.goal_threshold ? 0 : -1;
  int consecutive_goal_failures = 0;
  int forced_random = 0;

  while (goal_node < 0 && res.iterations < params.max_total_iterations) {
    ++res.iterations;
    const double u = rng.uniform01();
    const bool go_random = !jacobian_guided || forced_random > 0 || u < params.p_g;
    if (forced_random > 0) --forced_random;

    bool appended = false;
    if (go_random) {
      appended = extend_randomly(res.tree, scenario, params, rng);
    } else {
      appended =
          extend_to_goal(res.tree, scenario, params, &res.singular_skips);
      if (appended) {
        consecutive_goal_failures = 0;
      } else if (++consecutive_goal_failures >= kGoalStallLimit) {
        forced_random = kGoalStallLimit;
        consecutive_goal_failures = 0;
      }
    }

    if (appended) {
      const int last = res.tree.size() - 1;
      if (distance_to_goal(res.tree, last, scenario) < params.goal_threshold) {
        goal_node = last;
      }
    }
  }

  if (goal_node >= 0) {
    res.status = PlanStatus::Found;
    for (int i = goal_node; i >= 0;
         i = res.tree.parents[static_cast<std::size_t>(i)]) {
      res.raw_path.push_back(res.tree.nodes[static_cast<std::size_t>(i)]);
    }
    std::reverse(res.raw_path.begin(), res.raw_path.end());
  }
  res.rng_draws = rng.draws();
  res.elapsed_s = std::chrono::duration<double>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return res;
}

}  // namespace

PlanResult plan_rrtauvms(const Scenario& scenario,
                         const PlannerParams& params) {
  return plan_common(scenario, params, true);
}

PlanResult plan_rrt_baseline(const Scenario& scenario,
                             const PlannerParams& params) {
  return plan_common(scenario, params, false);
}

const char* to_string(PlanStatus status) {
  return status == PlanStatus::Found ? "found" : "not_found";
}

}  // namespace auvms
