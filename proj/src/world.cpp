#include "auvms/world.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "auvms/kinematics.hpp"

namespace auvms {

bool point_free(const Eigen::Vector3d& p, const Scenario& scenario) {
  for (const SphereObstacle& obs : scenario.obstacles) {
    if ((p - obs.center).norm() <= obs.radius + scenario.collision_margin) {
      return false;
    }
  }
  return true;
}

std::vector<Eigen::Vector3d> probe_points(const ConfigState& config,
                                          const Scenario& scenario) {
  const Eigen::Matrix3d rv = rotation_body_to_world({0.0, 0.0, config.yaw});
  const auto frames = arm_frame_transforms(config.joints, scenario.dh);

  std::vector<Eigen::Vector3d> pts;
  pts.reserve(1 + scenario.check_bodies.vehicle_hull_points.size() +
              (scenario.check_bodies.arm_link_midpoints ? 4 : 0));
  pts.push_back(config.position + rv * frames[3].translation());
  for (const Eigen::Vector3d& h : scenario.check_bodies.vehicle_hull_points) {
    pts.push_back(config.position + rv * h);
  }
  if (scenario.check_bodies.arm_link_midpoints) {
    Eigen::Vector3d prev = Eigen::Vector3d::Zero();
    for (const auto& frame : frames) {
      pts.push_back(config.position +
                    rv * (0.5 * (prev + frame.translation())));
      prev = frame.translation();
    }
  }
  return pts;
}

bool config_free(const ConfigState& config, const Scenario& scenario) {
  if (!scenario.bounds.contains(config.position)) return false;
  for (int i = 0; i < 4; ++i) {
    const JointLimit& lim = scenario.limits[static_cast<std::size_t>(i)];
    if (lim.bounded &&
        (config.joints[i] <= lim.min || config.joints[i] >= lim.max)) {
      return false;
    }
  }
  for (const Eigen::Vector3d& p : probe_points(config, scenario)) {
    if (!point_free(p, scenario)) return false;
  }
  return true;
}

ConfigState interpolate_config(const ConfigState& a, const ConfigState& b,
                               double t) {
  ConfigState out;
  out.position = (1.0 - t) * a.position + t * b.position;
  out.yaw = wrap_angle(a.yaw + t * wrap_angle(b.yaw - a.yaw));
  for (int i = 0; i < 3; ++i) {
    out.joints[i] = (1.0 - t) * a.joints[i] + t * b.joints[i];
  }
  out.joints[3] =
      wrap_angle(a.joints[3] + t * wrap_angle(b.joints[3] - a.joints[3]));
  return out;
}

namespace {

// Upper bound on how far any probe point can move between two
// configurations: translation, plus arc bounds for yaw and each joint with
// the chain extent as lever arm.
double probe_motion_bound(const ConfigState& a, const ConfigState& b,
                          const Scenario& scenario) {
  double reach = 0.0;
  double lever[4];
  double distal = 0.0;
  for (int i = 3; i >= 0; --i) {
    const DHRow& row = scenario.dh[static_cast<std::size_t>(i)];
    distal += std::abs(row.a) + std::abs(row.d);
    lever[i] = distal;
  }
  reach = distal;
  for (const Eigen::Vector3d& h : scenario.check_bodies.vehicle_hull_points) {
    reach = std::max(reach, h.norm());
  }

  double bound = (b.position - a.position).norm();
  bound += reach * std::abs(wrap_angle(b.yaw - a.yaw));
  for (int i = 0; i < 3; ++i) {
    bound += lever[i] * std::abs(b.joints[i] - a.joints[i]);
  }
  bound += lever[3] * std::abs(wrap_angle(b.joints[3] - a.joints[3]));
  return bound;
}

}  // namespace

bool edge_free(const ConfigState& a, const ConfigState& b,
               const Scenario& scenario, double resolution) {
  if (!(resolution > 0.0)) {
    throw std::invalid_argument("edge_free: resolution must be positive");
  }
  if (!config_free(a, scenario) || !config_free(b, scenario)) return false;

  struct Segment {
    ConfigState a, b;
    double bound;
  };
  std::vector<Segment> stack;
  stack.push_back({a, b, probe_motion_bound(a, b, scenario)});
  while (!stack.empty()) {
    Segment seg = stack.back();
    stack.pop_back();
    if (seg.bound <= resolution) continue;
    const ConfigState mid = interpolate_config(seg.a, seg.b, 0.5);
    if (!config_free(mid, scenario)) return false;
    stack.push_back({seg.a, mid, 0.5 * seg.bound});
    stack.push_back({mid, seg.b, 0.5 * seg.bound});
  }
  return true;
}

}  // namespace auvms
