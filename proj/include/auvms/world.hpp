#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <string>
#include <vector>

#include "auvms/redundancy.hpp"
#include "auvms/types.hpp"

namespace auvms {

struct SphereObstacle {
  Eigen::Vector3d center = Eigen::Vector3d::Zero();
  double radius = 0.0;
};

/// Body-attached probe points used by the collision predicates. The
/// end-effector tip is always checked; the vehicle hull samples and arm
/// link midpoints are opt-in.
struct CheckBodySet {
  std::vector<Eigen::Vector3d> vehicle_hull_points;  // body frame
  bool arm_link_midpoints = false;
};

struct Scenario {
  std::string name = "scenario";
  Eigen::AlignedBox3d bounds{Eigen::Vector3d(-1.0, -1.0, -1.0),
                             Eigen::Vector3d(6.0, 6.0, 6.0)};
  std::vector<SphereObstacle> obstacles;
  ConfigState start;
  Eigen::Vector3d goal_position = Eigen::Vector3d::Zero();
  double goal_radius = 0.3;
  DHParams dh = default_dh();
  JointLimits limits = default_joint_limits();
  Eigen::Vector4d vehicle_weights = Eigen::Vector4d::Constant(10.0);
  double collision_margin = 0.0;
  CheckBodySet check_bodies;
  double edge_resolution = 0.05;
};

/// True iff p keeps more than radius + collision_margin clearance from
/// every obstacle center.
bool point_free(const Eigen::Vector3d& p, const Scenario& scenario);

/// Earth-frame probe points of the configured CheckBodySet; the first
/// entry is always the end-effector tip.
std::vector<Eigen::Vector3d> probe_points(const ConfigState& config,
                                          const Scenario& scenario);

/// True iff the vehicle is inside the bounds box, every bounded joint is
/// strictly inside its limits, and every probe point is obstacle-free.
bool config_free(const ConfigState& config, const Scenario& scenario);

/// Wrap-aware linear interpolation between configurations (yaw and q4 take
/// the shortest arc).
ConfigState interpolate_config(const ConfigState& a, const ConfigState& b,
                               double t);

/// Checks the straight C-space segment between a and b by recursive
/// bisection until a conservative bound on the probe-point motion within
/// each sub-segment drops below resolution. Bisection makes the set of
/// checked configurations at a finer resolution a superset of a coarser
/// one, so shrinking the resolution can never flip a verdict to free.
bool edge_free(const ConfigState& a, const ConfigState& b,
               const Scenario& scenario, double resolution);

}  // namespace auvms
