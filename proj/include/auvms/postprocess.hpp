#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

#include "auvms/types.hpp"
#include "auvms/world.hpp"

namespace auvms {

/// Subsequence of a raw path after greedy shortcutting. Endpoints are
/// preserved, every consecutive pair is a free edge, and the end-effector
/// position of each node is cached for time parameterization.
struct SmoothedPath {
  std::vector<ConfigState> nodes;
  std::vector<int> raw_indices;  // index of each node in the raw path
  std::vector<Eigen::Vector3d> eef_positions;
};

/// Greedy farthest-visible shortcutting: from the current anchor keep the
/// farthest raw node reachable by a free edge and advance there. Throws
/// InvalidPath when even an immediate raw edge is not free (the input was
/// not a valid tree path).
SmoothedPath smooth_path(const std::vector<ConfigState>& raw,
                         const Scenario& scenario);

/// Natural cubic spline through (t_i, y_i): zero second derivative at both
/// ends, C2 in the interior. Two points degenerate to a straight segment.
class NaturalCubicSpline {
 public:
  void fit(const std::vector<double>& t, const std::vector<double>& y);
  double eval(double x) const;
  double deriv(double x) const;
  double deriv2(double x) const;

 private:
  int segment_of(double x) const;
  std::vector<double> t_, a_, b_, c_, d_;
};

/// Time-parameterized C-space trajectory over the 8 configuration
/// coordinates. Yaw and q4 are unwrapped before fitting so the splines see
/// continuous data; sample() wraps them back.
class Trajectory {
 public:
  const std::vector<double>& knot_times() const { return times_; }
  double duration() const { return times_.back(); }

  /// Unwrapped coordinate vector at time t (clamped to the time range).
  Vector8d sample_coords(double t) const;
  /// Configuration at time t with yaw and q4 wrapped to (-pi, pi].
  ConfigState sample(double t) const;

  std::vector<double> times_;
  std::array<NaturalCubicSpline, 8> splines_;
};

/// Fits natural cubic splines over the smoothed path with knot times
/// proportional to the cumulative end-effector arc length divided by
/// speed. Throws DegeneratePath when the path has fewer than two nodes or
/// its total arc length is below 1e-9.
Trajectory spline_trajectory(const SmoothedPath& path, double speed);

struct ValidatedTrajectory {
  Trajectory trajectory;
  bool clean = false;       // dense sampling found no violation
  int inserted_knots = 0;
};

/// spline_trajectory plus post-hoc validation: the result is sampled
/// densely and checked against joint limits, bounds and obstacles. A
/// violating segment is subdivided (re-inserting the raw-path midpoint
/// when one exists, the straight-line midpoint otherwise) and the spline
/// refit, up to max_rounds times.
ValidatedTrajectory validated_trajectory(const SmoothedPath& path,
                                         const std::vector<ConfigState>& raw,
                                         const Scenario& scenario,
                                         double speed, int samples = 1000,
                                         int max_rounds = 32);

}  // namespace auvms
