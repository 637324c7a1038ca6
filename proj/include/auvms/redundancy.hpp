#pragma once

#include <Eigen/Dense>

#include <array>

#include "auvms/types.hpp"

namespace auvms {

/// Limit description for one joint. An unbounded joint (q4 by default)
/// contributes nothing to the limit cost and is never range-checked.
struct JointLimit {
  double min = 0.0;
  double max = 0.0;
  double c = 1.0;  // positive shaping constant
  bool bounded = true;
};

using JointLimits = std::array<JointLimit, 4>;

/// q1..q3 in [-2, 2] rad, q4 free-spinning.
JointLimits default_joint_limits();

/// Diagonal of the 8x8 weight matrix, ordered
/// [w_x, w_y, w_z, w_r, w1, w2, w3, w4].
struct WeightMatrix {
  Vector8d diagonal;
};

/// Barrier-style cost that grows without bound as any bounded joint
/// approaches a limit. Throws OutOfRange if a bounded joint is at or
/// beyond a limit.
double joint_limit_cost(const Eigen::Vector4d& joints,
                        const JointLimits& limits);

/// Partial derivatives of joint_limit_cost; zero for unbounded joints.
Eigen::Vector4d joint_limit_gradient(const Eigen::Vector4d& joints,
                                     const JointLimits& limits);

/// Per-joint weights 1 + |dH/dq_i| combined with fixed vehicle weights
/// [w_x, w_y, w_z, w_r].
WeightMatrix system_weights(const Eigen::Vector4d& joints,
                            const JointLimits& limits,
                            const Eigen::Vector4d& vehicle_weights);

/// Weighted right pseudo-inverse W^-1 J^T (J W^-1 J^T)^-1. Throws
/// SingularJacobian when the 6x6 core is numerically singular (condition
/// estimate above cond_cap or not positive definite).
Eigen::Matrix<double, 8, 6> weighted_pseudo_inverse(const SystemJacobian& j,
                                                    const WeightMatrix& w,
                                                    double cond_cap = 1e12);

/// Minimum-weighted-norm configuration velocity reproducing the workspace
/// velocity xdot: among all zeta with J zeta = xdot, minimizes zeta^T W zeta.
ConfigVelocity resolve_velocity(const SystemJacobian& j, const WeightMatrix& w,
                                const Vector6d& xdot, double cond_cap = 1e12);

}  // namespace auvms
