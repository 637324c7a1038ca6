#pragma once

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <cstdint>

namespace auvms {

using Vector6d = Eigen::Matrix<double, 6, 1>;
using Vector8d = Eigen::Matrix<double, 8, 1>;

inline constexpr double kPi = 3.14159265358979323846;

/// Wraps an angle to (-pi, pi].
inline double wrap_angle(double a) {
  double w = std::remainder(a, 2.0 * kPi);
  if (w <= -kPi) w += 2.0 * kPi;
  return w;
}

/// ZYX Euler angles in radians. The pitch must stay strictly inside
/// (-pi/2, pi/2) wherever the rate transform is evaluated.
struct EulerAngles {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

/// The 8-dof configuration the planner samples: vehicle position and yaw in
/// the earth frame plus four arm joint angles. Yaw is kept in (-pi, pi];
/// q4 is a continuous-revolution joint and is wrapped the same way.
struct ConfigState {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double yaw = 0.0;
  Eigen::Vector4d joints = Eigen::Vector4d::Zero();

  Vector8d to_vector() const;
  static ConfigState from_vector(const Vector8d& v);
};

/// Configuration-space velocity: body-fixed linear velocity (surge, sway,
/// heave), yaw rate, and joint rates. Ordering matches ConfigState.
struct ConfigVelocity {
  Eigen::Vector3d linear = Eigen::Vector3d::Zero();
  double yaw_rate = 0.0;
  Eigen::Vector4d joint_rates = Eigen::Vector4d::Zero();

  Vector8d to_vector() const;
  static ConfigVelocity from_vector(const Vector8d& v);
};

/// End-effector pose expressed in the vehicle body frame.
struct ArmPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  EulerAngles orientation;
};

/// End-effector pose expressed in the earth-fixed frame.
struct EefPose {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  EulerAngles orientation;
};

/// Standard D-H row: link length a, twist alpha, offset d, and the home
/// angle theta0 added to the joint variable.
struct DHRow {
  double a = 0.0;
  double alpha = 0.0;
  double d = 0.0;
  double theta0 = 0.0;
};

using DHParams = std::array<DHRow, 4>;

/// Default arm geometry: an anthropomorphic 4R chain (shoulder yaw, two
/// pitch links, wrist roll). Joint 4 spins about the final approach axis,
/// so its angle never moves the tool point. The -pi/4 home offset on
/// joint 2 keeps the all-zero joint vector away from the wrist-alignment
/// singularity sin(theta2 + theta3) = 0.
DHParams default_dh();

/// 6x8 map from configuration velocity to end-effector twist in the earth
/// frame. Rows: linear velocity then angular velocity. Columns follow
/// ConfigVelocity order.
struct SystemJacobian {
  Eigen::Matrix<double, 6, 8> matrix;
};

}  // namespace auvms
