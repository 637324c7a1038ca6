#pragma once

#include <Eigen/Dense>
#include <Eigen/Geometry>

#include <array>

#include "auvms/types.hpp"

namespace auvms {

/// Rotation taking body-frame vectors into the earth frame (ZYX Euler).
Eigen::Matrix3d rotation_body_to_world(const EulerAngles& angles);

/// Maps body-fixed angular rates to ZYX Euler angle rates.
/// Throws SingularPitch when |cos(pitch)| <= tol (gimbal lock).
Eigen::Matrix3d euler_rate_transform(const EulerAngles& angles,
                                     double tol = 1e-6);

/// Skew-symmetric cross-product matrix: skew(w) * v == w x v.
Eigen::Matrix3d skew(const Eigen::Vector3d& omega);

/// Cumulative transforms base -> frame i, i = 1..4, using the standard D-H
/// convention Rz(theta) Tz(d) Tx(a) Rx(alpha) per joint. The arm base frame
/// coincides with the vehicle body frame, so element 3 is the body-frame
/// end-effector transform.
std::array<Eigen::Isometry3d, 4> arm_frame_transforms(
    const Eigen::Vector4d& joints, const DHParams& dh);

/// End-effector pose in the body frame. Throws SingularPitch when the
/// extracted Euler pitch is within tolerance of +-pi/2.
ArmPose arm_forward_kinematics(const Eigen::Vector4d& joints,
                               const DHParams& dh);

/// Geometric Jacobian [J_mp; J_mo] mapping joint rates to the body-frame
/// end-effector twist.
Eigen::Matrix<double, 6, 4> arm_jacobian(const Eigen::Vector4d& joints,
                                         const DHParams& dh);

/// End-effector pose in the earth frame for a full configuration. Vehicle
/// roll and pitch are identically zero.
EefPose eef_world_pose(const ConfigState& config, const DHParams& dh);

/// Whole-system 6x8 Jacobian at a configuration. Column order matches
/// ConfigVelocity: body-frame vehicle linear velocity, yaw rate, joint
/// rates. The angular rows are earth-frame angular velocity, which is what
/// finite differences of the world pose reproduce.
SystemJacobian system_jacobian(const ConfigState& config, const DHParams& dh);

/// Advances a configuration by a velocity applied over unit time. The
/// linear part is body-fixed and gets rotated into the earth frame before
/// it is added; yaw and q4 wrap to (-pi, pi].
ConfigState advance(const ConfigState& config, const ConfigVelocity& delta);

/// ZYX Euler extraction. Throws SingularPitch near pitch +-pi/2.
EulerAngles euler_from_rotation(const Eigen::Matrix3d& r, double tol = 1e-6);

}  // namespace auvms
