#include "auvms/kinematics.hpp"

#include <cmath>

#include "auvms/errors.hpp"

namespace auvms {

Eigen::Matrix3d rotation_body_to_world(const EulerAngles& e) {
  const double sphi = std::sin(e.roll), cphi = std::cos(e.roll);
  const double sth = std::sin(e.pitch), cth = std::cos(e.pitch);
  const double spsi = std::sin(e.yaw), cpsi = std::cos(e.yaw);
  Eigen::Matrix3d r;
  r << cpsi * cth, -spsi * cphi + cpsi * sth * sphi,
      spsi * sphi + cpsi * sth * cphi,  //
      spsi * cth, cpsi * cphi + spsi * sth * sphi,
      -cpsi * sphi + spsi * sth * cphi,  //
      -sth, sphi * cth, cphi * cth;
  return r;
}

Eigen::Matrix3d euler_rate_transform(const EulerAngles& e, double tol) {
  const double cth = std::cos(e.pitch);
  if (std::abs(cth) <= tol) {
    throw SingularPitch("euler_rate_transform: pitch within tolerance of +-pi/2");
  }
  const double sphi = std::sin(e.roll), cphi = std::cos(e.roll);
  const double sth = std::sin(e.pitch);
  Eigen::Matrix3d j;
  j << 1.0, sphi * sth, cphi * sth,  //
      0.0, cphi * cth, -cth * sphi,  //
      0.0, sphi, cphi;
  return j / cth;
}

Eigen::Matrix3d skew(const Eigen::Vector3d& w) {
  Eigen::Matrix3d s;
  s << 0.0, -w.z(), w.y(),  //
      w.z(), 0.0, -w.x(),   //
      -w.y(), w.x(), 0.0;
  return s;
}

namespace {

Eigen::Isometry3d dh_transform(const DHRow& row, double q) {
  const double th = q + row.theta0;
  const double ct = std::cos(th), st = std::sin(th);
  const double ca = std::cos(row.alpha), sa = std::sin(row.alpha);
  Eigen::Isometry3d t;
  t.matrix() << ct, -st * ca, st * sa, row.a * ct,  //
      st, ct * ca, -ct * sa, row.a * st,            //
      0.0, sa, ca, row.d,                           //
      0.0, 0.0, 0.0, 1.0;
  return t;
}

}  // namespace

std::array<Eigen::Isometry3d, 4> arm_frame_transforms(
    const Eigen::Vector4d& joints, const DHParams& dh) {
  std::array<Eigen::Isometry3d, 4> out;
  Eigen::Isometry3d acc = Eigen::Isometry3d::Identity();
  for (int i = 0; i < 4; ++i) {
    acc = acc * dh_transform(dh[static_cast<std::size_t>(i)], joints[i]);
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

EulerAngles euler_from_rotation(const Eigen::Matrix3d& r, double tol) {
  const double cth = std::hypot(r(0, 0), r(1, 0));
  if (cth <= tol) {
    throw SingularPitch("euler_from_rotation: pitch within tolerance of +-pi/2");
  }
  EulerAngles e;
  e.pitch = std::atan2(-r(2, 0), cth);
  e.roll = std::atan2(r(2, 1), r(2, 2));
  e.yaw = std::atan2(r(1, 0), r(0, 0));
  return e;
}

ArmPose arm_forward_kinematics(const Eigen::Vector4d& joints,
                               const DHParams& dh) {
  const auto frames = arm_frame_transforms(joints, dh);
  ArmPose pose;
  pose.position = frames[3].translation();
  pose.orientation = euler_from_rotation(frames[3].rotation());
  return pose;
}

Eigen::Matrix<double, 6, 4> arm_jacobian(const Eigen::Vector4d& joints,
                                         const DHParams& dh) {
  const auto frames = arm_frame_transforms(joints, dh);
  const Eigen::Vector3d pe = frames[3].translation();
  Eigen::Matrix<double, 6, 4> j;
  for (int i = 0; i < 4; ++i) {
    // Revolute joint i rotates about the z axis of frame i-1.
    const Eigen::Vector3d z =
        (i == 0) ? Eigen::Vector3d::UnitZ()
                 : Eigen::Vector3d(frames[static_cast<std::size_t>(i - 1)]
                                       .rotation()
                                       .col(2));
    const Eigen::Vector3d p =
        (i == 0) ? Eigen::Vector3d::Zero()
                 : Eigen::Vector3d(
                       frames[static_cast<std::size_t>(i - 1)].translation());
    j.block<3, 1>(0, i) = z.cross(pe - p);
    j.block<3, 1>(3, i) = z;
  }
  return j;
}

EefPose eef_world_pose(const ConfigState& c, const DHParams& dh) {
  const Eigen::Matrix3d rv = rotation_body_to_world({0.0, 0.0, c.yaw});
  const auto frames = arm_frame_transforms(c.joints, dh);
  EefPose pose;
  pose.position = c.position + rv * frames[3].translation();
  pose.orientation = euler_from_rotation(rv * frames[3].rotation());
  return pose;
}

SystemJacobian system_jacobian(const ConfigState& c, const DHParams& dh) {
  const EulerAngles attitude{0.0, 0.0, c.yaw};
  const Eigen::Matrix3d jv1 = rotation_body_to_world(attitude);
  // Guarded even though zero roll/pitch can never trip it.
  const Eigen::Vector3d yaw_axis = euler_rate_transform(attitude).col(2);
  const auto frames = arm_frame_transforms(c.joints, dh);
  const Eigen::Vector3d eef_body = frames[3].translation();
  const Eigen::Matrix<double, 6, 4> jm = arm_jacobian(c.joints, dh);

  SystemJacobian j;
  j.matrix.setZero();
  j.matrix.block<3, 3>(0, 0) = jv1;
  j.matrix.block<3, 1>(0, 3) = -skew(jv1 * eef_body) * yaw_axis;
  j.matrix.block<3, 1>(3, 3) = yaw_axis;
  j.matrix.block<3, 4>(0, 4) = jv1 * jm.topRows<3>();
  j.matrix.block<3, 4>(3, 4) = jv1 * jm.bottomRows<3>();
  return j;
}

ConfigState advance(const ConfigState& c, const ConfigVelocity& d) {
  ConfigState out;
  out.position =
      c.position + rotation_body_to_world({0.0, 0.0, c.yaw}) * d.linear;
  out.yaw = wrap_angle(c.yaw + d.yaw_rate);
  out.joints = c.joints + d.joint_rates;
  out.joints[3] = wrap_angle(out.joints[3]);
  return out;
}

}  // namespace auvms
