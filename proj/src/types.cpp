#include "auvms/types.hpp"

namespace auvms {

Vector8d ConfigState::to_vector() const {
  Vector8d v;
  v << position.x(), position.y(), position.z(), yaw, joints[0], joints[1],
      joints[2], joints[3];
  return v;
}

ConfigState ConfigState::from_vector(const Vector8d& v) {
  ConfigState c;
  c.position = v.head<3>();
  c.yaw = wrap_angle(v[3]);
  c.joints = v.tail<4>();
  return c;
}

Vector8d ConfigVelocity::to_vector() const {
  Vector8d v;
  v << linear.x(), linear.y(), linear.z(), yaw_rate, joint_rates[0],
      joint_rates[1], joint_rates[2], joint_rates[3];
  return v;
}

ConfigVelocity ConfigVelocity::from_vector(const Vector8d& v) {
  ConfigVelocity d;
  d.linear = v.head<3>();
  d.yaw_rate = v[3];
  d.joint_rates = v.tail<4>();
  return d;
}

DHParams default_dh() {
  return DHParams{{
      {0.0, kPi / 2.0, 0.10, 0.0},
      {0.30, 0.0, 0.0, -kPi / 4.0},
      {0.30, kPi / 2.0, 0.0, 0.0},
      {0.0, 0.0, 0.15, 0.0},
  }};
}

}  // namespace auvms
