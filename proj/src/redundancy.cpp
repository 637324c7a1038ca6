#include "auvms/redundancy.hpp"

#include <cmath>
#include <string>

#include "auvms/errors.hpp"

namespace auvms {

JointLimits default_joint_limits() {
  JointLimits limits;
  for (int i = 0; i < 3; ++i) {
    limits[static_cast<std::size_t>(i)] = {-2.0, 2.0, 1.0, true};
  }
  limits[3] = {0.0, 0.0, 1.0, false};
  return limits;
}

namespace {

void check_inside(const JointLimit& lim, double q, int i) {
  if (q >= lim.max || q <= lim.min) {
    throw OutOfRange("joint " + std::to_string(i + 1) +
                     " at or beyond its limit: q=" + std::to_string(q));
  }
}

}  // namespace

double joint_limit_cost(const Eigen::Vector4d& joints,
                        const JointLimits& limits) {
  double h = 0.0;
  for (int i = 0; i < 4; ++i) {
    const JointLimit& lim = limits[static_cast<std::size_t>(i)];
    if (!lim.bounded) continue;
    check_inside(lim, joints[i], i);
    const double above = lim.max - joints[i];
    const double below = joints[i] - lim.min;
    h += (lim.max - lim.min) / (lim.c * above * below);
  }
  return h;
}

Eigen::Vector4d joint_limit_gradient(const Eigen::Vector4d& joints,
                                     const JointLimits& limits) {
  Eigen::Vector4d g = Eigen::Vector4d::Zero();
  for (int i = 0; i < 4; ++i) {
    const JointLimit& lim = limits[static_cast<std::size_t>(i)];
    if (!lim.bounded) continue;
    check_inside(lim, joints[i], i);
    const double above = lim.max - joints[i];
    const double below = joints[i] - lim.min;
    g[i] = (lim.max - lim.min) * (2.0 * joints[i] - lim.max - lim.min) /
           (lim.c * above * above * below * below);
  }
  return g;
}

WeightMatrix system_weights(const Eigen::Vector4d& joints,
                            const JointLimits& limits,
                            const Eigen::Vector4d& vehicle_weights) {
  const Eigen::Vector4d g = joint_limit_gradient(joints, limits);
  WeightMatrix w;
  w.diagonal.head<4>() = vehicle_weights;
  w.diagonal.tail<4>() = Eigen::Vector4d::Ones() + g.cwiseAbs();
  return w;
}

namespace {

// Factorization of the 6x6 core J W^-1 J^T with a singularity check based
// on the eigenvalue spread.
Eigen::LDLT<Eigen::Matrix<double, 6, 6>> core_factorization(
    const Eigen::Matrix<double, 6, 8>& jw,
    const Eigen::Matrix<double, 6, 8>& j, double cond_cap) {
  const Eigen::Matrix<double, 6, 6> core = jw * j.transpose();
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<double, 6, 6>> es(core);
  const double lmin = es.eigenvalues().minCoeff();
  const double lmax = es.eigenvalues().maxCoeff();
  if (!(lmin > 0.0) || lmax > cond_cap * lmin) {
    throw SingularJacobian("J W^-1 J^T numerically singular (cond estimate " +
                           std::to_string(lmin > 0.0 ? lmax / lmin : -1.0) +
                           ")");
  }
  return core.ldlt();
}

}  // namespace

Eigen::Matrix<double, 8, 6> weighted_pseudo_inverse(const SystemJacobian& j,
                                                    const WeightMatrix& w,
                                                    double cond_cap) {
  const Vector8d winv = w.diagonal.cwiseInverse();
  const Eigen::Matrix<double, 6, 8> jw = j.matrix * winv.asDiagonal();
  const auto ldlt = core_factorization(jw, j.matrix, cond_cap);
  // W^-1 J^T core^-1 == (core^-1 J W^-1)^T: core and W are symmetric.
  return ldlt.solve(jw).transpose();
}

ConfigVelocity resolve_velocity(const SystemJacobian& j, const WeightMatrix& w,
                                const Vector6d& xdot, double cond_cap) {
  const Vector8d winv = w.diagonal.cwiseInverse();
  const Eigen::Matrix<double, 6, 8> jw = j.matrix * winv.asDiagonal();
  const auto ldlt = core_factorization(jw, j.matrix, cond_cap);
  const Vector8d zeta = jw.transpose() * ldlt.solve(xdot);
  return ConfigVelocity::from_vector(zeta);
}

}  // namespace auvms
