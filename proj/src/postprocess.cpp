#include "auvms/postprocess.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "auvms/errors.hpp"
#include "auvms/kinematics.hpp"

namespace auvms {

namespace {

Eigen::Vector3d eef_position_of(const ConfigState& config,
                                const Scenario& scenario) {
  const Eigen::Matrix3d rv = rotation_body_to_world({0.0, 0.0, config.yaw});
  return config.position +
         rv * arm_frame_transforms(config.joints, scenario.dh)[3].translation();
}

}  // namespace

SmoothedPath smooth_path(const std::vector<ConfigState>& raw,
                         const Scenario& scenario) {
  if (raw.empty()) throw InvalidPath("smooth_path: empty input path");

  SmoothedPath out;
  out.nodes.push_back(raw.front());
  out.raw_indices.push_back(0);

  std::size_t anchor = 0;
  while (anchor + 1 < raw.size()) {
    std::size_t next = 0;
    bool visible = false;
    for (std::size_t j = raw.size() - 1; j > anchor; --j) {
      if (edge_free(raw[anchor], raw[j], scenario, scenario.edge_resolution)) {
        next = j;
        visible = true;
        break;
      }
    }
    if (!visible) {
      throw InvalidPath("smooth_path: raw edge " + std::to_string(anchor) +
                        " -> " + std::to_string(anchor + 1) +
                        " is not collision-free");
    }
    out.nodes.push_back(raw[next]);
    out.raw_indices.push_back(static_cast<int>(next));
    anchor = next;
  }

  out.eef_positions.reserve(out.nodes.size());
  for (const ConfigState& node : out.nodes) {
    out.eef_positions.push_back(eef_position_of(node, scenario));
  }
  return out;
}

void NaturalCubicSpline::fit(const std::vector<double>& t,
                             const std::vector<double>& y) {
  const std::size_t n = t.size();
  t_ = t;
  a_ = y;
  b_.assign(n - 1, 0.0);
  c_.assign(n, 0.0);
  d_.assign(n - 1, 0.0);

  std::vector<double> h(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) h[i] = t[i + 1] - t[i];

  // Tridiagonal system for the curvatures, natural end conditions; solved
  // with the Thomas algorithm.
  std::vector<double> diag(n, 1.0), upper(n, 0.0), rhs(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    diag[i] = 2.0 * (h[i - 1] + h[i]);
    upper[i] = h[i];
    rhs[i] = 3.0 * ((a_[i + 1] - a_[i]) / h[i] - (a_[i] - a_[i - 1]) / h[i - 1]);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double lower = (i == 1) ? 0.0 : h[i - 1];
    const double w = lower / diag[i - 1];
    diag[i] -= w * upper[i - 1];
    rhs[i] -= w * rhs[i - 1];
  }
  for (std::size_t i = n - 1; i-- > 1;) {
    c_[i] = (rhs[i] - upper[i] * c_[i + 1]) / diag[i];
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    b_[i] = (a_[i + 1] - a_[i]) / h[i] - h[i] / 3.0 * (2.0 * c_[i] + c_[i + 1]);
    d_[i] = (c_[i + 1] - c_[i]) / (3.0 * h[i]);
  }
}

int NaturalCubicSpline::segment_of(double x) const {
  const auto it = std::upper_bound(t_.begin(), t_.end(), x);
  const auto idx = std::distance(t_.begin(), it) - 1;
  return static_cast<int>(
      std::clamp<std::ptrdiff_t>(idx, 0, static_cast<std::ptrdiff_t>(t_.size()) - 2));
}

double NaturalCubicSpline::eval(double x) const {
  x = std::clamp(x, t_.front(), t_.back());
  const auto i = static_cast<std::size_t>(segment_of(x));
  const double s = x - t_[i];
  return a_[i] + s * (b_[i] + s * (c_[i] + s * d_[i]));
}

double NaturalCubicSpline::deriv(double x) const {
  x = std::clamp(x, t_.front(), t_.back());
  const auto i = static_cast<std::size_t>(segment_of(x));
  const double s = x - t_[i];
  return b_[i] + s * (2.0 * c_[i] + 3.0 * s * d_[i]);
}

double NaturalCubicSpline::deriv2(double x) const {
  x = std::clamp(x, t_.front(), t_.back());
  const auto i = static_cast<std::size_t>(segment_of(x));
  const double s = x - t_[i];
  return 2.0 * c_[i] + 6.0 * s * d_[i];
}

Vector8d Trajectory::sample_coords(double t) const {
  Vector8d v;
  for (int k = 0; k < 8; ++k) {
    v[k] = splines_[static_cast<std::size_t>(k)].eval(t);
  }
  return v;
}

ConfigState Trajectory::sample(double t) const {
  const Vector8d v = sample_coords(t);
  ConfigState c;
  c.position = v.head<3>();
  c.yaw = wrap_angle(v[3]);
  c.joints = v.tail<4>();
  c.joints[3] = wrap_angle(c.joints[3]);
  return c;
}

namespace {

Trajectory fit_trajectory(const std::vector<ConfigState>& nodes,
                          const std::vector<Eigen::Vector3d>& eef_positions,
                          double speed) {
  const std::size_t n = nodes.size();
  if (n < 2) throw DegeneratePath("spline_trajectory: fewer than two nodes");
  if (!(speed > 0.0)) {
    throw DegeneratePath("spline_trajectory: speed must be positive");
  }

  double total = 0.0;
  std::vector<double> times(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double len = (eef_positions[i + 1] - eef_positions[i]).norm();
    total += len;
    // Segments whose end effector does not move (q4-only motion) get a tiny
    // positive duration so knot times stay strictly increasing.
    times[i + 1] = times[i] + std::max(len, 1e-9) / speed;
  }
  if (total < 1e-9) {
    throw DegeneratePath("spline_trajectory: total arc length below 1e-9");
  }

  // Unwrap yaw and q4 so the splines interpolate continuous signals.
  std::array<std::vector<double>, 8> coords;
  for (auto& col : coords) col.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector8d v = nodes[i].to_vector();
    for (int k = 0; k < 8; ++k) coords[static_cast<std::size_t>(k)][i] = v[k];
  }
  for (int k : {3, 7}) {
    auto& col = coords[static_cast<std::size_t>(k)];
    for (std::size_t i = 1; i < n; ++i) {
      col[i] = col[i - 1] + wrap_angle(col[i] - col[i - 1]);
    }
  }

  Trajectory traj;
  traj.times_ = times;
  for (int k = 0; k < 8; ++k) {
    traj.splines_[static_cast<std::size_t>(k)].fit(
        times, coords[static_cast<std::size_t>(k)]);
  }
  return traj;
}

}  // namespace

Trajectory spline_trajectory(const SmoothedPath& path, double speed) {
  return fit_trajectory(path.nodes, path.eef_positions, speed);
}

ValidatedTrajectory validated_trajectory(const SmoothedPath& path,
                                         const std::vector<ConfigState>& raw,
                                         const Scenario& scenario,
                                         double speed, int samples,
                                         int max_rounds) {
  struct Knot {
    ConfigState config;
    int raw_index;  // -1 for synthetic midpoints
    Eigen::Vector3d eef;
  };
  std::vector<Knot> knots;
  knots.reserve(path.nodes.size());
  for (std::size_t i = 0; i < path.nodes.size(); ++i) {
    knots.push_back({path.nodes[i],
                     i < path.raw_indices.size() ? path.raw_indices[i] : -1,
                     path.eef_positions[i]});
  }

  ValidatedTrajectory out;
  for (int round = 0;; ++round) {
    std::vector<ConfigState> nodes;
    std::vector<Eigen::Vector3d> eefs;
    for (const Knot& k : knots) {
      nodes.push_back(k.config);
      eefs.push_back(k.eef);
    }
    out.trajectory = fit_trajectory(nodes, eefs, speed);

    // Dense scan for limit or collision violations.
    double bad_t = -1.0;
    const double duration = out.trajectory.duration();
    for (int s = 0; s <= samples; ++s) {
      const double t = duration * s / samples;
      if (!config_free(out.trajectory.sample(t), scenario)) {
        bad_t = t;
        break;
      }
    }
    if (bad_t < 0.0) {
      out.clean = true;
      return out;
    }
    if (round >= max_rounds) return out;  // best effort, flagged unclean

    const auto& times = out.trajectory.knot_times();
    std::size_t seg = 0;
    while (seg + 2 < times.size() && times[seg + 1] <= bad_t) ++seg;

    Knot mid;
    const Knot& lo = knots[seg];
    const Knot& hi = knots[seg + 1];
    if (lo.raw_index >= 0 && hi.raw_index > lo.raw_index + 1) {
      const int raw_mid = (lo.raw_index + hi.raw_index) / 2;
      mid.config = raw[static_cast<std::size_t>(raw_mid)];
      mid.raw_index = raw_mid;
    } else {
      mid.config = interpolate_config(lo.config, hi.config, 0.5);
      mid.raw_index = -1;
    }
    mid.eef = eef_position_of(mid.config, scenario);
    knots.insert(knots.begin() + static_cast<std::ptrdiff_t>(seg) + 1, mid);
    ++out.inserted_knots;
  }
}

}  // namespace auvms
