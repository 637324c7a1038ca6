#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "auvms/errors.hpp"
#include "auvms/kinematics.hpp"
#include "auvms/planner.hpp"
#include "auvms/postprocess.hpp"
#include "auvms/scenario_io.hpp"
#include "oracles.hpp"

using namespace auvms;

namespace {

const std::string kScenarioDir = AUVMS_SCENARIO_DIR;

LoadedScenario paper_multi() {
  return load_scenario(kScenarioDir + "/paper_multi_obstacle.json");
}

ConfigState config_with_eef_at(const Eigen::Vector3d& target,
                               const Scenario& sc) {
  ConfigState c;
  c.joints = sc.start.joints;
  c.position = target - arm_frame_transforms(c.joints, sc.dh)[3].translation();
  return c;
}

SmoothedPath hand_smoothed(const std::vector<ConfigState>& nodes,
                           const Scenario& sc) {
  SmoothedPath p;
  p.nodes = nodes;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    p.raw_indices.push_back(static_cast<int>(i));
    const Eigen::Matrix3d rv = rotation_body_to_world({0, 0, nodes[i].yaw});
    p.eef_positions.push_back(
        nodes[i].position +
        rv * arm_frame_transforms(nodes[i].joints, sc.dh)[3].translation());
  }
  return p;
}

}  // namespace

TEST_CASE("smooth_path collapses a fully visible detour to its endpoints") {
  const LoadedScenario doc = paper_multi();
  const Scenario& sc = doc.scenario;
  std::vector<ConfigState> raw;
  // A zig-zag in an empty corner of the world: everything sees everything.
  for (double y : {0.0, 0.3, 0.1, 0.5, 0.8}) {
    raw.push_back(config_with_eef_at({-0.5, y, -0.5}, sc));
  }
  const SmoothedPath smoothed = smooth_path(raw, sc);
  CHECK(smoothed.nodes.size() == 2);
  CHECK((smoothed.nodes.front().to_vector() - raw.front().to_vector())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK((smoothed.nodes.back().to_vector() - raw.back().to_vector())
            .cwiseAbs()
            .maxCoeff() == 0.0);
  CHECK(smoothed.raw_indices == std::vector<int>{0, 4});
}

TEST_CASE("smooth_path keeps a 2-node path unchanged") {
  const LoadedScenario doc = paper_multi();
  std::vector<ConfigState> raw = {
      config_with_eef_at({0.0, 0.0, 0.0}, doc.scenario),
      config_with_eef_at({0.5, 0.0, 0.0}, doc.scenario)};
  const SmoothedPath smoothed = smooth_path(raw, doc.scenario);
  CHECK(smoothed.nodes.size() == 2);
}

TEST_CASE("smooth_path rejects a raw path with a colliding edge") {
  const LoadedScenario doc = paper_multi();
  // The middle edge drives the end effector straight through obstacle 1.
  std::vector<ConfigState> raw = {
      config_with_eef_at({1.0, 2.0, 3.0}, doc.scenario),
      config_with_eef_at({3.0, 2.0, 3.0}, doc.scenario)};
  CHECK_THROWS_AS(smooth_path(raw, doc.scenario), InvalidPath);
}

TEST_CASE("smoothing a planner path: shorter, same endpoints, fixed point") {
  const LoadedScenario doc = paper_multi();
  PlannerParams params = doc.planner;
  for (std::uint64_t seed : {30u, 31u, 32u}) {
    params.seed = seed;
    const PlanResult res = plan_rrtauvms(doc.scenario, params);
    REQUIRE(res.status == PlanStatus::Found);

    const SmoothedPath smoothed = smooth_path(res.raw_path, doc.scenario);
    CHECK(smoothed.nodes.size() <= res.raw_path.size());
    CHECK((smoothed.nodes.front().to_vector() -
           res.raw_path.front().to_vector())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    CHECK((smoothed.nodes.back().to_vector() - res.raw_path.back().to_vector())
              .cwiseAbs()
              .maxCoeff() == 0.0);
    for (std::size_t i = 0; i + 1 < smoothed.nodes.size(); ++i) {
      CHECK(edge_free(smoothed.nodes[i], smoothed.nodes[i + 1], doc.scenario,
                      doc.scenario.edge_resolution));
    }

    const SmoothedPath again = smooth_path(smoothed.nodes, doc.scenario);
    CHECK(again.nodes.size() == smoothed.nodes.size());
    for (std::size_t i = 0; i < again.nodes.size(); ++i) {
      CHECK((again.nodes[i].to_vector() - smoothed.nodes[i].to_vector())
                .cwiseAbs()
                .maxCoeff() == 0.0);
    }
  }
}

TEST_CASE("two-knot spline is the straight segment with zero end curvature") {
  const LoadedScenario doc = paper_multi();
  const SmoothedPath path = hand_smoothed(
      {config_with_eef_at({0, 0, 0}, doc.scenario),
       config_with_eef_at({1.0, 0.5, -0.25}, doc.scenario)},
      doc.scenario);
  const Trajectory traj = spline_trajectory(path, 0.1);
  REQUIRE(traj.knot_times().size() == 2);
  CHECK(traj.knot_times().front() == 0.0);

  const Vector8d start = traj.sample_coords(0.0);
  const Vector8d end = traj.sample_coords(traj.duration());
  CHECK((start - path.nodes.front().to_vector()).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK((end - path.nodes.back().to_vector()).cwiseAbs().maxCoeff() < 1e-12);

  // Linear in between: the midpoint is the average of the endpoints.
  const Vector8d mid = traj.sample_coords(0.5 * traj.duration());
  CHECK((mid - 0.5 * (start + end)).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("spline passes through every knot and is C2 at interior knots") {
  const LoadedScenario doc = paper_multi();
  PlannerParams params = doc.planner;
  params.seed = 30;
  const PlanResult res = plan_rrtauvms(doc.scenario, params);
  REQUIRE(res.status == PlanStatus::Found);
  // Use the raw path so there are plenty of interior knots.
  const SmoothedPath as_path = hand_smoothed(res.raw_path, doc.scenario);
  const Trajectory traj = spline_trajectory(as_path, 0.1);

  const auto& times = traj.knot_times();
  REQUIRE(times.size() == res.raw_path.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Vector8d v = traj.sample_coords(times[i]);
    Vector8d expected = res.raw_path[i].to_vector();
    // The spline works on unwrapped angles; compare modulo 2*pi.
    for (int k : {3, 7}) expected[k] = v[k] + wrap_angle(expected[k] - v[k]);
    CHECK((v - expected).cwiseAbs().maxCoeff() < 1e-10);
  }

  const double delta = 1e-6;
  for (std::size_t i = 1; i + 1 < times.size(); ++i) {
    const double t = times[i];
    for (int k = 0; k < 8; ++k) {
      const auto& s = traj.splines_[static_cast<std::size_t>(k)];
      // Value and first derivative continuity via finite differences.
      CHECK(std::abs(s.eval(t + delta) - s.eval(t - delta)) <
            2.5 * delta * (std::abs(s.deriv(t - delta)) + 1.0) + 1e-9);
      const double fd1_left = (s.eval(t) - s.eval(t - delta)) / delta;
      const double fd1_right = (s.eval(t + delta) - s.eval(t)) / delta;
      CHECK(std::abs(fd1_right - fd1_left) < 1e-3);
      // Curvature continuity: finite-difference second derivatives on
      // either side of the knot.
      const double fd2_left =
          (s.eval(t) - 2.0 * s.eval(t - delta) + s.eval(t - 2.0 * delta)) /
          (delta * delta);
      const double fd2_right =
          (s.eval(t + 2.0 * delta) - 2.0 * s.eval(t + delta) + s.eval(t)) /
          (delta * delta);
      CHECK(std::abs(fd2_right - fd2_left) < 1e-2);
      // Exact statement on the coefficients as well.
      CHECK(std::abs(s.deriv2(t - 1e-12) - s.deriv2(t + 1e-12)) < 1e-6);
    }
  }

  // Natural boundary: zero curvature at both ends.
  for (int k = 0; k < 8; ++k) {
    const auto& s = traj.splines_[static_cast<std::size_t>(k)];
    CHECK(std::abs(s.deriv2(times.front())) < 1e-12);
    CHECK(std::abs(s.deriv2(times.back())) < 1e-12);
  }
}

TEST_CASE("angular coordinates are unwrapped before fitting") {
  const LoadedScenario doc = paper_multi();
  std::vector<ConfigState> nodes;
  for (double x : {0.0, 0.4, 0.8, 1.2}) {
    ConfigState c = config_with_eef_at({x, -0.5, -0.5}, doc.scenario);
    nodes.push_back(c);
  }
  // q4 walks across the +-pi seam: 2.8 -> -2.8 is a 0.68 rad hop, not -5.6.
  nodes[0].joints[3] = 2.8;
  nodes[1].joints[3] = 3.1;
  nodes[2].joints[3] = -3.0;
  nodes[3].joints[3] = -2.8;
  const SmoothedPath path = hand_smoothed(nodes, doc.scenario);
  const Trajectory traj = spline_trajectory(path, 0.1);
  double prev = traj.sample_coords(0.0)[7];
  for (int s = 1; s <= 200; ++s) {
    const double now = traj.sample_coords(traj.duration() * s / 200.0)[7];
    CHECK(std::abs(now - prev) < 0.05);  // no 2*pi jumps between samples
    prev = now;
  }
  // The wrapped samples still hit the knot values.
  CHECK(std::abs(wrap_angle(traj.sample(traj.duration()).joints[3] -
                            (-2.8))) < 1e-9);
}

TEST_CASE("degenerate paths are rejected, q4-only segments are kept viable") {
  const LoadedScenario doc = paper_multi();
  const ConfigState a = config_with_eef_at({0, 0, 0}, doc.scenario);
  CHECK_THROWS_AS(spline_trajectory(hand_smoothed({a}, doc.scenario), 0.1),
                  DegeneratePath);
  CHECK_THROWS_AS(spline_trajectory(hand_smoothed({a, a}, doc.scenario), 0.1),
                  DegeneratePath);

  // Interior q4-only move: zero eef displacement must not collapse the
  // knot spacing.
  ConfigState b = a;
  b.joints[3] += 0.5;
  ConfigState c = b;
  c.position += Eigen::Vector3d(0.5, 0, 0);
  const Trajectory traj =
      spline_trajectory(hand_smoothed({a, b, c}, doc.scenario), 0.1);
  const auto& times = traj.knot_times();
  REQUIRE(times.size() == 3);
  CHECK(times[1] > times[0]);
  CHECK(times[2] > times[1]);
}

TEST_CASE("validated_trajectory pulls spline overshoot back inside limits") {
  const LoadedScenario doc = paper_multi();
  const Scenario& sc = doc.scenario;
  // Two consecutive knots close to q1's upper limit with a fast rise
  // before them: the natural cubic overshoots past the limit in between.
  std::vector<ConfigState> nodes;
  const double q1s[4] = {0.0, 1.99, 1.99, 0.0};
  for (int i = 0; i < 4; ++i) {
    ConfigState c;
    c.position = Eigen::Vector3d(-0.5 + 0.4 * i, -0.5, -0.5);
    c.joints = Eigen::Vector4d(q1s[i], 0.0, 0.0, kPi);
    nodes.push_back(c);
  }
  const SmoothedPath path = hand_smoothed(nodes, sc);

  const Trajectory plain = spline_trajectory(path, 0.1);
  double worst = 0.0;
  for (int s = 0; s <= 1000; ++s) {
    worst = std::max(worst,
                     plain.sample_coords(plain.duration() * s / 1000.0)[4]);
  }
  REQUIRE(worst > sc.limits[0].max);  // the raw spline does overshoot

  const ValidatedTrajectory fixed =
      validated_trajectory(path, nodes, sc, 0.1);
  CHECK(fixed.clean);
  CHECK(fixed.inserted_knots > 0);
  for (int s = 0; s <= 1000; ++s) {
    const double t = fixed.trajectory.duration() * s / 1000.0;
    const ConfigState state = fixed.trajectory.sample(t);
    CHECK(state.joints[0] < sc.limits[0].max);
    CHECK(state.joints[0] > sc.limits[0].min);
  }
}

TEST_CASE("validated_trajectory re-inserts a skipped raw node when one exists") {
  const LoadedScenario doc = paper_multi();
  const Scenario& sc = doc.scenario;
  // Raw detour whose middle node was shortcut away; the spline bulge over
  // the gapped segment breaches q1's limit, so the validator should bring
  // the raw midpoint (q1 = 1.7) back instead of inventing a knot.
  std::vector<ConfigState> raw;
  const double q1s[5] = {0.0, 1.99, 1.7, 1.99, 0.0};
  for (int i = 0; i < 5; ++i) {
    ConfigState c;
    c.position = Eigen::Vector3d(-0.5 + 0.4 * i, -0.5, -0.5);
    c.joints = Eigen::Vector4d(q1s[i], 0.0, 0.0, kPi);
    raw.push_back(c);
  }
  SmoothedPath path = hand_smoothed({raw[0], raw[1], raw[3], raw[4]}, sc);
  path.raw_indices = {0, 1, 3, 4};

  const Trajectory plain = spline_trajectory(path, 0.1);
  double worst = 0.0;
  for (int s = 0; s <= 1000; ++s) {
    worst = std::max(worst,
                     plain.sample_coords(plain.duration() * s / 1000.0)[4]);
  }
  REQUIRE(worst > sc.limits[0].max);

  const ValidatedTrajectory fixed = validated_trajectory(path, raw, sc, 0.1);
  CHECK(fixed.clean);
  CHECK(fixed.inserted_knots > 0);
  bool raw_midpoint_present = false;
  for (double t : fixed.trajectory.knot_times()) {
    if (std::abs(fixed.trajectory.sample_coords(t)[4] - 1.7) < 1e-9) {
      raw_midpoint_present = true;
    }
  }
  CHECK(raw_midpoint_present);
}

TEST_CASE("validated_trajectory on planner output stays clean") {
  const LoadedScenario doc = paper_multi();
  PlannerParams params = doc.planner;
  params.seed = 42;
  const PlanResult res = plan_rrtauvms(doc.scenario, params);
  REQUIRE(res.status == PlanStatus::Found);
  const SmoothedPath smoothed = smooth_path(res.raw_path, doc.scenario);
  const ValidatedTrajectory traj =
      validated_trajectory(smoothed, res.raw_path, doc.scenario, 0.1);
  CHECK(traj.clean);
  for (int s = 0; s <= 1000; ++s) {
    const double t = traj.trajectory.duration() * s / 1000.0;
    CHECK(config_free(traj.trajectory.sample(t), doc.scenario));
  }
}
