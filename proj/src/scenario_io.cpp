#include "auvms/scenario_io.hpp"

#include <json.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "auvms/errors.hpp"

namespace auvms {

namespace {

using nlohmann::json;

constexpr const char* kFormatTag = "auvms-scenario/1";

std::pair<int, int> line_col_of(const std::string& text, std::size_t byte) {
  int line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Eigen::Vector3d vec3(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 3) {
    throw InvalidScenario(field + ": expected an array of 3 numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
}

Eigen::Vector4d vec4(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 4) {
    throw InvalidScenario(field + ": expected an array of 4 numbers");
  }
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(),
          j[3].get<double>()};
}

template <int N>
Eigen::Matrix<double, N, 1> vecN(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != N) {
    throw InvalidScenario(field + ": expected an array of " +
                          std::to_string(N) + " numbers");
  }
  Eigen::Matrix<double, N, 1> v;
  for (int i = 0; i < N; ++i) v[i] = j[static_cast<std::size_t>(i)].get<double>();
  return v;
}

json to_json(const Eigen::Vector3d& v) { return json::array({v.x(), v.y(), v.z()}); }

LoadedScenario from_json(const json& j, const std::string& origin) {
  LoadedScenario doc;
  Scenario& sc = doc.scenario;

  if (j.contains("format") && j.at("format").get<std::string>() != kFormatTag) {
    throw InvalidScenario(origin + ": unsupported format tag '" +
                          j.at("format").get<std::string>() + "'");
  }
  if (j.contains("name")) sc.name = j.at("name").get<std::string>();

  if (j.contains("bounds")) {
    sc.bounds = Eigen::AlignedBox3d(vec3(j.at("bounds").at("min"), "bounds.min"),
                                    vec3(j.at("bounds").at("max"), "bounds.max"));
  }
  if (j.contains("obstacles")) {
    for (const auto& o : j.at("obstacles")) {
      sc.obstacles.push_back(
          {vec3(o.at("center"), "obstacles[].center"), o.at("radius").get<double>()});
    }
  }
  if (j.contains("start")) {
    const auto& s = j.at("start");
    sc.start.position = vec3(s.at("position"), "start.position");
    sc.start.yaw = wrap_angle(s.value("yaw", 0.0));
    if (s.contains("joints")) sc.start.joints = vec4(s.at("joints"), "start.joints");
  }
  if (j.contains("goal")) {
    sc.goal_position = vec3(j.at("goal").at("position"), "goal.position");
    sc.goal_radius = j.at("goal").value("radius", 0.3);
  }
  if (j.contains("dh")) {
    const auto& rows = j.at("dh");
    if (!rows.is_array() || rows.size() != 4) {
      throw InvalidScenario("dh: expected exactly 4 rows");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& r = rows[i];
      sc.dh[i] = {r.value("a", 0.0), r.value("alpha", 0.0), r.value("d", 0.0),
                  r.value("theta0", 0.0)};
    }
  }
  if (j.contains("joint_limits")) {
    const auto& rows = j.at("joint_limits");
    if (!rows.is_array() || rows.size() != 4) {
      throw InvalidScenario("joint_limits: expected exactly 4 rows");
    }
    for (std::size_t i = 0; i < 4; ++i) {
      const auto& r = rows[i];
      JointLimit lim;
      lim.bounded = r.value("bounded", true);
      lim.c = r.value("c", 1.0);
      if (lim.bounded) {
        lim.min = r.at("min").get<double>();
        lim.max = r.at("max").get<double>();
      }
      sc.limits[i] = lim;
    }
  }
  if (j.contains("vehicle_weights")) {
    sc.vehicle_weights = vec4(j.at("vehicle_weights"), "vehicle_weights");
  }
  sc.collision_margin = j.value("collision_margin", 0.0);
  sc.edge_resolution = j.value("edge_resolution", 0.05);
  if (j.contains("check_bodies")) {
    const auto& cb = j.at("check_bodies");
    if (cb.contains("vehicle_hull_points")) {
      for (const auto& p : cb.at("vehicle_hull_points")) {
        sc.check_bodies.vehicle_hull_points.push_back(
            vec3(p, "check_bodies.vehicle_hull_points[]"));
      }
    }
    sc.check_bodies.arm_link_midpoints = cb.value("arm_link_midpoints", false);
  }

  PlannerParams& pp = doc.planner;
  pp.goal_threshold = sc.goal_radius;
  if (j.contains("planner")) {
    const auto& p = j.at("planner");
    pp.K = p.value("k", pp.K);
    if (p.contains("c_step")) pp.c_step = vecN<8>(p.at("c_step"), "planner.c_step");
    if (p.contains("w_step")) pp.w_step = vecN<6>(p.at("w_step"), "planner.w_step");
    pp.p_g = p.value("p_g", pp.p_g);
    pp.goal_threshold = p.value("goal_threshold", pp.goal_threshold);
    pp.seed = p.value("seed", pp.seed);
    pp.max_total_iterations =
        p.value("max_total_iterations", pp.max_total_iterations);
  }
  return doc;
}

}  // namespace

std::vector<std::string> validate_scenario(const LoadedScenario& doc) {
  const Scenario& sc = doc.scenario;
  std::vector<std::string> issues;

  if ((sc.bounds.max() - sc.bounds.min()).minCoeff() <= 0.0) {
    issues.push_back("bounds: min must be strictly below max on every axis");
  }
  for (std::size_t i = 0; i < sc.obstacles.size(); ++i) {
    if (!(sc.obstacles[i].radius > 0.0)) {
      issues.push_back("obstacles[" + std::to_string(i) +
                       "].radius: must be positive");
    }
  }
  if (!(sc.goal_radius > 0.0)) issues.push_back("goal.radius: must be positive");
  for (std::size_t i = 0; i < 4; ++i) {
    const JointLimit& lim = sc.limits[i];
    if (!(lim.c > 0.0)) {
      issues.push_back("joint_limits[" + std::to_string(i) +
                       "].c: must be positive");
    }
    if (lim.bounded && !(lim.min < lim.max)) {
      issues.push_back("joint_limits[" + std::to_string(i) +
                       "]: min must be below max");
    }
  }
  if (!(sc.vehicle_weights.minCoeff() > 0.0)) {
    issues.push_back("vehicle_weights: all entries must be positive");
  }
  if (sc.collision_margin < 0.0) {
    issues.push_back("collision_margin: must be non-negative");
  }
  if (!(sc.edge_resolution > 0.0)) {
    issues.push_back("edge_resolution: must be positive");
  }
  for (const auto& row : sc.dh) {
    if (!std::isfinite(row.a) || !std::isfinite(row.alpha) ||
        !std::isfinite(row.d) || !std::isfinite(row.theta0)) {
      issues.push_back("dh: entries must be finite");
    }
  }

  const PlannerParams& pp = doc.planner;
  if (!(pp.c_step.minCoeff() > 0.0)) {
    issues.push_back("planner.c_step: all entries must be positive");
  }
  if (!(pp.w_step.minCoeff() > 0.0)) {
    issues.push_back("planner.w_step: all entries must be positive");
  }
  if (pp.p_g < 0.0 || pp.p_g > 1.0) {
    issues.push_back("planner.p_g: must lie in [0, 1]");
  }
  if (!(pp.goal_threshold > 0.0)) {
    issues.push_back("planner.goal_threshold: must be positive");
  }
  if (pp.max_total_iterations < 0) {
    issues.push_back("planner.max_total_iterations: must be non-negative");
  }

  // Start-state checks only make sense once the structural fields are sane.
  if (issues.empty()) {
    if (!sc.bounds.contains(sc.start.position)) {
      issues.push_back("start.position: outside the bounds box");
    } else if (!config_free(sc.start, sc)) {
      issues.push_back("start: configuration is not collision-free");
    }
  }
  return issues;
}

LoadedScenario parse_scenario(const std::string& json_text,
                              const std::string& origin) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_col_of(json_text, e.byte);
    throw InvalidScenario(origin + ":" + std::to_string(line) + ":" +
                          std::to_string(col) + ": " + e.what());
  }

  LoadedScenario doc;
  try {
    doc = from_json(j, origin);
  } catch (const json::exception& e) {
    throw InvalidScenario(origin + ": " + e.what());
  }

  const auto issues = validate_scenario(doc);
  if (!issues.empty()) {
    std::ostringstream oss;
    oss << origin << ": invalid scenario:";
    for (const auto& issue : issues) oss << "\n  - " << issue;
    throw InvalidScenario(oss.str());
  }
  return doc;
}

LoadedScenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidScenario(path + ": cannot open scenario file");
  std::ostringstream oss;
  oss << in.rdbuf();
  LoadedScenario doc = parse_scenario(oss.str(), path);
  if (doc.scenario.name == "scenario") {
    doc.scenario.name = std::filesystem::path(path).stem().string();
  }
  return doc;
}

std::string scenario_to_json(const LoadedScenario& doc) {
  const Scenario& sc = doc.scenario;
  json j;
  j["format"] = kFormatTag;
  j["name"] = sc.name;
  j["bounds"] = {{"min", to_json(sc.bounds.min())},
                 {"max", to_json(sc.bounds.max())}};
  j["obstacles"] = json::array();
  for (const auto& o : sc.obstacles) {
    j["obstacles"].push_back({{"center", to_json(o.center)}, {"radius", o.radius}});
  }
  j["start"] = {{"position", to_json(sc.start.position)},
                {"yaw", sc.start.yaw},
                {"joints", json::array({sc.start.joints[0], sc.start.joints[1],
                                        sc.start.joints[2], sc.start.joints[3]})}};
  j["goal"] = {{"position", to_json(sc.goal_position)}, {"radius", sc.goal_radius}};
  j["dh"] = json::array();
  for (const auto& row : sc.dh) {
    j["dh"].push_back({{"a", row.a}, {"alpha", row.alpha}, {"d", row.d},
                       {"theta0", row.theta0}});
  }
  j["joint_limits"] = json::array();
  for (const auto& lim : sc.limits) {
    json r = {{"bounded", lim.bounded}, {"c", lim.c}};
    if (lim.bounded) {
      r["min"] = lim.min;
      r["max"] = lim.max;
    }
    j["joint_limits"].push_back(r);
  }
  j["vehicle_weights"] =
      json::array({sc.vehicle_weights[0], sc.vehicle_weights[1],
                   sc.vehicle_weights[2], sc.vehicle_weights[3]});
  j["collision_margin"] = sc.collision_margin;
  j["edge_resolution"] = sc.edge_resolution;
  json hull = json::array();
  for (const auto& p : sc.check_bodies.vehicle_hull_points) hull.push_back(to_json(p));
  j["check_bodies"] = {{"vehicle_hull_points", hull},
                       {"arm_link_midpoints", sc.check_bodies.arm_link_midpoints}};

  const PlannerParams& pp = doc.planner;
  json cs = json::array(), ws = json::array();
  for (int i = 0; i < 8; ++i) cs.push_back(pp.c_step[i]);
  for (int i = 0; i < 6; ++i) ws.push_back(pp.w_step[i]);
  j["planner"] = {{"k", pp.K},
                  {"c_step", cs},
                  {"w_step", ws},
                  {"p_g", pp.p_g},
                  {"goal_threshold", pp.goal_threshold},
                  {"seed", pp.seed},
                  {"max_total_iterations", pp.max_total_iterations}};
  return j.dump(2) + "\n";
}

}  // namespace auvms
