#include "auvms/exports.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "auvms/errors.hpp"
#include "auvms/kinematics.hpp"

namespace auvms {

namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

void append_row(std::string& out, const Vector8d& v) {
  for (int i = 0; i < 8; ++i) {
    if (i > 0) out += ',';
    append_double(out, v[i]);
  }
  out += '\n';
}

std::vector<double> split_doubles(const std::string& line, int line_no) {
  std::vector<double> vals;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      vals.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw InvalidPath("path table line " + std::to_string(line_no) +
                        ": cannot parse '" + cell + "'");
    }
  }
  return vals;
}

}  // namespace

std::string render_path_csv(const std::vector<ConfigState>& path) {
  std::string out = "# auvms-path/1\nx,y,z,yaw,q1,q2,q3,q4\n";
  for (const ConfigState& c : path) append_row(out, c.to_vector());
  return out;
}

std::vector<ConfigState> parse_path_csv(const std::string& text) {
  std::vector<ConfigState> path;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  bool header_seen = false;
  while (std::getline(ss, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      header_seen = true;  // column header
      continue;
    }
    const auto vals = split_doubles(line, line_no);
    if (vals.size() != 8) {
      throw InvalidPath("path table line " + std::to_string(line_no) +
                        ": expected 8 columns, got " +
                        std::to_string(vals.size()));
    }
    Vector8d v;
    for (int i = 0; i < 8; ++i) v[i] = vals[static_cast<std::size_t>(i)];
    ConfigState c;
    c.position = v.head<3>();
    c.yaw = v[3];  // stored pre-wrapped; keep bytes intact
    c.joints = v.tail<4>();
    path.push_back(c);
  }
  return path;
}

std::string render_tree_csv(const Tree& tree) {
  std::string out =
      "# auvms-tree/1\nindex,parent,x,y,z,yaw,q1,q2,q3,q4,eef_x,eef_y,eef_z\n";
  for (int i = 0; i < tree.size(); ++i) {
    const auto idx = static_cast<std::size_t>(i);
    out += std::to_string(i);
    out += ',';
    out += std::to_string(tree.parents[idx]);
    const Vector8d v = tree.nodes[idx].to_vector();
    for (int k = 0; k < 8; ++k) {
      out += ',';
      append_double(out, v[k]);
    }
    for (int k = 0; k < 3; ++k) {
      out += ',';
      append_double(out, tree.eef_cache[idx].position[k]);
    }
    out += '\n';
  }
  return out;
}

std::string render_trajectory_csv(const Trajectory& traj, const DHParams& dh,
                                  double sample_hz) {
  if (!(sample_hz > 0.0)) {
    throw std::invalid_argument("render_trajectory_csv: sample_hz must be positive");
  }
  std::string out =
      "# auvms-trajectory/1\nt,x,y,z,yaw,q1,q2,q3,q4,eef_x,eef_y,eef_z\n";
  const double duration = traj.duration();
  const int steps = std::max(1, static_cast<int>(std::ceil(duration * sample_hz)));
  for (int s = 0; s <= steps; ++s) {
    const double t = std::min(duration, s / sample_hz);
    const Vector8d v = traj.sample_coords(t);
    const ConfigState c = traj.sample(t);
    const Eigen::Matrix3d rv = rotation_body_to_world({0.0, 0.0, c.yaw});
    const Eigen::Vector3d eef =
        c.position + rv * arm_frame_transforms(c.joints, dh)[3].translation();
    append_double(out, t);
    for (int k = 0; k < 8; ++k) {
      out += ',';
      append_double(out, v[k]);
    }
    for (int k = 0; k < 3; ++k) {
      out += ',';
      append_double(out, eef[k]);
    }
    out += '\n';
  }
  return out;
}

std::string render_result_json(const PlanResult& result,
                               const std::string& scenario_name,
                               const std::string& algorithm,
                               std::uint64_t seed, int smoothed_nodes) {
  nlohmann::json j;
  j["format"] = "auvms-result/1";
  j["scenario"] = scenario_name;
  j["algorithm"] = algorithm;
  j["seed"] = seed;
  j["status"] = to_string(result.status);
  j["iterations"] = result.iterations;
  j["elapsed_s"] = result.elapsed_s;
  j["rng_draws"] = result.rng_draws;
  j["tree_nodes"] = result.tree.size();
  j["raw_path_nodes"] = result.raw_path.size();
  j["smoothed_nodes"] = smoothed_nodes;
  j["singular_skips"] = result.singular_skips;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  std::ostringstream oss;
  oss << in.rdbuf();
  return oss.str();
}

ReplayReport replay_path(const std::vector<ConfigState>& path,
                         const Scenario& scenario, double goal_threshold) {
  if (path.empty()) return {false, "path is empty"};

  const Vector8d d =
      (path.front().to_vector() - scenario.start.to_vector()).cwiseAbs();
  if (d.maxCoeff() > 1e-9) {
    return {false, "first node does not match the scenario start"};
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!config_free(path[i], scenario)) {
      return {false, "node " + std::to_string(i) + " is not collision-free"};
    }
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!edge_free(path[i], path[i + 1], scenario, scenario.edge_resolution)) {
      return {false, "edge " + std::to_string(i) + " -> " +
                         std::to_string(i + 1) + " is not collision-free"};
    }
  }
  const Eigen::Matrix3d rv =
      rotation_body_to_world({0.0, 0.0, path.back().yaw});
  const Eigen::Vector3d eef =
      path.back().position +
      rv * arm_frame_transforms(path.back().joints, scenario.dh)[3].translation();
  const double dist = (eef - scenario.goal_position).norm();
  if (dist >= goal_threshold) {
    return {false, "final end effector is " + std::to_string(dist) +
                       " m from the goal (threshold " +
                       std::to_string(goal_threshold) + ")"};
  }
  return {true, ""};
}

}  // namespace auvms
