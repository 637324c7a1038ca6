#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "auvms/bench.hpp"
#include "auvms/errors.hpp"
#include "auvms/exports.hpp"
#include "auvms/run.hpp"
#include "auvms/scenario_io.hpp"

namespace {

constexpr int kExitFound = 0;
constexpr int kExitNotFound = 2;
constexpr int kExitInvalidInput = 3;

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<int> max_iterations;
  std::optional<double> p_g;
  std::optional<double> goal_threshold;
  std::optional<double> goal_radius;
  std::optional<double> edge_resolution;
  std::optional<double> collision_margin;
  std::vector<double> c_step;
  std::vector<double> w_step;
};

void apply_overrides(auvms::LoadedScenario& doc, const Overrides& o) {
  if (o.seed) doc.planner.seed = *o.seed;
  if (o.max_iterations) doc.planner.max_total_iterations = *o.max_iterations;
  if (o.p_g) doc.planner.p_g = *o.p_g;
  if (o.goal_radius) {
    doc.scenario.goal_radius = *o.goal_radius;
    if (!o.goal_threshold) doc.planner.goal_threshold = *o.goal_radius;
  }
  if (o.goal_threshold) doc.planner.goal_threshold = *o.goal_threshold;
  if (o.edge_resolution) doc.scenario.edge_resolution = *o.edge_resolution;
  if (o.collision_margin) doc.scenario.collision_margin = *o.collision_margin;
  if (!o.c_step.empty()) {
    for (int i = 0; i < 8; ++i) doc.planner.c_step[i] = o.c_step[static_cast<std::size_t>(i)];
  }
  if (!o.w_step.empty()) {
    for (int i = 0; i < 6; ++i) doc.planner.w_step[i] = o.w_step[static_cast<std::size_t>(i)];
  }
}

std::string default_out_root() {
  if (const char* env = std::getenv("AUVMS_OUT_DIR")) return env;
  return "auvms_out";
}

std::vector<std::uint64_t> expand_seeds(const std::vector<std::uint64_t>& seeds,
                                        const std::vector<std::uint64_t>& range) {
  std::vector<std::uint64_t> out = seeds;
  if (!range.empty()) {
    for (std::uint64_t s = range[0]; s <= range[1]; ++s) out.push_back(s);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Motion planning benchmark for an 8-dof underwater "
               "vehicle-manipulator system"};
  app.require_subcommand(1);

  std::string out_root = default_out_root();
  app.add_option("--out-dir", out_root,
                 "Output directory root (default: $AUVMS_OUT_DIR or ./auvms_out)");

  // ---- plan ----------------------------------------------------------
  auto* plan = app.add_subcommand("plan", "Run one planner on a scenario");
  std::string plan_scenario;
  std::string plan_algo = "rrtauvms";
  Overrides plan_ov;
  double traj_speed = 0.1, traj_hz = 50.0;
  plan->add_option("scenario", plan_scenario, "Scenario file")->required();
  plan->add_option("--algo", plan_algo, "Algorithm: rrtauvms or rrt");
  plan->add_option("--seed", plan_ov.seed, "RNG seed");
  plan->add_option("--max-iterations", plan_ov.max_iterations, "Iteration cap");
  plan->add_option("--p-g", plan_ov.p_g, "Random-branch probability");
  plan->add_option("--goal-threshold", plan_ov.goal_threshold, "Goal distance threshold (m)");
  plan->add_option("--goal-radius", plan_ov.goal_radius, "Goal ball radius (m)");
  plan->add_option("--edge-resolution", plan_ov.edge_resolution, "Edge check resolution (m)");
  plan->add_option("--collision-margin", plan_ov.collision_margin, "Extra obstacle clearance (m)");
  plan->add_option("--c-step", plan_ov.c_step, "C-space step (8 values)")->expected(8);
  plan->add_option("--w-step", plan_ov.w_step, "Workspace step (6 values)")->expected(6);
  plan->add_option("--speed", traj_speed, "Trajectory speed (m/s)");
  plan->add_option("--traj-hz", traj_hz, "Trajectory export sample rate (Hz)");

  // ---- bench ---------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Seed sweep over one or both algorithms");
  std::string bench_scenario;
  std::vector<std::string> bench_algos = {"rrt", "rrtauvms"};
  std::vector<std::uint64_t> bench_seeds;
  std::vector<std::uint64_t> bench_seed_range;
  int bench_repeats = 1;
  int bench_jobs = 1;
  Overrides bench_ov;
  bench->add_option("scenario", bench_scenario, "Scenario file")->required();
  bench->add_option("--algos", bench_algos, "Algorithms to run");
  bench->add_option("--seeds", bench_seeds, "Explicit seed list");
  bench->add_option("--seed-range", bench_seed_range, "Inclusive seed range: first last")
      ->expected(2);
  bench->add_option("--repeats", bench_repeats, "Repeats per row (elapsed = median)");
  bench->add_option("--jobs", bench_jobs, "Parallel rows");
  bench->add_option("--max-iterations", bench_ov.max_iterations, "Iteration cap");
  bench->add_option("--p-g", bench_ov.p_g, "Random-branch probability");
  bench->add_option("--goal-threshold", bench_ov.goal_threshold, "Goal distance threshold (m)");

  // ---- validate ------------------------------------------------------
  auto* validate = app.add_subcommand("validate", "Lint a scenario file");
  std::string validate_scenario_path;
  validate->add_option("scenario", validate_scenario_path, "Scenario file")->required();

  // ---- replay --------------------------------------------------------
  auto* replay = app.add_subcommand("replay", "Re-check an exported path against a scenario");
  std::string replay_scenario, replay_path_file;
  std::optional<double> replay_threshold;
  replay->add_option("scenario", replay_scenario, "Scenario file")->required();
  replay->add_option("path", replay_path_file, "path.csv to check")->required();
  replay->add_option("--goal-threshold", replay_threshold, "Goal distance threshold (m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInvalidInput;
  }

  namespace fs = std::filesystem;
  try {
    if (*plan) {
      auto doc = auvms::load_scenario(plan_scenario);
      apply_overrides(doc, plan_ov);
      const auvms::Algorithm algo = auvms::algorithm_from_string(plan_algo);
      const std::string dir =
          (fs::path(out_root) / doc.scenario.name /
           (std::string(auvms::to_string(algo)) + "_seed" +
            std::to_string(doc.planner.seed)))
              .string();
      auvms::RunOptions options;
      options.trajectory_speed = traj_speed;
      options.trajectory_hz = traj_hz;
      const auto artifacts = auvms::run_plan(doc, algo, dir, options);

      const auto& r = artifacts.result;
      std::cout << "scenario:   " << doc.scenario.name << "\n"
                << "algorithm:  " << auvms::to_string(algo) << "\n"
                << "seed:       " << doc.planner.seed << "\n"
                << "status:     " << auvms::to_string(r.status) << "\n"
                << "iterations: " << r.iterations << "\n"
                << "tree nodes: " << r.tree.size() << "\n"
                << "elapsed:    " << r.elapsed_s << " s\n";
      if (artifacts.smoothed) {
        std::cout << "raw path:   " << r.raw_path.size() << " nodes\n"
                  << "smoothed:   " << artifacts.smoothed->nodes.size()
                  << " nodes\n";
      }
      std::cout << "artifacts:  " << dir << "\n";
      return r.status == auvms::PlanStatus::Found ? kExitFound : kExitNotFound;
    }

    if (*bench) {
      auto doc = auvms::load_scenario(bench_scenario);
      apply_overrides(doc, bench_ov);
      const auto seeds = expand_seeds(bench_seeds, bench_seed_range);
      if (seeds.empty()) {
        std::cerr << "bench: no seeds given (use --seeds or --seed-range)\n";
        return kExitInvalidInput;
      }
      std::vector<auvms::Algorithm> algos;
      for (const auto& name : bench_algos) {
        algos.push_back(auvms::algorithm_from_string(name));
      }
      const auto report = auvms::run_bench(doc.scenario, doc.planner, algos,
                                           seeds, bench_repeats, bench_jobs);
      fs::create_directories(out_root);
      const std::string csv = auvms::render_bench_csv(report);
      const std::string table = auvms::render_bench_table(report);
      const std::string summary = auvms::render_bench_summary(report);
      const auto base = fs::path(out_root) / (doc.scenario.name + "_bench");
      auvms::write_text_file(base.string() + ".csv", csv);
      auvms::write_text_file(base.string() + "_table.csv", table);
      auvms::write_text_file(base.string() + "_summary.csv", summary);
      std::cout << csv << "\n" << table << "\n" << summary
                << "\nreport: " << base.string() << ".csv\n";
      return 0;
    }

    if (*validate) {
      const std::string text = auvms::read_text_file(validate_scenario_path);
      auto doc = auvms::parse_scenario(text, validate_scenario_path);
      std::cout << validate_scenario_path << ": OK (" << doc.scenario.name
                << ", " << doc.scenario.obstacles.size() << " obstacles)\n";
      return 0;
    }

    if (*replay) {
      const auto doc = auvms::load_scenario(replay_scenario);
      const auto path =
          auvms::parse_path_csv(auvms::read_text_file(replay_path_file));
      const double threshold =
          replay_threshold.value_or(doc.planner.goal_threshold);
      const auto report = auvms::replay_path(path, doc.scenario, threshold);
      if (report.ok) {
        std::cout << replay_path_file << ": OK (" << path.size()
                  << " nodes)\n";
        return 0;
      }
      std::cout << replay_path_file << ": INVALID: " << report.reason << "\n";
      return kExitNotFound;
    }
  } catch (const auvms::InvalidScenario& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const auvms::InvalidPath& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
  return kExitInvalidInput;
}
