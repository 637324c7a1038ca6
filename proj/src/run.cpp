#include "auvms/run.hpp"

#include <filesystem>

#include "auvms/exports.hpp"

namespace auvms {

RunArtifacts run_plan(const LoadedScenario& doc, Algorithm algorithm,
                      const std::string& output_dir,
                      const RunOptions& options) {
  RunArtifacts out;
  out.result = algorithm == Algorithm::RrtAuvms
                   ? plan_rrtauvms(doc.scenario, doc.planner)
                   : plan_rrt_baseline(doc.scenario, doc.planner);

  if (out.result.status == PlanStatus::Found) {
    out.smoothed = smooth_path(out.result.raw_path, doc.scenario);
    if (out.smoothed->nodes.size() >= 2) {  // a lone start node has no motion
      out.trajectory =
          validated_trajectory(*out.smoothed, out.result.raw_path,
                               doc.scenario, options.trajectory_speed);
    }
  }

  if (!output_dir.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(output_dir);
    const fs::path dir(output_dir);
    out.output_dir = output_dir;

    const int smoothed_nodes =
        out.smoothed ? static_cast<int>(out.smoothed->nodes.size()) : 0;
    write_text_file((dir / "result.json").string(),
                    render_result_json(out.result, doc.scenario.name,
                                       to_string(algorithm), doc.planner.seed,
                                       smoothed_nodes));
    write_text_file((dir / "tree.csv").string(), render_tree_csv(out.result.tree));
    if (out.result.status == PlanStatus::Found) {
      write_text_file((dir / "path.csv").string(),
                      render_path_csv(out.result.raw_path));
      write_text_file((dir / "smoothed.csv").string(),
                      render_path_csv(out.smoothed->nodes));
      if (out.trajectory) {
        write_text_file((dir / "trajectory.csv").string(),
                        render_trajectory_csv(out.trajectory->trajectory,
                                              doc.scenario.dh,
                                              options.trajectory_hz));
      }
    }
  }
  return out;
}

}  // namespace auvms
