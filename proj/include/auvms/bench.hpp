#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auvms/planner.hpp"
#include "auvms/world.hpp"

namespace auvms {

enum class Algorithm { RrtAuvms, RrtBaseline };

const char* to_string(Algorithm algo);
Algorithm algorithm_from_string(const std::string& name);

/// One (algorithm, seed) bench row. With repeats > 1 the elapsed time is
/// the median over the repeats; everything else is identical across
/// repeats by the determinism contract and is verified to be so.
struct BenchRow {
  std::string scenario;
  Algorithm algorithm = Algorithm::RrtAuvms;
  std::uint64_t seed = 0;
  PlanStatus status = PlanStatus::NotFound;
  double elapsed_s = 0.0;
  int iterations = 0;
  int tree_nodes = 0;
  int raw_nodes = 0;
  int smoothed_nodes = 0;
  std::uint64_t rng_draws = 0;
};

struct BenchSummary {
  std::string scenario;
  Algorithm algorithm = Algorithm::RrtAuvms;
  int found = 0;
  int runs = 0;
  double median_elapsed_s = 0.0;
  double median_iterations = 0.0;
  double median_tree_nodes = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;          // one per (algorithm, seed)
  std::vector<BenchSummary> summaries;  // one per algorithm
};

/// Runs every (algorithm, seed) pair independently (in parallel when jobs
/// > 1; rows are ordered by algorithm then seed regardless of scheduling).
/// NotFound rows are recorded, never fatal. Throws InvalidScenario only
/// when the scenario itself is unusable.
BenchReport run_bench(const Scenario& scenario, const PlannerParams& params,
                      const std::vector<Algorithm>& algorithms,
                      const std::vector<std::uint64_t>& seeds, int repeats = 1,
                      int jobs = 1);

/// Row table; deterministic except for the elapsed_s column.
std::string render_bench_csv(const BenchReport& report);

/// Per-algorithm medians; deterministic except for median_elapsed_s.
std::string render_bench_summary(const BenchReport& report);

/// Seed-by-seed comparison table, one time column per algorithm; cells of
/// unsuccessful runs read "not_found" in place of a time.
std::string render_bench_table(const BenchReport& report);

double median(std::vector<double> values);

}  // namespace auvms
