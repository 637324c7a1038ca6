#include "auvms/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <future>
#include <stdexcept>

#include "auvms/errors.hpp"
#include "auvms/postprocess.hpp"

namespace auvms {

const char* to_string(Algorithm algo) {
  return algo == Algorithm::RrtAuvms ? "rrtauvms" : "rrt";
}

Algorithm algorithm_from_string(const std::string& name) {
  if (name == "rrtauvms") return Algorithm::RrtAuvms;
  if (name == "rrt") return Algorithm::RrtBaseline;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected rrtauvms or rrt)");
}

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2]
                    : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

namespace {

BenchRow run_one(const Scenario& scenario, PlannerParams params,
                 Algorithm algo, std::uint64_t seed, int repeats) {
  params.seed = seed;
  BenchRow row;
  row.scenario = scenario.name;
  row.algorithm = algo;
  row.seed = seed;

  std::vector<double> elapsed;
  for (int r = 0; r < repeats; ++r) {
    const PlanResult result = algo == Algorithm::RrtAuvms
                                  ? plan_rrtauvms(scenario, params)
                                  : plan_rrt_baseline(scenario, params);
    elapsed.push_back(result.elapsed_s);
    if (r == 0) {
      row.status = result.status;
      row.iterations = result.iterations;
      row.tree_nodes = result.tree.size();
      row.raw_nodes = static_cast<int>(result.raw_path.size());
      row.rng_draws = result.rng_draws;
      if (result.status == PlanStatus::Found) {
        row.smoothed_nodes = static_cast<int>(
            smooth_path(result.raw_path, scenario).nodes.size());
      }
    } else if (result.status != row.status ||
               result.iterations != row.iterations ||
               result.rng_draws != row.rng_draws) {
      throw std::logic_error("bench: repeat diverged for seed " +
                             std::to_string(seed));
    }
  }
  row.elapsed_s = median(elapsed);
  return row;
}

}  // namespace

BenchReport run_bench(const Scenario& scenario, const PlannerParams& params,
                      const std::vector<Algorithm>& algorithms,
                      const std::vector<std::uint64_t>& seeds, int repeats,
                      int jobs) {
  if (seeds.empty()) throw std::invalid_argument("run_bench: no seeds given");
  if (repeats < 1) throw std::invalid_argument("run_bench: repeats must be >= 1");

  struct Task {
    Algorithm algo;
    std::uint64_t seed;
  };
  std::vector<Task> tasks;
  for (Algorithm algo : algorithms) {
    for (std::uint64_t seed : seeds) tasks.push_back({algo, seed});
  }

  BenchReport report;
  report.rows.resize(tasks.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      report.rows[i] =
          run_one(scenario, params, tasks[i].algo, tasks[i].seed, repeats);
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t i = next.fetch_add(1); i < tasks.size();
           i = next.fetch_add(1)) {
        report.rows[i] =
            run_one(scenario, params, tasks[i].algo, tasks[i].seed, repeats);
      }
    };
    std::vector<std::future<void>> pool;
    const int n = std::min<int>(jobs, static_cast<int>(tasks.size()));
    for (int i = 0; i < n; ++i) {
      pool.push_back(std::async(std::launch::async, worker));
    }
    for (auto& f : pool) f.get();
  }

  for (Algorithm algo : algorithms) {
    BenchSummary s;
    s.scenario = scenario.name;
    s.algorithm = algo;
    std::vector<double> elapsed, iters, nodes;
    for (const BenchRow& row : report.rows) {
      if (row.algorithm != algo) continue;
      ++s.runs;
      if (row.status == PlanStatus::Found) ++s.found;
      elapsed.push_back(row.elapsed_s);
      iters.push_back(row.iterations);
      nodes.push_back(row.tree_nodes);
    }
    s.median_elapsed_s = median(elapsed);
    s.median_iterations = median(iters);
    s.median_tree_nodes = median(nodes);
    report.summaries.push_back(s);
  }
  return report;
}

namespace {

void append_time(std::string& out, double seconds) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", seconds);
  out += buf;
}

}  // namespace

std::string render_bench_csv(const BenchReport& report) {
  std::string out =
      "# auvms-bench/1\n"
      "scenario,algorithm,seed,status,elapsed_s,iterations,tree_nodes,"
      "raw_nodes,smoothed_nodes,rng_draws\n";
  for (const BenchRow& r : report.rows) {
    out += r.scenario;
    out += ',';
    out += to_string(r.algorithm);
    out += ',';
    out += std::to_string(r.seed);
    out += ',';
    out += to_string(r.status);
    out += ',';
    append_time(out, r.elapsed_s);
    out += ',';
    out += std::to_string(r.iterations);
    out += ',';
    out += std::to_string(r.tree_nodes);
    out += ',';
    out += std::to_string(r.raw_nodes);
    out += ',';
    out += std::to_string(r.smoothed_nodes);
    out += ',';
    out += std::to_string(r.rng_draws);
    out += '\n';
  }
  return out;
}

std::string render_bench_table(const BenchReport& report) {
  std::vector<Algorithm> algos;
  std::vector<std::uint64_t> seeds;
  for (const BenchRow& r : report.rows) {
    if (std::find(algos.begin(), algos.end(), r.algorithm) == algos.end()) {
      algos.push_back(r.algorithm);
    }
    if (std::find(seeds.begin(), seeds.end(), r.seed) == seeds.end()) {
      seeds.push_back(r.seed);
    }
  }

  std::string out = "# auvms-bench-table/1\nseed";
  for (Algorithm algo : algos) {
    out += ',';
    out += to_string(algo);
    out += "_time_s";
  }
  out += '\n';
  for (std::uint64_t seed : seeds) {
    out += std::to_string(seed);
    for (Algorithm algo : algos) {
      out += ',';
      bool written = false;
      for (const BenchRow& r : report.rows) {
        if (r.algorithm != algo || r.seed != seed) continue;
        if (r.status == PlanStatus::Found) {
          append_time(out, r.elapsed_s);
        } else {
          out += "not_found";
        }
        written = true;
        break;
      }
      if (!written) out += "n/a";
    }
    out += '\n';
  }
  return out;
}

std::string render_bench_summary(const BenchReport& report) {
  std::string out =
      "# auvms-bench-summary/1\n"
      "scenario,algorithm,found,runs,median_elapsed_s,median_iterations,"
      "median_tree_nodes\n";
  char buf[64];
  for (const BenchSummary& s : report.summaries) {
    out += s.scenario;
    out += ',';
    out += to_string(s.algorithm);
    out += ',';
    out += std::to_string(s.found);
    out += ',';
    out += std::to_string(s.runs);
    out += ',';
    append_time(out, s.median_elapsed_s);
    std::snprintf(buf, sizeof(buf), ",%.1f,%.1f", s.median_iterations,
                  s.median_tree_nodes);
    out += buf;
    out += '\n';
  }
  return out;
}

}  // namespace auvms
