#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

namespace fs = std::filesystem;

const std::string kCli = AUVMS_CLI_PATH;
const std::string kScenarioDir = AUVMS_SCENARIO_DIR;
const fs::path kWorkDir = fs::temp_directory_path() / "auvms_cli_test";

int run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

std::string out_dir() { return (kWorkDir / "out").string(); }

struct WorkspaceGuard {
  WorkspaceGuard() {
    fs::remove_all(kWorkDir);
    fs::create_directories(kWorkDir);
  }
};
const WorkspaceGuard guard;

}  // namespace

TEST_CASE("plan exits 0 on success and writes the artifact set") {
  const int code = run("--out-dir " + out_dir() + " plan " + kScenarioDir +
                       "/paper_multi_obstacle.json --algo rrtauvms --seed 30");
  CHECK(code == 0);
  const fs::path dir =
      fs::path(out_dir()) / "paper_multi_obstacle" / "rrtauvms_seed30";
  for (const char* name :
       {"result.json", "path.csv", "smoothed.csv", "tree.csv",
        "trajectory.csv"}) {
    CHECK(fs::exists(dir / name));
  }
}

TEST_CASE("replay accepts the exported path and rejects a tampered one") {
  const fs::path dir =
      fs::path(out_dir()) / "paper_multi_obstacle" / "rrtauvms_seed30";
  REQUIRE(fs::exists(dir / "path.csv"));
  CHECK(run("replay " + kScenarioDir + "/paper_multi_obstacle.json " +
            (dir / "path.csv").string()) == 0);
  CHECK(run("replay " + kScenarioDir + "/paper_multi_obstacle.json " +
            (dir / "smoothed.csv").string()) == 0);

  // Truncate the path: the goal test must now fail with exit code 2.
  const fs::path cut = kWorkDir / "truncated.csv";
  {
    std::ifstream in(dir / "path.csv");
    std::ofstream out(cut);
    std::string line;
    int kept = 0;
    while (std::getline(in, line) && kept < 6) {
      out << line << "\n";
      ++kept;
    }
  }
  CHECK(run("replay " + kScenarioDir + "/paper_multi_obstacle.json " +
            cut.string()) == 2);
}

TEST_CASE("a huge goal radius makes the start a trivial solution") {
  CHECK(run("--out-dir " + out_dir() + " plan " + kScenarioDir +
            "/paper_multi_obstacle.json --goal-radius 100 --seed 1") == 0);
}

TEST_CASE("a tiny iteration budget yields the not-found exit code") {
  CHECK(run("--out-dir " + out_dir() + " plan " + kScenarioDir +
            "/paper_multi_obstacle.json --algo rrt --seed 20 "
            "--max-iterations 10") == 2);
}

TEST_CASE("invalid inputs exit with code 3") {
  CHECK(run("plan /nonexistent/scenario.json") == 3);
  CHECK(run("validate /nonexistent/scenario.json") == 3);
  CHECK(run("plan " + kScenarioDir +
            "/paper_multi_obstacle.json --algo quantum") == 3);

  const fs::path broken = kWorkDir / "broken.json";
  std::ofstream(broken) << "{ not json";
  CHECK(run("validate " + broken.string()) == 3);

  const fs::path bad = kWorkDir / "bad_scenario.json";
  std::ofstream(bad) << R"({
    "start": {"position": [0,0,0], "joints": [0,0,0,0]},
    "goal": {"position": [1,1,1], "radius": -1}
  })";
  CHECK(run("validate " + bad.string()) == 3);
}

TEST_CASE("validate passes every shipped scenario") {
  for (const char* name :
       {"paper_multi_obstacle", "paper_single_obstacle", "paper_free"}) {
    CHECK(run("validate " + kScenarioDir + "/" + name + ".json") == 0);
  }
}

TEST_CASE("bench writes its report and summary") {
  const int code = run("--out-dir " + out_dir() + " bench " + kScenarioDir +
                       "/paper_multi_obstacle.json --algos rrtauvms "
                       "--seeds 10 20 --jobs 2");
  CHECK(code == 0);
  CHECK(fs::exists(fs::path(out_dir()) / "paper_multi_obstacle_bench.csv"));
  CHECK(fs::exists(fs::path(out_dir()) /
                   "paper_multi_obstacle_bench_table.csv"));
  CHECK(fs::exists(fs::path(out_dir()) /
                   "paper_multi_obstacle_bench_summary.csv"));
}

TEST_CASE("the AUVMS_OUT_DIR environment variable selects the output root") {
  const fs::path env_root = kWorkDir / "env_out";
  const std::string cmd = "AUVMS_OUT_DIR=" + env_root.string() + " " + kCli +
                          " plan " + kScenarioDir +
                          "/paper_multi_obstacle.json --seed 30 >/dev/null 2>&1";
  CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
  CHECK(fs::exists(env_root / "paper_multi_obstacle" / "rrtauvms_seed30" /
                   "result.json"));
}
