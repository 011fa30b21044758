// End-to-end checks of the command-line binary: exit codes, report shapes,
// configuration precedence and worker-count determinism. The binary path
// arrives in HYPERCLIQUE_BIN; without it these cases skip themselves.
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

const std::string& work_dir() {
  static std::string dir = [] {
    std::string d = "/tmp/hyperclique_cli_test_" + std::to_string(getpid());
    std::string cmd = "mkdir -p " + d;
    int rc = std::system(cmd.c_str());
    (void)rc;
    return d;
  }();
  return dir;
}

// Runs `<binary> <args>` with stdout/stderr captured. `env_prefix` can set
// environment variables ("X=1 ").
RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  const char* bin = std::getenv("HYPERCLIQUE_BIN");
  REQUIRE(bin != nullptr);
  std::string out_path = work_dir() + "/out.txt";
  std::string err_path = work_dir() + "/err.txt";
  std::string cmd = env_prefix + std::string(bin) + " " + args + " > " + out_path +
                    " 2> " + err_path;
  int status = std::system(cmd.c_str());
  RunResult r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  return r;
}

bool cli_available() { return std::getenv("HYPERCLIQUE_BIN") != nullptr; }

// Six points, two obvious blobs, header + class column.
const std::string& blob_csv() {
  static std::string path = [] {
    std::string p = work_dir() + "/blobs.csv";
    std::ofstream f(p);
    f << "x,y,cls\n"
      << "0.0,0.1,a\n0.2,0.0,a\n0.1,0.2,a\n"
      << "8.0,8.1,b\n8.2,8.0,b\n8.1,8.2,b\n";
    return p;
  }();
  return path;
}

}  // namespace

#define SKIP_WITHOUT_BINARY()                                   \
  if (!cli_available()) {                                       \
    MESSAGE("HYPERCLIQUE_BIN not set; skipping CLI test case"); \
    return;                                                     \
  }

TEST_CASE("help exits cleanly and lists the subcommands") {
  SKIP_WITHOUT_BINARY();
  RunResult r = run_cli("--help");
  CHECK(r.code == 0);
  CHECK(r.out.find("cluster") != std::string::npos);
  CHECK(r.out.find("sweep") != std::string::npos);
  CHECK(r.out.find("oracle-check") != std::string::npos);
  CHECK(r.out.find("heat-convergence") != std::string::npos);
  CHECK(r.out.find("bench") != std::string::npos);
}

TEST_CASE("usage mistakes exit 1 before any computation") {
  SKIP_WITHOUT_BINARY();
  CHECK(run_cli("cluster").code == 1);          // no input at all
  CHECK(run_cli("frobnicate").code == 1);       // unknown subcommand
  RunResult both = run_cli("cluster --input " + blob_csv() +
                           " --input-hypergraph /tmp/nope.txt");
  CHECK(both.code == 1);
}

TEST_CASE("clustering a labeled CSV reports labels and the error rate") {
  SKIP_WITHOUT_BINARY();
  RunResult r = run_cli("cluster --input " + blob_csv() +
                        " --label-col cls --k 2 --restarts 5");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("index,label") != std::string::npos);
  CHECK(r.out.find("# error_rate=0\n") != std::string::npos);
  // One assignment line per point.
  int assignments = 0;
  std::istringstream lines(r.out);
  std::string line;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#' && line.find("index,") != 0) ++assignments;
  CHECK(assignments == 6);
}

TEST_CASE("odd biclique orders are rejected with a helpful message") {
  SKIP_WITHOUT_BINARY();
  RunResult r = run_cli("cluster --input " + blob_csv() +
                        " --label-col cls --k 2 --m 3");
  CHECK(r.code == 1);
  CHECK(r.err.find("even") != std::string::npos);
}

TEST_CASE("unreadable or malformed data exits 2") {
  SKIP_WITHOUT_BINARY();
  CHECK(run_cli("cluster --input /nonexistent/x.csv --k 2").code == 2);

  std::string bad = work_dir() + "/bad.csv";
  {
    std::ofstream f(bad);
    f << "x,y\n1.0,oops\n";
  }
  RunResult r = run_cli("cluster --input " + bad + " --label-col none --k 2");
  CHECK(r.code == 2);
  CHECK(r.err.find("data error") != std::string::npos);
}

TEST_CASE("the oracle suites pass and the fault hook trips them") {
  SKIP_WITHOUT_BINARY();
  RunResult ok = run_cli("oracle-check --trials 2");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("PASS") != std::string::npos);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  CHECK(ok.out.find("# all_passed=true") != std::string::npos);

  RunResult bad = run_cli("oracle-check --trials 2 --inject-fault 0.001");
  CHECK(bad.code == 4);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("config files feed defaults and unknown keys are fatal") {
  SKIP_WITHOUT_BINARY();
  std::string cfg = work_dir() + "/good.cfg";
  {
    std::ofstream f(cfg);
    f << "# comment\nk = 2\ngamma = 0.5\nseed = 7\n";
  }
  RunResult r = run_cli("cluster --config " + cfg + " --input " + blob_csv() +
                        " --label-col cls --restarts 5");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("gaussian(gamma=0.5)") != std::string::npos);
  CHECK(r.out.find("seed=7") != std::string::npos);

  std::string bad = work_dir() + "/bad.cfg";
  {
    std::ofstream f(bad);
    f << "k = 2\nmystery_knob = 5\n";
  }
  RunResult e = run_cli("cluster --config " + bad + " --input " + blob_csv() +
                        " --label-col cls");
  CHECK(e.code == 1);
  CHECK(e.err.find("mystery_knob") != std::string::npos);
}

TEST_CASE("seed precedence: command line beats environment beats config") {
  SKIP_WITHOUT_BINARY();
  std::string cfg = work_dir() + "/seed.cfg";
  {
    std::ofstream f(cfg);
    f << "seed = 7\n";
  }
  std::string base = "cluster --config " + cfg + " --input " + blob_csv() +
                     " --label-col cls --k 2 --restarts 3";

  RunResult from_cfg = run_cli(base);
  CHECK(from_cfg.out.find("seed=7") != std::string::npos);

  RunResult from_env = run_cli(base, "BICLIQUE_SEED=9 ");
  CHECK(from_env.out.find("seed=9") != std::string::npos);

  RunResult from_flag = run_cli(base + " --seed 11", "BICLIQUE_SEED=9 ");
  CHECK(from_flag.out.find("seed=11") != std::string::npos);
}

TEST_CASE("sweep CSVs are byte-identical across worker counts") {
  SKIP_WITHOUT_BINARY();
  std::string one = work_dir() + "/sweep1.csv";
  std::string four = work_dir() + "/sweep4.csv";
  std::string common = "sweep --input " + blob_csv() +
                       " --label-col cls --k 2 --gammas 0.5,1 --ms 2,4 "
                       "--restarts 5 ";
  CHECK(run_cli(common + "--workers 1 --csv " + one).code == 0);
  CHECK(run_cli(common + "--workers 4 --csv " + four).code == 0);
  std::string a = slurp(one);
  std::string b = slurp(four);
  REQUIRE(!a.empty());
  CHECK(a == b);
  CHECK(a.find("wall") == std::string::npos);
}

TEST_CASE("sweep also emits the JSON report when asked") {
  SKIP_WITHOUT_BINARY();
  std::string json_path = work_dir() + "/report.json";
  RunResult r = run_cli("sweep --input " + blob_csv() +
                        " --label-col cls --k 2 --gammas 1 --ms 2 --restarts 3 "
                        "--csv /dev/null --json " + json_path);
  REQUIRE(r.code == 0);
  std::string doc = slurp(json_path);
  CHECK(doc.find("\"schema_version\": 1") != std::string::npos);
  CHECK(doc.find("\"provenance\"") != std::string::npos);
}

TEST_CASE("hypergraph edge lists cluster through the star expansion") {
  SKIP_WITHOUT_BINARY();
  std::string edges = work_dir() + "/edges.txt";
  {
    std::ofstream f(edges);
    f << "# two pairwise triangles\n"
      << "0 1 1.0\n1 2 1.0\n0 2 1.0\n"
      << "3 4 1.0\n4 5 1.0\n3 5 1.0\n";
  }
  RunResult r = run_cli("cluster --input-hypergraph " + edges + " --k 2 --restarts 5");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("index,label") != std::string::npos);
  // The two triangles must land in different clusters.
  std::istringstream lines(r.out);
  std::string line;
  std::vector<int> labels;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line.find("index,") == 0) continue;
    labels.push_back(std::stoi(line.substr(line.find(',') + 1)));
  }
  REQUIRE(labels.size() == 6);
  CHECK(labels[0] == labels[1]);
  CHECK(labels[1] == labels[2]);
  CHECK(labels[3] == labels[4]);
  CHECK(labels[4] == labels[5]);
  CHECK(labels[0] != labels[3]);
}

TEST_CASE("the convergence experiment prints one row per size") {
  SKIP_WITHOUT_BINARY();
  RunResult r = run_cli("heat-convergence --sizes 20,40 --seeds 3,4 --m 2");
  REQUIRE(r.code == 0);
  CHECK(r.out.find("n,t,seeds,mean_error,std_error") != std::string::npos);
  CHECK(r.out.find("# monotone_decreasing=") != std::string::npos);
  CHECK(r.out.find("\n20,") != std::string::npos);
  CHECK(r.out.find("\n40,") != std::string::npos);
}
