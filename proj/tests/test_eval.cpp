// Sweep harness: canonical row order, per-row error isolation, report
// selection, and byte-stable CSV / structured JSON output.
#include <doctest.h>

#include <cstdint>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "hyc/common.hpp"
#include "hyc/eval.hpp"
#include "hyc/rng.hpp"

using hyc::Matrix;
using hyc::SweepConfig;

namespace {

Matrix two_blobs(int per, std::uint64_t seed, std::vector<int>* truth) {
  hyc::SplitMix64 rng(seed);
  Matrix X(2 * per, 2);
  truth->clear();
  for (int i = 0; i < 2 * per; ++i) {
    double base = (i < per) ? 0.0 : 8.0;
    X(i, 0) = base + 0.3 * rng.normal();
    X(i, 1) = base + 0.3 * rng.normal();
    truth->push_back(i < per ? 0 : 1);
  }
  return X;
}

SweepConfig tiny_config() {
  SweepConfig cfg;
  cfg.gammas = {0.1, 1.0};
  cfg.m_values = {2, 4};
  cfg.restarts = 5;
  cfg.workers = 1;
  return cfg;
}

std::string csv_of(const hyc::EvalReport& report) {
  std::ostringstream out;
  hyc::write_csv(out, report);
  return out.str();
}

}  // namespace

TEST_CASE("rows come out in canonical parameter-major, order-minor order") {
  std::vector<int> truth;
  Matrix X = two_blobs(5, 31, &truth);
  hyc::EvalReport report = hyc::sweep(X, truth, tiny_config());
  REQUIRE(report.rows.size() == 4);
  CHECK(report.rows[0].gamma == 0.1);
  CHECK(report.rows[0].m == 2);
  CHECK(report.rows[1].gamma == 0.1);
  CHECK(report.rows[1].m == 4);
  CHECK(report.rows[2].gamma == 1.0);
  CHECK(report.rows[2].m == 2);
  CHECK(report.rows[3].gamma == 1.0);
  CHECK(report.rows[3].m == 4);
  for (const hyc::SweepRow& row : report.rows) {
    CHECK(row.status == "ok");
    CHECK(row.modeling == "biclique");
    CHECK(row.mean_error >= 0.0);
    CHECK(row.mean_error <= 1.0);
    CHECK(row.best_error >= 0.0);
    CHECK(row.degree == 0);  // not a polynomial sweep
  }
  // Separated blobs: every configuration recovers the split.
  CHECK(report.rows[2].mean_error == doctest::Approx(0.0));
}

TEST_CASE("reports are identical for any worker count") {
  std::vector<int> truth;
  Matrix X = two_blobs(5, 32, &truth);
  SweepConfig one = tiny_config();
  SweepConfig three = tiny_config();
  three.workers = 3;
  std::string a = csv_of(hyc::sweep(X, truth, one));
  std::string b = csv_of(hyc::sweep(X, truth, three));
  CHECK(a == b);
  // And across repeat runs with the same seed.
  std::string c = csv_of(hyc::sweep(X, truth, one));
  CHECK(a == c);
}

TEST_CASE("polynomial sweeps iterate degree and offset grids") {
  std::vector<int> truth;
  Matrix X = two_blobs(4, 33, &truth);
  SweepConfig cfg;
  cfg.kind = hyc::KernelKind::polynomial;
  cfg.degrees = {1, 3};
  cfg.offsets = {1.0};
  cfg.m_values = {2};
  cfg.restarts = 4;
  cfg.workers = 1;
  hyc::EvalReport report = hyc::sweep(X, truth, cfg);
  REQUIRE(report.rows.size() == 2);
  CHECK(report.rows[0].kernel == "polynomial(degree=1,offset=1)");
  CHECK(report.rows[0].degree == 1);
  CHECK(report.rows[0].offset == 1.0);
  CHECK(report.rows[0].gamma == 0.0);
  CHECK(report.rows[1].degree == 3);
}

TEST_CASE("a failing grid point becomes an error row, not an aborted sweep") {
  // A linear-kernel gram with a negative row sum breaks the degree
  // normalization; the sweep must record the failure and move on.
  Matrix X(2, 1);
  X << 1.0, -2.0;
  std::vector<int> truth = {0, 1};
  SweepConfig cfg;
  cfg.kind = hyc::KernelKind::polynomial;
  cfg.degrees = {1};
  cfg.offsets = {0.0};
  cfg.m_values = {2};
  cfg.restarts = 2;
  cfg.workers = 1;
  hyc::EvalReport report = hyc::sweep(X, truth, cfg);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].status != "ok");
  CHECK(report.rows[0].mean_error == -1.0);
  CHECK_THROWS_AS(hyc::best_row(report), hyc::DataError);

  // The CSV keeps commas out of the embedded error message.
  std::string csv = csv_of(report);
  CHECK(csv.find("row sum") != std::string::npos);
}

TEST_CASE("best_row honors the order window") {
  std::vector<int> truth;
  Matrix X = two_blobs(5, 34, &truth);
  hyc::EvalReport report = hyc::sweep(X, truth, tiny_config());
  CHECK(hyc::best_row(report, 2, 2).m == 2);
  CHECK(hyc::best_row(report, 4, -1).m == 4);
  const hyc::SweepRow& overall = hyc::best_row(report);
  for (const hyc::SweepRow& row : report.rows)
    CHECK(overall.mean_error <= row.mean_error);
  CHECK_THROWS_AS(hyc::best_row(report, 6, 8), hyc::DataError);
}

TEST_CASE("the CSV has a config comment, a header, and no timing column") {
  std::vector<int> truth;
  Matrix X = two_blobs(4, 35, &truth);
  hyc::EvalReport report = hyc::sweep(X, truth, tiny_config());
  std::string csv = csv_of(report);
  REQUIRE(csv.rfind("# ", 0) == 0);
  std::istringstream lines(csv);
  std::string line;
  std::getline(lines, line);  // config comment
  std::getline(lines, line);
  CHECK(line ==
        "modeling,kernel,gamma,degree,offset,m,mean_error,std_error,best_error,status");
  int data_lines = 0;
  while (std::getline(lines, line))
    if (!line.empty()) ++data_lines;
  CHECK(data_lines == 4);
  CHECK(csv.find("wall") == std::string::npos);
}

TEST_CASE("the JSON report carries rows, summaries and quarantined timing") {
  std::vector<int> truth;
  Matrix X = two_blobs(4, 36, &truth);
  hyc::EvalReport report = hyc::sweep(X, truth, tiny_config());
  std::ostringstream out;
  hyc::write_json(out, report);
  nlohmann::json doc = nlohmann::json::parse(out.str());
  CHECK(doc["schema_version"] == 1);
  CHECK(doc["rows"].size() == 4);
  CHECK(doc["rows"][0]["m"] == 2);
  CHECK(doc["rows"][0]["status"] == "ok");
  CHECK(doc["summary"].contains("best_overall"));
  CHECK(doc["summary"].contains("best_m2"));
  CHECK(doc["summary"].contains("best_m_ge4"));
  CHECK(doc["provenance"]["row_wall_ms"].size() == 4);
  CHECK(doc["config"].is_string());
}

TEST_CASE("sweep inputs are validated before any work starts") {
  std::vector<int> truth;
  Matrix X = two_blobs(4, 37, &truth);
  std::vector<int> short_truth(truth.begin(), truth.end() - 1);
  CHECK_THROWS_AS(hyc::sweep(X, short_truth, tiny_config()), hyc::DataError);

  SweepConfig bad_k = tiny_config();
  bad_k.k = 1;
  CHECK_THROWS_AS(hyc::sweep(X, truth, bad_k), hyc::ConfigError);

  SweepConfig no_ms = tiny_config();
  no_ms.m_values = {};
  CHECK_THROWS_AS(hyc::sweep(X, truth, no_ms), hyc::ConfigError);

  SweepConfig odd_m = tiny_config();
  odd_m.m_values = {3};
  CHECK_THROWS_AS(hyc::sweep(X, truth, odd_m), hyc::ConfigError);

  SweepConfig no_restarts = tiny_config();
  no_restarts.restarts = 0;
  CHECK_THROWS_AS(hyc::sweep(X, truth, no_restarts), hyc::ConfigError);
}
