// Parameter-sweep harness: runs the clustering pipelines over kernel/order
// grids with restart statistics against ground-truth labels, producing a
// deterministic report (CSV rows plus a structured JSON document).
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyc/assignment.hpp"
#include "hyc/baselines.hpp"
#include "hyc/common.hpp"

namespace hyc {

struct SweepConfig {
  Modeling modeling = Modeling::biclique;
  KernelKind kind = KernelKind::gaussian;
  // Gaussian / affine / dh2 grid; decades 1e-3..1e5 by default.
  std::vector<double> gammas = {1e-3, 1e-2, 1e-1, 1, 1e1, 1e2, 1e3, 1e4, 1e5};
  // Polynomial grid.
  std::vector<int> degrees = {1, 3, 5, 7, 9};
  std::vector<double> offsets = {0.0, 1.0};
  // Biclique orders; ignored (fixed 3) for the order-3 modelings.
  std::vector<int> m_values = {2, 4, 6, 8, 10, 12, 14, 16, 18, 20};
  int k = 2;
  int restarts = 100;
  std::uint64_t seed = 42;
  int workers = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  std::string modeling;
  std::string kernel;   // human-readable kernel/parameter description
  double gamma = 0.0;   // 0 when not applicable
  int degree = 0;       // 0 when not applicable
  double offset = 0.0;
  int m = 0;
  double mean_error = -1.0;  // mean over restarts of error vs truth
  double std_error = -1.0;   // population std over restarts
  double best_error = -1.0;  // error of the best-objective restart
  std::string status;        // "ok" or an error message
  double wall_ms = 0.0;      // provenance only; excluded from the CSV
};

struct EvalReport {
  std::string config;         // resolved-configuration echo
  std::vector<SweepRow> rows; // canonical order: params ascending, m ascending
};

// Runs every grid point of cfg on (data, truth). Each row gets its own
// derived seed keyed by its canonical position, so the report is identical
// for any worker count. A failing configuration becomes an error row, not
// an aborted sweep.
EvalReport sweep(const Matrix& data, const std::vector<int>& truth,
                 const SweepConfig& cfg);

// CSV: '#' config lines, a header, then one line per row. Contains no
// timing, so runs with identical seeds are byte-identical.
void write_csv(std::ostream& out, const EvalReport& report);

// JSON: rows plus best-per-modeling summaries plus a provenance section
// (wall times; explicitly non-deterministic).
void write_json(std::ostream& out, const EvalReport& report);

// Lowest mean_error among ok rows satisfying m_min <= m <= m_max (any m
// when both bounds are negative). Throws DataError if no row qualifies.
const SweepRow& best_row(const EvalReport& report, int m_min = -1,
                         int m_max = -1);

}  // namespace hyc
