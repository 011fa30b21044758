// Randomized cross-module consistency suites behind the `oracle-check`
// subcommand: the closed-form gram against literal tensor contraction, the
// objective-chain equalities, cut/operator subspace agreement, and gram
// semi-definiteness. Each suite reports its worst deviation; any violation
// maps to a dedicated process exit code.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyc/common.hpp"
#include "hyc/hypergraph.hpp"

namespace hyc {

struct OracleOutcome {
  std::string name;
  bool passed = false;
  double worst = 0.0;      // suite-specific deviation measure
  double tolerance = 0.0;
  std::string detail;      // where the worst case occurred
};

struct OracleOptions {
  std::uint64_t seed = 42;
  int trials = 50;          // randomized instances per suite
  // Test-hook: adds this value to one entry of a closed-form gram inside the
  // fast-vs-tensor suite, which must then fail. 0 disables.
  double inject_fault = 0.0;
};

// Random points, random simple (distinct-vertex) m-uniform hypergraphs —
// deterministic from the seed; shared by suites and tests.
Matrix random_data(int n, int dim, std::uint64_t seed);
UniformHypergraph random_simple_hypergraph(int n, int m, int edge_count,
                                           std::uint64_t seed);

// Closed-form order-m gram == one-index-per-half contraction of the literal
// gram tensor (relative error per entry), n in {2..6}, m in {2,4,6}.
OracleOutcome check_fast_vs_tensor(const OracleOptions& opts);

// Chain equality: tuple-enumerated objective == trace form == explicit
// feature-space objective (linear base kernel), plus the feature-map gram
// identity, on random small weighted partitions.
OracleOutcome check_objective_chain(const OracleOptions& opts);

// On random simple uniform hypergraphs: top-k eigenspaces of the normalized
// star, unnormalized-clique, normalized-clique and contracted-tensor
// operators agree (principal angles), and the k-way normalized cut equals
// its indicator-trace form.
OracleOutcome check_cut_equivalence(const OracleOptions& opts);

// Min eigenvalue of closed-form grams >= -1e-8 * Frobenius norm for random
// PSD base grams, all even m up to 20.
OracleOutcome check_gram_psd(const OracleOptions& opts);

// Runs every suite; returns all outcomes (use all_passed to fold).
std::vector<OracleOutcome> run_all_oracles(const OracleOptions& opts);
bool all_passed(const std::vector<OracleOutcome>& outcomes);

}  // namespace hyc
