// Spectral clustering pipeline: degree-normalized operator, dense symmetric
// eigensolver with a deterministic sign convention, k-means with restarts,
// and the end-to-end biclique-kernel clustering entry point.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hyc/common.hpp"
#include "hyc/kernels.hpp"

namespace hyc {

// D^{-1/2} A D^{-1/2} with d_i = row sums of A, re-symmetrized by
// (M + M^T)/2 to kill rounding asymmetry. Throws NumericalError naming the
// first offending vertex (and suggesting a gram shift) if any row sum <= 0.
Matrix normalized_operator(const Matrix& A);

// Scaled-gram overload: the common positive prefactor base^exponent cancels
// in D^{-1/2} A D^{-1/2}, so this equals normalizing the materialized matrix
// while never forming the (potentially astronomically scaled) dense values.
Matrix normalized_operator(const ScaledGram& A);

struct Embedding {
  Matrix vectors;      // n x k, column j pairs with eigenvalues[j]
  Vector eigenvalues;  // k values, descending
};

// Top-k eigenpairs of a symmetric matrix by algebraic value (descending).
// Deterministic sign convention: in each eigenvector the entry of largest
// magnitude (ties -> lowest index) is made positive. Throws ConfigError for
// k out of range and NumericalError if M is not symmetric to 1e-8.
Embedding sym_eigh_topk(const Matrix& M, int k);

// Diagnostic for subspace-equivalence tests: principal angles (radians,
// ascending) between the column spans of U and V.
Vector principal_angles(const Matrix& U, const Matrix& V);

struct KMeansResult {
  std::vector<int> labels;   // size = #rows, values in [0, k)
  Matrix centroids;          // k x dim
  double objective = 0.0;    // within-cluster sum of squares of the winner
  int best_restart = 0;      // index of the winning restart
  std::vector<double> restart_objectives;       // one per restart
  std::vector<std::vector<int>> restart_labels; // one label vector per restart
};

// Lloyd's algorithm with k-means++ seeding, `restarts` independent runs.
// Fully deterministic for a fixed seed: restart r draws from a stream
// derived from (seed, r), distance ties pick the lowest index, an emptied
// cluster is reseeded at the point farthest from its current centroid, and
// each run iterates to an assignment fixpoint (or max_iters). The restart
// with the lowest objective wins; ties -> lowest restart index.
KMeansResult kmeans(const Matrix& points, int k, int restarts,
                    std::uint64_t seed, int max_iters = 300);

struct RestartStats {
  double objective_mean = 0.0;
  double objective_std = 0.0;  // population std over restarts
  double agreement_mean = 0.0; // 1 - best-bijection mismatch vs winning labels
  double agreement_std = 0.0;
};

struct ClusteringResult {
  std::vector<int> labels;
  Embedding embedding;      // what k-means actually saw
  double kmeans_objective = 0.0;
  RestartStats restart_stats;
  KMeansResult kmeans;      // full per-restart detail
  std::string config;       // resolved-configuration echo for reports
};

struct ClusterOpts {
  int restarts = 100;
  std::uint64_t seed = 42;
  int max_iters = 300;
  bool row_normalize = false;  // normalize embedding rows before k-means
  ShiftSpec shift = ShiftSpec::none();
};

// Spectral clustering of an explicit similarity matrix: optional shift ->
// normalized operator -> top-k eigenvectors -> k-means on the eigenvector
// rows (no row renormalization unless opts say so).
ClusteringResult cluster_similarity(const Matrix& A, int k,
                                    const ClusterOpts& opts);

// End-to-end biclique pipeline: base gram of the data -> order-m gram via
// the closed-form pair expansion (scaled representation; the scale cancels
// in the normalization) -> normalized operator -> top-k eigenvectors ->
// k-means. m must be even and >= 2.
ClusteringResult cluster_biclique(const Matrix& data, const KernelSpec& spec,
                                  int m, int k, const ClusterOpts& opts);

}  // namespace hyc
