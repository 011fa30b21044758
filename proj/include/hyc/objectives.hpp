// Weighted kernel k-means objectives, in three independently computed forms
// that must agree: literal tuple enumeration, trace form over the order-m
// gram, and an explicit feature-space evaluation. These serve as the
// cross-check oracles tying the clustering objective to the spectral
// relaxation.
#pragma once

#include <vector>

#include "hyc/common.hpp"
#include "hyc/kernels.hpp"

namespace hyc {

struct WeightedPartition {
  std::vector<int> labels;  // values in [0, k)
  Vector weights;           // strictly positive, one per point
};

// Number of clusters (max label + 1). Validates labels contiguous in
// [0, k), every cluster nonempty, weights positive and matching length.
int validate_partition(const WeightedPartition& P);

// Weighted cluster-indicator matrix: Y[i, j] = sqrt(w_i / s_j) for i in
// cluster j (s_j = total weight of cluster j), 0 elsewhere. Columns are
// orthonormal under the trivial inner product.
Matrix weighted_indicator(const WeightedPartition& P);

// Weighted kernel k-means objective on an explicit gram matrix:
//   sum_j [ sum_{i in C_j} w_i K_ii - sum_{r,l in C_j} w_r w_l K_rl / s_j ]
// which equals trace(W^{1/2} K W^{1/2}) - trace(Y^T W^{1/2} K W^{1/2} Y).
double wkk_gram(const Matrix& K, const WeightedPartition& P);

// The same objective in feature space: sum_j sum_{i in C_j} w_i
// ||x_i - m_j||^2 with m_j the weighted cluster mean. Equals wkk_gram on
// the linear gram of the same rows.
double wkk_feature(const Matrix& data, const WeightedPartition& P);

// Multi-way objective evaluated literally: each point i is lifted to the
// (m/2)-tuples it heads, companion indices ranging over the FULL index set,
// and the order-m pair-sum kernel built from base-gram lookups is
// enumerated tuple by tuple. Guarded: n^m must stay below the entry guard
// (default keeps n <= 12 at m = 4 comfortable). O(n^m) time.
double multiway_wkk_direct(const Matrix& K, int m, const WeightedPartition& P,
                           long long max_tuples = kDefaultOracleGuard);

// The same objective as a trace form over the closed-form order-m gram:
//   sum_i w_i Km_ii - trace(Y^T W^{1/2} Km W^{1/2} Y),
// Km = order-m gram of K. The first term is partition-independent.
double multiway_wkk_trace(const Matrix& K, int m, const WeightedPartition& P);

// Explicit finite-dimensional feature map whose ordinary gram equals the
// order-m gram of the LINEAR base kernel:
//   psi(x_i) = n^{(m-2)/2} * ( x_i + ((m-2)/(2n)) * sum_l x_l ).
// Rows of the result are psi(x_i).
Matrix linear_feature_map(const Matrix& data, int m);

// Feature-space evaluation of the multi-way objective for the linear base
// kernel: wkk_feature on the rows of linear_feature_map. Agrees with
// multiway_wkk_trace on the linear gram.
double psi_prime_objective(const Matrix& data, int m,
                           const WeightedPartition& P);

}  // namespace hyc
