// Heuristic order-3 tensor modelings used as comparison baselines: max of
// pairwise kernels, affine-subspace fit, summed point-to-line distances,
// and a generalized dot product. Each is clustered through the same
// contraction + normalized-eigen + k-means machinery as the main pipeline.
#pragma once

#include <string>

#include "hyc/common.hpp"
#include "hyc/kernels.hpp"
#include "hyc/spectral.hpp"
#include "hyc/tensor.hpp"

namespace hyc {

// A[i,j,k] = max of the three pairwise base-kernel values among
// {x_i, x_j, x_k}. Fully symmetric.
CubicalTensor gd_max_tensor(const Matrix& data, const KernelSpec& spec,
                            long long max_entries = kDefaultOracleGuard);

// A[i,j,k] = exp(-gamma * lambda_min(X^T X)) where X is the d x 3 matrix of
// the three points; lambda_min is the smallest eigenvalue of the 3 x 3
// product (0 exactly when the triple lies on a 2-plane through the origin
// spanned by fewer than 3 independent points).
CubicalTensor affine_subspace_tensor(const Matrix& data, double gamma,
                                     long long max_entries = kDefaultOracleGuard);

// A[i,j,k] = exp(-gamma * s) with s = sum over the three points of the
// distance to the affine hull of the other two (for degenerate duplicate
// pairs: distance to the single remaining point). Collinear triples get
// weight 1.
CubicalTensor dh2_tensor(const Matrix& data, double gamma,
                         long long max_entries = kDefaultOracleGuard);

// A[i,j,k] = sum_l x_il x_jl x_kl. Entries may be negative; downstream
// clustering shifts the contraction to nonnegative.
CubicalTensor gendot_tensor(const Matrix& data,
                            long long max_entries = kDefaultOracleGuard);

enum class Modeling { biclique, gd_max, affine, dh2, gendot };

// Canonical names used by the CLI and reports: "biclique", "gd-max",
// "affine", "dh2", "gendot".
const char* modeling_name(Modeling m);
Modeling parse_modeling(const std::string& name);  // throws ConfigError

// Builds the selected order-3 tensor (kernel spec feeds gd_max; gamma feeds
// affine/dh2; gendot ignores both), contracts it with modes 0,1 free,
// shifts the contraction to nonnegative entries if any are negative, then
// runs the shared normalized-eigen + k-means pipeline.
ClusteringResult cluster_order3(const Matrix& data, Modeling modeling,
                                const KernelSpec& spec, double gamma, int k,
                                const ClusterOpts& opts);

}  // namespace hyc
