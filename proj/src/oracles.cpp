#include "hyc/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hyc/io.hpp"
#include "hyc/kernels.hpp"
#include "hyc/objectives.hpp"
#include "hyc/rng.hpp"
#include "hyc/spectral.hpp"
#include "hyc/tensor.hpp"

namespace hyc {

Matrix random_data(int n, int dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  Matrix X(n, dim);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < dim; ++j) X(i, j) = rng.uniform(-1.0, 1.0);
  return X;
}

UniformHypergraph random_simple_hypergraph(int n, int m, int edge_count, std::uint64_t seed) {
  if (n < m) throw ConfigError("need at least m distinct vertices for simple edges");
  SplitMix64 rng(seed);
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(edge_count));
  for (int e = 0; e < edge_count; ++e) {
    // Partial Fisher-Yates: the first m slots become a uniform m-subset.
    for (int i = 0; i < m; ++i) {
      int j = i + rng.uniform_int(n - i);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    Edge edge;
    edge.vertices.assign(pool.begin(), pool.begin() + m);
    std::sort(edge.vertices.begin(), edge.vertices.end());
    edge.weight = rng.uniform(0.5, 2.0);
    edges.push_back(std::move(edge));
  }
  return UniformHypergraph(m, n, std::move(edges));
}

namespace {

KernelSpec cycle_kernel(std::uint64_t i) {
  switch (i % 4) {
    case 0:
      return KernelSpec::gaussian_spec(1.0);
    case 1:
      return KernelSpec::gaussian_spec(0.3);
    case 2:
      return KernelSpec::polynomial_spec(2, 1.0);
    default:
      return KernelSpec::linear_spec();
  }
}

}  // namespace

OracleOutcome check_fast_vs_tensor(const OracleOptions& opts) {
  OracleOutcome out;
  out.name = "closed-form gram vs tensor contraction";
  out.tolerance = 1e-10;
  out.worst = 0.0;
  std::uint64_t counter = 0;
  bool injected = false;
  for (int n = 2; n <= 6; ++n) {
    for (int m : {2, 4, 6}) {
      for (int trial = 0; trial < opts.trials; ++trial) {
        std::uint64_t seed = derive_seed(opts.seed, counter);
        KernelSpec spec = cycle_kernel(counter);
        ++counter;
        Matrix data = random_data(n, 3, seed);
        Matrix K = gram(data, spec);
        Matrix fast = biclique_gram_fast(K, m);
        if (opts.inject_fault != 0.0 && !injected) {
          fast(0, 0) += opts.inject_fault;
          injected = true;
        }
        Matrix oracle = contract_biclique(biclique_gram_tensor(K, m));
        for (int i = 0; i < n; ++i) {
          for (int j = 0; j < n; ++j) {
            double rel = std::abs(fast(i, j) - oracle(i, j)) / std::max(1.0, std::abs(oracle(i, j)));
            if (rel > out.worst) {
              out.worst = rel;
              out.detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                           " trial=" + std::to_string(trial) + " entry(" + std::to_string(i) +
                           "," + std::to_string(j) + ") kernel=" + spec.describe();
            }
          }
        }
      }
    }
  }
  out.passed = out.worst <= out.tolerance;
  return out;
}

OracleOutcome check_objective_chain(const OracleOptions& opts) {
  OracleOutcome out;
  out.name = "objective chain (tuple = trace = feature map)";
  out.tolerance = 1e-8;
  out.worst = 0.0;
  for (int trial = 0; trial < opts.trials; ++trial) {
    std::uint64_t seed = derive_seed(opts.seed ^ 0x0b9ec71eULL, static_cast<std::uint64_t>(trial));
    SplitMix64 rng(seed);
    int n = 4 + rng.uniform_int(7);  // 4..10
    int k = 2 + rng.uniform_int(2);  // 2..3
    int m = (trial % 3 == 2) ? 2 : 4;
    Matrix data = random_data(n, 3, rng.next());
    WeightedPartition P;
    P.labels.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) P.labels[static_cast<std::size_t>(i)] = i;  // keep clusters nonempty
    for (int i = k; i < n; ++i) P.labels[static_cast<std::size_t>(i)] = rng.uniform_int(k);
    P.weights.resize(n);
    for (int i = 0; i < n; ++i) P.weights[i] = rng.uniform(0.5, 2.0);

    Matrix K = gram(data, KernelSpec::linear_spec());
    double direct = multiway_wkk_direct(K, m, P);
    double trace = multiway_wkk_trace(K, m, P);
    double feature = psi_prime_objective(data, m, P);
    double scale = std::max({1.0, std::abs(direct), std::abs(trace), std::abs(feature)});
    double dev = std::max(std::abs(direct - trace), std::abs(trace - feature)) / scale;

    // Feature-space and gram-side order-2 objectives on the same instance.
    double plain = std::abs(wkk_feature(data, P) - wkk_gram(K, P)) /
                   std::max(1.0, std::abs(wkk_gram(K, P)));
    dev = std::max(dev, plain);
    if (dev > out.worst) {
      out.worst = dev;
      out.detail = "trial=" + std::to_string(trial) + " n=" + std::to_string(n) +
                   " m=" + std::to_string(m) + " k=" + std::to_string(k);
    }
  }
  out.passed = out.worst <= out.tolerance;
  return out;
}

namespace {

// Adjacency tensor of a hypergraph: every index tuple whose multiset matches
// an edge accumulates that edge's weight (so repeated edges add, exactly as
// they do in the matrix operators).
CubicalTensor adjacency_tensor(const UniformHypergraph& G) {
  CubicalTensor T(G.edge_order(), G.vertex_count());
  for (const Edge& edge : G.edges()) {
    std::vector<int> idx = edge.vertices;
    std::sort(idx.begin(), idx.end());
    do {
      T.at(idx) += edge.weight;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  return T;
}

}  // namespace

OracleOutcome check_cut_equivalence(const OracleOptions& opts) {
  OracleOutcome out;
  out.name = "cut operators subspace + normalized-cut trace form";
  out.tolerance = 1e-6;
  out.worst = 0.0;
  int instances = std::min(opts.trials, 20);
  for (int trial = 0; trial < instances; ++trial) {
    std::uint64_t seed = derive_seed(opts.seed ^ 0xc07e9aULL, static_cast<std::uint64_t>(trial));
    int n = 6;
    int m = 4;
    int k = 2;
    UniformHypergraph G = random_simple_hypergraph(n, m, 8, seed);
    Vector d = degrees(G);
    bool degenerate = false;
    for (int i = 0; i < n; ++i) {
      if (!(d[i] > 0.0)) degenerate = true;
    }
    if (degenerate) continue;  // isolated vertex: normalization undefined
    Vector dinv = d.array().rsqrt();

    Matrix A_s = star_adjacency(G);
    auto [A_uc, A_nc] = clique_adjacencies(G);
    Matrix M = contract_biclique(adjacency_tensor(G));
    auto normalize = [&](const Matrix& A) {
      Matrix N = dinv.asDiagonal() * A * dinv.asDiagonal();
      return Matrix(0.5 * (N + N.transpose()));
    };
    Matrix bases[4] = {sym_eigh_topk(normalize(A_s), k).vectors,
                       sym_eigh_topk(normalize(A_uc), k).vectors,
                       sym_eigh_topk(normalize(A_nc), k).vectors,
                       sym_eigh_topk(normalize(M), k).vectors};
    for (int other = 1; other < 4; ++other) {
      Vector angles = principal_angles(bases[0], bases[other]);
      double worst_angle = angles.size() ? angles[angles.size() - 1] : 0.0;
      if (worst_angle > out.worst) {
        out.worst = worst_angle;
        out.detail = "trial=" + std::to_string(trial) + " operator#" + std::to_string(other) +
                     " principal angle " + format_double(worst_angle);
      }
    }

    // k-way normalized cut == indicator trace form, on a random partition.
    SplitMix64 rng(derive_seed(seed, 99));
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int i = 0; i < k; ++i) labels[static_cast<std::size_t>(i)] = i;
    for (int i = k; i < n; ++i) labels[static_cast<std::size_t>(i)] = rng.uniform_int(k);
    double direct = kncut(G, labels, k);
    std::vector<double> vol(static_cast<std::size_t>(k), 0.0);
    double vol_total = 0.0;
    for (int i = 0; i < n; ++i) {
      vol[static_cast<std::size_t>(labels[i])] += d[i];
      vol_total += d[i];
    }
    Matrix Z = Matrix::Zero(n, 2 * k);
    for (int i = 0; i < n; ++i) {
      int j = labels[static_cast<std::size_t>(i)];
      for (int c = 0; c < k; ++c) {
        if (c == j) {
          Z(i, 2 * c) = std::sqrt(d[i] / vol[static_cast<std::size_t>(c)]);
        } else {
          Z(i, 2 * c + 1) = std::sqrt(d[i] / (vol_total - vol[static_cast<std::size_t>(c)]));
        }
      }
    }
    Matrix L_s = -A_s;
    L_s.diagonal() += d;
    Matrix inner = dinv.asDiagonal() * L_s * dinv.asDiagonal();
    double trace_form = (Z.transpose() * inner * Z).trace();
    double dev = std::abs(direct - trace_form) / std::max(1.0, std::abs(direct));
    if (dev > out.worst) {
      out.worst = dev;
      out.detail = "trial=" + std::to_string(trial) + " normalized-cut trace dev " + format_double(dev);
    }
  }
  out.passed = out.worst <= out.tolerance;
  return out;
}

OracleOutcome check_gram_psd(const OracleOptions& opts) {
  OracleOutcome out;
  out.name = "order-m gram semidefiniteness";
  out.tolerance = 1e-8;
  out.worst = 0.0;  // records the most negative lambda_min / ||.||_F
  int instances = std::max(opts.trials, 1);
  for (int trial = 0; trial < instances; ++trial) {
    std::uint64_t seed = derive_seed(opts.seed ^ 0x95dULL, static_cast<std::uint64_t>(trial));
    SplitMix64 rng(seed);
    int n = 4 + rng.uniform_int(9);  // 4..12
    Matrix data = random_data(n, 3, rng.next());
    KernelSpec spec = (trial % 2 == 0) ? KernelSpec::gaussian_spec(rng.uniform(0.2, 2.0))
                                       : KernelSpec::polynomial_spec(2 + 2 * rng.uniform_int(3), 1.0);
    Matrix K = gram(data, spec);
    for (int m = 2; m <= 20; m += 2) {
      ScaledGram Km = biclique_gram_fast_scaled(K, m);
      Eigen::SelfAdjointEigenSolver<Matrix> es(Km.values);
      double lambda_min = es.eigenvalues()[0];
      double scale = Km.values.norm();
      double rel = -lambda_min / std::max(scale, 1e-300);
      if (rel > out.worst) {
        out.worst = rel;
        out.detail = "trial=" + std::to_string(trial) + " n=" + std::to_string(n) +
                     " m=" + std::to_string(m) + " kernel=" + spec.describe();
      }
    }
  }
  out.passed = out.worst <= out.tolerance;
  return out;
}

std::vector<OracleOutcome> run_all_oracles(const OracleOptions& opts) {
  return {check_fast_vs_tensor(opts), check_objective_chain(opts), check_cut_equivalence(opts),
          check_gram_psd(opts)};
}

bool all_passed(const std::vector<OracleOutcome>& outcomes) {
  for (const OracleOutcome& o : outcomes) {
    if (!o.passed) return false;
  }
  return true;
}

}  // namespace hyc
