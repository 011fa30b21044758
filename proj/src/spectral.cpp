#include "hyc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hyc/assignment.hpp"
#include "hyc/io.hpp"
#include "hyc/rng.hpp"
#include "hyc/summation.hpp"

namespace hyc {

namespace {

Vector checked_row_sums(const Matrix& A) {
  int n = static_cast<int>(A.rows());
  Vector d(n);
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(j)] = A(i, j);
    d[i] = pairwise_sum(buf);
    if (!(d[i] > 0.0)) {
      throw NumericalError("row sum (degree) of vertex " + std::to_string(i) + " is " +
                           format_double(d[i]) +
                           " <= 0; the normalized operator is undefined. Shifting the gram "
                           "(min_to_zero) usually repairs this.");
    }
  }
  return d;
}

}  // namespace

Matrix normalized_operator(const Matrix& A) {
  if (A.rows() != A.cols()) {
    throw DataError("normalized operator needs a square matrix, got " + std::to_string(A.rows()) +
                    "x" + std::to_string(A.cols()));
  }
  Vector d = checked_row_sums(A);
  Vector dinv = d.array().rsqrt();
  Matrix N = dinv.asDiagonal() * A * dinv.asDiagonal();
  return 0.5 * (N + N.transpose());
}

Matrix normalized_operator(const ScaledGram& A) {
  // The positive scale base^exponent cancels between A and its degrees.
  return normalized_operator(A.values);
}

Embedding sym_eigh_topk(const Matrix& M, int k) {
  if (M.rows() != M.cols()) {
    throw DataError("eigendecomposition needs a square matrix, got " + std::to_string(M.rows()) +
                    "x" + std::to_string(M.cols()));
  }
  int n = static_cast<int>(M.rows());
  if (k < 1 || k > n) {
    throw ConfigError("requested " + std::to_string(k) + " eigenpairs from a " + std::to_string(n) +
                      "x" + std::to_string(n) + " matrix");
  }
  double scale = std::max(1.0, M.cwiseAbs().maxCoeff());
  double asym = (M - M.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8 * scale) {
    throw NumericalError("matrix is not symmetric (max asymmetry " + format_double(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(0.5 * (M + M.transpose()));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("symmetric eigendecomposition failed to converge");
  }
  Embedding out;
  out.vectors.resize(n, k);
  out.eigenvalues.resize(k);
  for (int j = 0; j < k; ++j) {
    int src = n - 1 - j;  // solver orders ascending
    out.eigenvalues[j] = solver.eigenvalues()[src];
    Vector col = solver.eigenvectors().col(src);
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      double mag = std::abs(col[i]);
      if (mag > best) {
        best = mag;
        arg = i;
      }
    }
    if (col[arg] < 0.0) col = -col;
    out.vectors.col(j) = col;
  }
  return out;
}

Vector principal_angles(const Matrix& U, const Matrix& V) {
  if (U.rows() != V.rows()) throw DataError("subspace bases must have matching row counts");
  Eigen::HouseholderQR<Matrix> qu(U), qv(V);
  Matrix Qu = qu.householderQ() * Matrix::Identity(U.rows(), U.cols());
  Matrix Qv = qv.householderQ() * Matrix::Identity(V.rows(), V.cols());
  Eigen::JacobiSVD<Matrix> svd(Qu.transpose() * Qv);
  Vector angles(svd.singularValues().size());
  for (int i = 0; i < angles.size(); ++i) {
    angles[i] = std::acos(std::clamp(svd.singularValues()[i], -1.0, 1.0));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

namespace {

double sq_dist(const Matrix& points, int row, const Matrix& centroids, int c) {
  return (points.row(row) - centroids.row(c)).squaredNorm();
}

// k-means++ seeding from the given stream.
Matrix seed_centroids(const Matrix& points, int k, SplitMix64& rng) {
  int n = static_cast<int>(points.rows());
  Matrix centroids(k, points.cols());
  centroids.row(0) = points.row(rng.uniform_int(n));
  std::vector<double> d2(static_cast<std::size_t>(n));
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      double best = std::numeric_limits<double>::infinity();
      for (int prev = 0; prev < c; ++prev) best = std::min(best, sq_dist(points, i, centroids, prev));
      d2[static_cast<std::size_t>(i)] = best;
      total += best;
    }
    if (!(total > 0.0)) {
      centroids.row(c) = points.row(rng.uniform_int(n));
      continue;
    }
    double u = rng.uniform(0.0, total);
    double cum = 0.0;
    int chosen = n - 1;
    for (int i = 0; i < n; ++i) {
      cum += d2[static_cast<std::size_t>(i)];
      if (u < cum) {
        chosen = i;
        break;
      }
    }
    centroids.row(c) = points.row(chosen);
  }
  return centroids;
}

struct LloydRun {
  std::vector<int> labels;
  Matrix centroids;
  double objective = 0.0;
};

LloydRun lloyd(const Matrix& points, int k, SplitMix64& rng, int max_iters) {
  int n = static_cast<int>(points.rows());
  LloydRun run;
  run.centroids = seed_centroids(points, k, rng);
  run.labels.assign(static_cast<std::size_t>(n), -1);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int arg = 0;
      double best = sq_dist(points, i, run.centroids, 0);
      for (int c = 1; c < k; ++c) {
        double d = sq_dist(points, i, run.centroids, c);
        if (d < best) {  // strict: ties keep the lowest index
          best = d;
          arg = c;
        }
      }
      if (run.labels[static_cast<std::size_t>(i)] != arg) {
        run.labels[static_cast<std::size_t>(i)] = arg;
        changed = true;
      }
    }
    if (!changed) break;
    // Means, with empty-cluster repair: an empty centroid is reseeded at the
    // point farthest from its currently assigned centroid (ties -> lowest
    // index), one empty cluster at a time.
    Matrix sums = Matrix::Zero(k, points.cols());
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < n; ++i) {
      sums.row(run.labels[static_cast<std::size_t>(i)]) += points.row(i);
      sizes[static_cast<std::size_t>(run.labels[static_cast<std::size_t>(i)])] += 1;
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[static_cast<std::size_t>(c)] > 0) {
        run.centroids.row(c) = sums.row(c) / sizes[static_cast<std::size_t>(c)];
      }
    }
    for (int c = 0; c < k; ++c) {
      if (sizes[static_cast<std::size_t>(c)] > 0) continue;
      int far = 0;
      double far_d = -1.0;
      for (int i = 0; i < n; ++i) {
        double d = sq_dist(points, i, run.centroids, run.labels[static_cast<std::size_t>(i)]);
        if (d > far_d) {
          far_d = d;
          far = i;
        }
      }
      run.centroids.row(c) = points.row(far);
      run.labels[static_cast<std::size_t>(far)] = c;
    }
  }
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    buf[static_cast<std::size_t>(i)] = sq_dist(points, i, run.centroids, run.labels[static_cast<std::size_t>(i)]);
  }
  run.objective = pairwise_sum(buf);
  return run;
}

}  // namespace

KMeansResult kmeans(const Matrix& points, int k, int restarts, std::uint64_t seed, int max_iters) {
  int n = static_cast<int>(points.rows());
  if (k < 1) throw ConfigError("k must be >= 1, got " + std::to_string(k));
  if (n < k) {
    throw ConfigError("k-means needs at least k points, got n=" + std::to_string(n) +
                      " < k=" + std::to_string(k));
  }
  if (restarts < 1) throw ConfigError("restarts must be >= 1, got " + std::to_string(restarts));
  KMeansResult out;
  out.restart_objectives.resize(static_cast<std::size_t>(restarts));
  out.restart_labels.resize(static_cast<std::size_t>(restarts));
  double best = std::numeric_limits<double>::infinity();
  int best_r = 0;
  Matrix best_centroids;
  for (int r = 0; r < restarts; ++r) {
    SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(r)));
    LloydRun run = lloyd(points, k, rng, max_iters);
    out.restart_objectives[static_cast<std::size_t>(r)] = run.objective;
    out.restart_labels[static_cast<std::size_t>(r)] = run.labels;
    if (run.objective < best) {
      best = run.objective;
      best_r = r;
      best_centroids = run.centroids;
    }
  }
  out.labels = out.restart_labels[static_cast<std::size_t>(best_r)];
  out.centroids = best_centroids;
  out.objective = best;
  out.best_restart = best_r;
  return out;
}

namespace {

void mean_std(const std::vector<double>& xs, double& mean, double& stddev) {
  if (xs.empty()) {
    mean = 0.0;
    stddev = 0.0;
    return;
  }
  mean = pairwise_sum(xs) / static_cast<double>(xs.size());
  std::vector<double> sq(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) sq[i] = (xs[i] - mean) * (xs[i] - mean);
  stddev = std::sqrt(pairwise_sum(sq) / static_cast<double>(xs.size()));
}

RestartStats restart_stats_of(const KMeansResult& km) {
  RestartStats s;
  mean_std(km.restart_objectives, s.objective_mean, s.objective_std);
  std::vector<double> agree(km.restart_labels.size());
  for (std::size_t r = 0; r < km.restart_labels.size(); ++r) {
    agree[r] = 1.0 - error_rate(km.restart_labels[r], km.labels);
  }
  mean_std(agree, s.agreement_mean, s.agreement_std);
  return s;
}

std::string opts_echo(int k, const ClusterOpts& opts) {
  return "k=" + std::to_string(k) + " restarts=" + std::to_string(opts.restarts) +
         " seed=" + std::to_string(opts.seed) + " max_iters=" + std::to_string(opts.max_iters) +
         " row_normalize=" + (opts.row_normalize ? "true" : "false") +
         " shift=" + opts.shift.describe();
}

ClusteringResult finish_cluster(const Matrix& N, int k, const ClusterOpts& opts,
                                const std::string& echo_prefix) {
  Embedding emb = sym_eigh_topk(N, k);
  Matrix points = emb.vectors;
  if (opts.row_normalize) {
    for (int i = 0; i < points.rows(); ++i) {
      double norm = points.row(i).norm();
      if (norm > 0.0) points.row(i) /= norm;
    }
  }
  ClusteringResult out;
  out.embedding = emb;
  out.embedding.vectors = points;
  out.kmeans = kmeans(points, k, opts.restarts, opts.seed, opts.max_iters);
  out.labels = out.kmeans.labels;
  out.kmeans_objective = out.kmeans.objective;
  out.restart_stats = restart_stats_of(out.kmeans);
  out.config = echo_prefix + " " + opts_echo(k, opts);
  return out;
}

}  // namespace

ClusteringResult cluster_similarity(const Matrix& A, int k, const ClusterOpts& opts) {
  Matrix shifted = shift_gram(A, opts.shift);
  Matrix N = normalized_operator(shifted);
  return finish_cluster(N, k, opts, "similarity");
}

ClusteringResult cluster_biclique(const Matrix& data, const KernelSpec& spec, int m, int k,
                                  const ClusterOpts& opts) {
  if (m < 2 || m % 2 != 0) {
    throw ConfigError("the multi-way order must be an even integer >= 2, got " + std::to_string(m));
  }
  Matrix K = shift_gram(gram(data, spec), opts.shift);
  ScaledGram Km = biclique_gram_fast_scaled(K, m);
  Matrix N = normalized_operator(Km);
  return finish_cluster(N, k, opts,
                        "modeling=biclique kernel=" + spec.describe() + " m=" + std::to_string(m));
}

}  // namespace hyc
