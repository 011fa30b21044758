// Spectral pipeline pieces: degree normalization, the deterministic
// eigensolver conventions, k-means reproducibility, and the end-to-end
// clustering entry points.
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "hyc/assignment.hpp"
#include "hyc/common.hpp"
#include "hyc/kernels.hpp"
#include "hyc/rng.hpp"
#include "hyc/spectral.hpp"

using hyc::Matrix;
using hyc::Vector;

namespace {

Matrix random_matrix(int rows, int cols, std::uint64_t seed) {
  hyc::SplitMix64 rng(seed);
  Matrix X(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) X(i, j) = rng.uniform(-1.0, 1.0);
  return X;
}

// Two tight blobs around (0,0) and (8,8), `per` points each, truth label =
// blob index.
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

}  // namespace

TEST_CASE("degree normalization divides by sqrt(row sums)") {
  Matrix A(2, 2);
  A << 2.0, 1.0, 1.0, 2.0;
  Matrix N = hyc::normalized_operator(A);
  CHECK((N - A / 3.0).cwiseAbs().maxCoeff() <= 1e-15);
  CHECK((N - N.transpose()).norm() == 0.0);
}

TEST_CASE("nonpositive degrees are a reported numerical failure") {
  Matrix A(2, 2);
  A << 0.0, 0.0, 0.0, 1.0;
  CHECK_THROWS_WITH_AS(hyc::normalized_operator(A), doctest::Contains("vertex 0"),
                       hyc::NumericalError);
  CHECK_THROWS_WITH_AS(hyc::normalized_operator(A), doctest::Contains("min_to_zero"),
                       hyc::NumericalError);
  Matrix rect(2, 3);
  rect.setOnes();
  CHECK_THROWS_AS(hyc::normalized_operator(rect), hyc::DataError);
}

TEST_CASE("scaled grams normalize without materializing the scale") {
  Matrix X = random_matrix(5, 3, 77);
  Matrix K = hyc::gram(X, hyc::KernelSpec::gaussian_spec(0.6));
  hyc::ScaledGram Km = hyc::biclique_gram_fast_scaled(K, 6);
  Matrix via_scaled = hyc::normalized_operator(Km);
  Matrix via_dense = hyc::normalized_operator(Km.materialize());
  CHECK((via_scaled - via_dense).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("the eigensolver returns descending pairs with a fixed sign") {
  Matrix M = Matrix::Zero(3, 3);
  M(0, 0) = 3.0;
  M(1, 1) = 1.0;
  M(2, 2) = 2.0;
  hyc::Embedding emb = hyc::sym_eigh_topk(M, 2);
  REQUIRE(emb.eigenvalues.size() == 2);
  CHECK(emb.eigenvalues[0] == doctest::Approx(3.0));
  CHECK(emb.eigenvalues[1] == doctest::Approx(2.0));
  // Sign convention: the largest-magnitude entry of each column is positive.
  CHECK(emb.vectors(0, 0) == doctest::Approx(1.0));
  CHECK(emb.vectors(2, 1) == doctest::Approx(1.0));

  Matrix S = random_matrix(6, 6, 13);
  S = Matrix(0.5 * (S + S.transpose()));
  hyc::Embedding full = hyc::sym_eigh_topk(S, 6);
  for (int j = 0; j < 6; ++j) {
    Vector v = full.vectors.col(j);
    CHECK((S * v - full.eigenvalues[j] * v).cwiseAbs().maxCoeff() <= 1e-10);
    int arg = 0;
    v.cwiseAbs().maxCoeff(&arg);
    CHECK(v[arg] > 0.0);
  }
  for (int j = 1; j < 6; ++j) CHECK(full.eigenvalues[j] <= full.eigenvalues[j - 1]);

  CHECK_THROWS_AS(hyc::sym_eigh_topk(M, 0), hyc::ConfigError);
  CHECK_THROWS_AS(hyc::sym_eigh_topk(M, 4), hyc::ConfigError);
  Matrix asym(2, 2);
  asym << 0.0, 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(hyc::sym_eigh_topk(asym, 1), hyc::NumericalError);
}

TEST_CASE("principal angles separate identical and orthogonal spans") {
  Matrix U = Matrix::Zero(4, 2);
  U(0, 0) = 1.0;
  U(1, 1) = 1.0;
  // Same span, rotated basis.
  Matrix V(4, 2);
  V.setZero();
  double c = std::cos(0.7), s = std::sin(0.7);
  V(0, 0) = c;
  V(1, 0) = s;
  V(0, 1) = -s;
  V(1, 1) = c;
  Vector angles = hyc::principal_angles(U, V);
  // acos near 1 flattens double precision to ~sqrt(eps); 1e-7 is the
  // realistic floor for an exactly shared span.
  CHECK(angles.cwiseAbs().maxCoeff() <= 1e-7);

  Matrix W = Matrix::Zero(4, 1);
  W(2, 0) = 1.0;
  Vector ortho = hyc::principal_angles(Matrix(U.col(0)), W);
  CHECK(ortho[0] == doctest::Approx(std::acos(0.0)));  // pi/2

  Matrix bad(3, 1);
  bad.setOnes();
  CHECK_THROWS_AS(hyc::principal_angles(U, bad), hyc::DataError);
}

TEST_CASE("k-means is reproducible and its restarts form a stable prefix") {
  std::vector<int> truth;
  Matrix X = two_blobs(6, 2024, &truth);

  hyc::KMeansResult a = hyc::kmeans(X, 2, 5, 42);
  hyc::KMeansResult b = hyc::kmeans(X, 2, 5, 42);
  CHECK(a.labels == b.labels);
  CHECK(a.objective == b.objective);
  CHECK(a.restart_objectives == b.restart_objectives);

  // Restart r depends only on (seed, r): more restarts extend the list
  // without changing earlier entries.
  hyc::KMeansResult c = hyc::kmeans(X, 2, 3, 42);
  REQUIRE(c.restart_objectives.size() == 3);
  REQUIRE(a.restart_objectives.size() == 5);
  for (int r = 0; r < 3; ++r)
    CHECK(c.restart_objectives[r] == a.restart_objectives[r]);

  // Separated blobs are recovered exactly.
  CHECK(hyc::error_rate(a.labels, truth) == doctest::Approx(0.0));
  CHECK(a.restart_labels.size() == 5);
  CHECK(a.best_restart >= 0);
  CHECK(a.best_restart < 5);

  CHECK_THROWS_AS(hyc::kmeans(X, 0, 1, 42), hyc::ConfigError);
  CHECK_THROWS_AS(hyc::kmeans(X, 13, 1, 42), hyc::ConfigError);
  CHECK_THROWS_AS(hyc::kmeans(X, 2, 0, 42), hyc::ConfigError);
}

TEST_CASE("block-diagonal similarities cluster exactly") {
  int n = 6;
  Matrix A = Matrix::Constant(n, n, 1e-6);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((i < 3) == (j < 3)) A(i, j) = 1.0;
  hyc::ClusterOpts opts;
  opts.restarts = 10;
  hyc::ClusteringResult result = hyc::cluster_similarity(A, 2, opts);
  std::vector<int> truth = {0, 0, 0, 1, 1, 1};
  CHECK(hyc::error_rate(result.labels, truth) == doctest::Approx(0.0));
  CHECK(result.restart_stats.agreement_mean == doctest::Approx(1.0));
  CHECK(result.restart_stats.objective_std == doctest::Approx(0.0));
  CHECK(result.embedding.eigenvalues.size() == 2);
  CHECK(result.config == "similarity k=2 restarts=10 seed=42 max_iters=300 "
                         "row_normalize=false shift=none");
}

TEST_CASE("the end-to-end pipeline at order 2 is plain kernel clustering") {
  std::vector<int> truth;
  Matrix X = two_blobs(5, 99, &truth);
  hyc::KernelSpec spec = hyc::KernelSpec::gaussian_spec(0.5);
  hyc::ClusterOpts opts;
  opts.restarts = 8;

  hyc::ClusteringResult via_pipeline = hyc::cluster_biclique(X, spec, 2, 2, opts);
  hyc::ClusteringResult via_gram =
      hyc::cluster_similarity(hyc::gram(X, spec), 2, opts);
  CHECK(via_pipeline.labels == via_gram.labels);
  CHECK(via_pipeline.kmeans_objective == via_gram.kmeans_objective);
  CHECK(hyc::error_rate(via_pipeline.labels, truth) == doctest::Approx(0.0));
}

TEST_CASE("higher even orders cluster the blobs too; odd orders are rejected") {
  std::vector<int> truth;
  Matrix X = two_blobs(5, 7, &truth);
  hyc::KernelSpec spec = hyc::KernelSpec::gaussian_spec(0.5);
  hyc::ClusterOpts opts;
  opts.restarts = 8;
  hyc::ClusteringResult r4 = hyc::cluster_biclique(X, spec, 4, 2, opts);
  CHECK(hyc::error_rate(r4.labels, truth) == doctest::Approx(0.0));

  CHECK_THROWS_WITH_AS(hyc::cluster_biclique(X, spec, 3, 2, opts),
                       doctest::Contains("even"), hyc::ConfigError);
}

TEST_CASE("row normalization is applied when requested") {
  std::vector<int> truth;
  Matrix X = two_blobs(5, 11, &truth);
  hyc::KernelSpec spec = hyc::KernelSpec::gaussian_spec(0.5);
  hyc::ClusterOpts plain;
  plain.restarts = 4;
  hyc::ClusterOpts rowed = plain;
  rowed.row_normalize = true;

  hyc::ClusteringResult a = hyc::cluster_biclique(X, spec, 2, 2, plain);
  hyc::ClusteringResult b = hyc::cluster_biclique(X, spec, 2, 2, rowed);
  // Same eigenvectors feed k-means, but the embedded rows differ.
  for (int i = 0; i < b.embedding.vectors.rows(); ++i) {
    // The result echoes the embedding k-means saw.
    CHECK(b.embedding.vectors.row(i).norm() == doctest::Approx(1.0).epsilon(1e-9));
  }
  CHECK(a.config != b.config);
  CHECK(hyc::error_rate(b.labels, truth) == doctest::Approx(0.0));
}
