// Order-3 heuristic modelings: entry-level hand checks of each tensor,
// name parsing, and the shared contraction + clustering path.
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "hyc/assignment.hpp"
#include "hyc/baselines.hpp"
#include "hyc/common.hpp"
#include "hyc/kernels.hpp"
#include "hyc/rng.hpp"

using hyc::KernelSpec;
using hyc::Matrix;
using hyc::Modeling;
using hyc::Vector;

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

}  // namespace

TEST_CASE("modeling names round-trip and unknown names are rejected") {
  for (Modeling m : {Modeling::biclique, Modeling::gd_max, Modeling::affine,
                     Modeling::dh2, Modeling::gendot}) {
    CHECK(hyc::parse_modeling(hyc::modeling_name(m)) == m);
  }
  CHECK(std::string(hyc::modeling_name(Modeling::gd_max)) == "gd-max");
  CHECK_THROWS_AS(hyc::parse_modeling("triangle"), hyc::ConfigError);
}

TEST_CASE("the max-kernel tensor takes the best pairwise value") {
  hyc::SplitMix64 rng(71);
  Matrix X(4, 2);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) X(i, j) = rng.uniform(-1.0, 1.0);
  KernelSpec spec = KernelSpec::gaussian_spec(0.8);
  Matrix K = hyc::gram(X, spec);
  hyc::CubicalTensor T = hyc::gd_max_tensor(X, spec);

  CHECK(T.at({0, 1, 2}) ==
        doctest::Approx(std::max({K(0, 1), K(0, 2), K(1, 2)})));
  CHECK(T.at({1, 1, 1}) == doctest::Approx(K(1, 1)));
  CHECK(T.at({0, 0, 3}) == doctest::Approx(std::max(K(0, 0), K(0, 3))));
  // Fully symmetric: all arrangements agree.
  std::vector<std::vector<int>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                         {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) CHECK(T.at(p) == T.at({0, 1, 2}));

  CHECK_THROWS_AS(hyc::gd_max_tensor(X, spec, 10), hyc::SizeGuardError);
}

TEST_CASE("the subspace-fit tensor sees rank, not distance") {
  // Two-dimensional data: any three points are linearly dependent, so the
  // smallest eigenvalue of the 3x3 gram vanishes and every weight is 1.
  hyc::SplitMix64 rng(72);
  Matrix flat(5, 2);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 2; ++j) flat(i, j) = rng.uniform(-1.0, 1.0);
  hyc::CubicalTensor T = hyc::affine_subspace_tensor(flat, 0.7);
  CHECK(T.at({0, 1, 2}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(T.at({2, 3, 4}) == doctest::Approx(1.0).epsilon(1e-12));

  // Orthonormal triple in 3D: the gram is the identity, lambda_min = 1.
  Matrix frame = Matrix::Identity(3, 3);
  hyc::CubicalTensor U = hyc::affine_subspace_tensor(frame, 0.7);
  CHECK(U.at({0, 1, 2}) == doctest::Approx(std::exp(-0.7)).epsilon(1e-12));
}

TEST_CASE("the summed-distance tensor matches hand geometry") {
  Matrix pts(3, 2);
  pts << 0.0, 0.0, 1.0, 1.0, 2.0, 2.0;  // collinear
  hyc::CubicalTensor T = hyc::dh2_tensor(pts, 0.2);
  CHECK(T.at({0, 1, 2}) == doctest::Approx(1.0).epsilon(1e-12));

  Matrix dup(3, 2);
  dup << 0.0, 0.0, 0.0, 0.0, 3.0, 4.0;  // duplicate pair + one point at distance 5
  hyc::CubicalTensor U = hyc::dh2_tensor(dup, 0.2);
  CHECK(U.at({0, 1, 2}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("the generalized dot tensor sums coordinate products") {
  Matrix X(2, 2);
  X << 1.0, 2.0, -1.0, 3.0;
  hyc::CubicalTensor T = hyc::gendot_tensor(X);
  // A[0,0,1] = 1*1*(-1) + 2*2*3 = 11; A[1,1,1] = -1 + 27 = 26.
  CHECK(T.at({0, 0, 1}) == doctest::Approx(11.0));
  CHECK(T.at({1, 1, 1}) == doctest::Approx(26.0));
  CHECK(T.at({0, 1, 0}) == T.at({0, 0, 1}));
}

TEST_CASE("the max-kernel modeling needs three groups to discriminate") {
  // With two far blobs every triple contains a same-blob pair, so the max
  // washes the signal out. Three blobs give all-cross triples a genuinely
  // lower value, and the contraction separates the groups.
  hyc::SplitMix64 rng(640);
  Matrix X(12, 2);
  std::vector<int> truth;
  double centers[3][2] = {{0.0, 0.0}, {8.0, 8.0}, {16.0, 0.0}};
  for (int i = 0; i < 12; ++i) {
    int g = i / 4;
    X(i, 0) = centers[g][0] + 0.3 * rng.normal();
    X(i, 1) = centers[g][1] + 0.3 * rng.normal();
    truth.push_back(g);
  }
  hyc::ClusterOpts opts;
  opts.restarts = 10;
  hyc::ClusteringResult gd = hyc::cluster_order3(
      X, Modeling::gd_max, KernelSpec::gaussian_spec(0.05), 0.05, 3, opts);
  CHECK(hyc::error_rate(gd.labels, truth) == doctest::Approx(0.0));
}

TEST_CASE("heuristic modelings drive the shared clustering path") {
  std::vector<int> truth;
  Matrix X = two_blobs(5, 5150, &truth);
  hyc::ClusterOpts opts;
  opts.restarts = 8;
  KernelSpec spec = KernelSpec::gaussian_spec(0.5);

  hyc::ClusteringResult dh =
      hyc::cluster_order3(X, Modeling::dh2, spec, 0.5, 2, opts);
  CHECK(hyc::error_rate(dh.labels, truth) == doctest::Approx(0.0));

  // gendot entries can be negative; the pipeline shifts before normalizing
  // and must return a valid labeling.
  hyc::ClusteringResult gen =
      hyc::cluster_order3(X, Modeling::gendot, spec, 0.5, 2, opts);
  REQUIRE(gen.labels.size() == static_cast<std::size_t>(X.rows()));
  for (int label : gen.labels) {
    CHECK(label >= 0);
    CHECK(label < 2);
  }

  CHECK_THROWS_WITH_AS(
      hyc::cluster_order3(X, Modeling::biclique, spec, 0.5, 2, opts),
      doctest::Contains("even-order"), hyc::ConfigError);
}
