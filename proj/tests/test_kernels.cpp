// Base kernels and the closed-form order-m gram: hand values, frozen small
// cases, agreement with the literal tensor contraction, and spectra.
#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "hyc/common.hpp"
#include "hyc/kernels.hpp"
#include "hyc/rng.hpp"
#include "hyc/tensor.hpp"

using hyc::KernelSpec;
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

}  // namespace

TEST_CASE("base kernels match hand evaluations") {
  Vector x(2), y(2);
  x << 1.0, 0.0;
  y << 0.0, 1.0;
  CHECK(hyc::base_kernel_eval(KernelSpec::gaussian_spec(0.5), x, y) ==
        doctest::Approx(std::exp(-1.0)).epsilon(1e-15));

  Vector a(2), b(2);
  a << 1.0, 2.0;
  b << 3.0, 4.0;
  CHECK(hyc::base_kernel_eval(KernelSpec::linear_spec(), a, b) == doctest::Approx(11.0));
  CHECK(hyc::base_kernel_eval(KernelSpec::polynomial_spec(2, 1.0), a, b) ==
        doctest::Approx(144.0));

  Vector short_vec(1);
  short_vec << 1.0;
  CHECK_THROWS_AS(hyc::base_kernel_eval(KernelSpec::linear_spec(), a, short_vec),
                  hyc::DataError);
}

TEST_CASE("kernel specs validate their parameters and describe themselves") {
  CHECK_THROWS_AS(KernelSpec::gaussian_spec(0.0), hyc::ConfigError);
  CHECK_THROWS_AS(KernelSpec::gaussian_spec(-1.0), hyc::ConfigError);
  CHECK_THROWS_AS(KernelSpec::polynomial_spec(0, 1.0), hyc::ConfigError);

  CHECK(KernelSpec::gaussian_spec(1.0).describe() == "gaussian(gamma=1)");
  CHECK(KernelSpec::gaussian_spec(0.001).describe() == "gaussian(gamma=0.001)");
  CHECK(KernelSpec::polynomial_spec(3, 1.0).describe() == "polynomial(degree=3,offset=1)");
  CHECK(KernelSpec::linear_spec().describe() == "linear");
}

TEST_CASE("gram matrices are symmetric to the bit") {
  Matrix X = random_matrix(7, 3, 17);
  for (const KernelSpec& spec :
       {KernelSpec::gaussian_spec(0.7), KernelSpec::polynomial_spec(3, 1.0),
        KernelSpec::linear_spec()}) {
    Matrix K = hyc::gram(X, spec);
    REQUIRE(K.rows() == 7);
    for (int i = 0; i < K.rows(); ++i)
      for (int j = 0; j < i; ++j) CHECK(K(i, j) == K(j, i));
    // Spot-check one entry against the scalar evaluator.
    CHECK(K(2, 5) == hyc::base_kernel_eval(spec, X.row(2).transpose(), X.row(5).transpose()));
  }
}

TEST_CASE("non-finite kernel values are reported, not propagated") {
  Matrix X(2, 1);
  X << 1.0, 1.0;
  // (x.y + 1e308)^2 overflows to infinity.
  CHECK_THROWS_AS(hyc::gram(X, KernelSpec::polynomial_spec(2, 1e308)),
                  hyc::NumericalError);
}

TEST_CASE("order-4 gram of the 2x2 identity is the frozen [[10,6],[6,10]]") {
  Matrix K = Matrix::Identity(2, 2);
  Matrix K4 = hyc::biclique_gram_fast(K, 4);
  CHECK(K4(0, 0) == doctest::Approx(10.0));
  CHECK(K4(0, 1) == doctest::Approx(6.0));
  CHECK(K4(1, 0) == doctest::Approx(6.0));
  CHECK(K4(1, 1) == doctest::Approx(10.0));

  hyc::ScaledGram scaled = hyc::biclique_gram_fast_scaled(K, 4);
  CHECK(scaled.base == 2);
  CHECK(scaled.exponent == 2);
  CHECK(scaled.scale() == doctest::Approx(4.0));
  CHECK((scaled.materialize() - K4).norm() == 0.0);
}

TEST_CASE("order 2 returns the base gram bit-identically") {
  Matrix X = random_matrix(5, 3, 29);
  Matrix K = hyc::gram(X, hyc::KernelSpec::gaussian_spec(1.3));
  hyc::ScaledGram K2 = hyc::biclique_gram_fast_scaled(K, 2);
  CHECK(K2.exponent == 0);
  CHECK(K2.scale() == 1.0);
  CHECK((K2.values.array() == K.array()).all());
}

TEST_CASE("odd or sub-2 orders are rejected") {
  Matrix K = Matrix::Identity(3, 3);
  CHECK_THROWS_AS(hyc::biclique_gram_fast(K, 3), hyc::ConfigError);
  CHECK_THROWS_AS(hyc::biclique_gram_fast(K, 0), hyc::ConfigError);
  CHECK_THROWS_AS(hyc::biclique_gram_tensor(K, 5), hyc::ConfigError);
  Matrix rect(2, 3);
  rect.setZero();
  CHECK_THROWS_AS(hyc::biclique_gram_fast(rect, 4), hyc::DataError);
}

TEST_CASE("pair-sum evaluation agrees with the gram tensor entries") {
  Matrix X = random_matrix(4, 2, 41);
  KernelSpec spec = KernelSpec::gaussian_spec(0.9);
  Matrix K = hyc::gram(X, spec);
  hyc::CubicalTensor T = hyc::biclique_gram_tensor(K, 4);

  std::vector<Vector> xs = {X.row(0).transpose(), X.row(1).transpose()};
  std::vector<Vector> ts = {X.row(2).transpose(), X.row(0).transpose()};
  CHECK(hyc::biclique_eval(spec, xs, ts) ==
        doctest::Approx(T.at({0, 1, 2, 0})).epsilon(1e-14));

  std::vector<Vector> lop = {X.row(0).transpose()};
  CHECK_THROWS_AS(hyc::biclique_eval(spec, lop, ts), hyc::ConfigError);
  std::vector<Vector> empty;
  CHECK_THROWS_AS(hyc::biclique_eval(spec, empty, empty), hyc::ConfigError);
}

TEST_CASE("closed-form grams match the literal tensor contraction") {
  for (int n : {3, 4, 5}) {
    Matrix X = random_matrix(n, 3, 100 + static_cast<std::uint64_t>(n));
    for (const KernelSpec& spec :
         {KernelSpec::gaussian_spec(1.1), KernelSpec::linear_spec()}) {
      Matrix K = hyc::gram(X, spec);
      for (int m : {2, 4, 6}) {
        Matrix fast = hyc::biclique_gram_fast(K, m);
        Matrix slow = hyc::contract_biclique(hyc::biclique_gram_tensor(K, m));
        double rel = (fast - slow).cwiseAbs().maxCoeff() /
                     std::max(1.0, slow.cwiseAbs().maxCoeff());
        CHECK(rel <= 1e-10);
      }
    }
  }
}

TEST_CASE("order-m grams of PSD bases stay PSD up to rounding") {
  for (int trial = 0; trial < 5; ++trial) {
    Matrix X = random_matrix(6, 3, 500 + static_cast<std::uint64_t>(trial));
    Matrix K = hyc::gram(X, KernelSpec::gaussian_spec(0.5 + 0.3 * trial));
    for (int m = 2; m <= 20; m += 2) {
      hyc::ScaledGram Km = hyc::biclique_gram_fast_scaled(K, m);
      Eigen::SelfAdjointEigenSolver<Matrix> es(Km.values);
      CHECK(es.eigenvalues()[0] >= -1e-8 * Km.values.norm());
    }
  }
}

TEST_CASE("the order-insensitive gram variant has its own closed form") {
  Matrix K = Matrix::Identity(2, 2);
  Matrix Ks = hyc::symmetric_gram_fast(K, 4);
  CHECK(Ks(0, 0) == doctest::Approx(8.5));
  CHECK(Ks(0, 1) == doctest::Approx(7.5));
  CHECK(Ks(1, 0) == doctest::Approx(7.5));
  CHECK(Ks(1, 1) == doctest::Approx(8.5));

  CHECK_THROWS_AS(hyc::symmetric_gram_fast(K, 2), hyc::ConfigError);
  CHECK_THROWS_AS(hyc::symmetric_gram_fast(K, 5), hyc::ConfigError);
}

TEST_CASE("gram shifts repair negative entries and leave clean grams alone") {
  Matrix K(2, 2);
  K << 1.0, -2.0, -2.0, 1.0;

  Matrix lifted = hyc::shift_gram(K, hyc::ShiftSpec::min_to_zero());
  CHECK(lifted(0, 0) == doctest::Approx(3.0));
  CHECK(lifted(0, 1) == doctest::Approx(0.0));

  Matrix clean(2, 2);
  clean << 1.0, 0.5, 0.5, 1.0;
  CHECK((hyc::shift_gram(clean, hyc::ShiftSpec::min_to_zero()) - clean).norm() == 0.0);

  Matrix plus = hyc::shift_gram(K, hyc::ShiftSpec::add_constant(5.0));
  CHECK(plus(0, 1) == doctest::Approx(3.0));
  CHECK((hyc::shift_gram(K, hyc::ShiftSpec::none()) - K).norm() == 0.0);

  CHECK(hyc::ShiftSpec::none().describe() == "none");
  CHECK(hyc::ShiftSpec::min_to_zero().describe() == "min_to_zero");
  CHECK(hyc::ShiftSpec::add_constant(2.0).describe() == "add_constant(2)");
}
