#include "hyc/baselines.hpp"

#include <algorithm>
#include <cmath>

#include "hyc/io.hpp"

namespace hyc {

namespace {

// Fill every permutation of (i, j, l) with the same value. The generators
// below compute one value per sorted triple, so the result is fully
// symmetric to the bit.
void fill_symmetric(CubicalTensor& T, int i, int j, int l, double value) {
  int idx[3] = {i, j, l};
  std::sort(idx, idx + 3);
  do {
    T.at({idx[0], idx[1], idx[2]}) = value;
  } while (std::next_permutation(idx, idx + 3));
}

template <typename F>
CubicalTensor build_order3(int n, long long max_entries, F&& per_triple) {
  CubicalTensor T(3, n, static_cast<std::size_t>(max_entries));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int l = j; l < n; ++l) fill_symmetric(T, i, j, l, per_triple(i, j, l));
  return T;
}

}  // namespace

CubicalTensor gd_max_tensor(const Matrix& data, const KernelSpec& spec, long long max_entries) {
  Matrix K = gram(data, spec);
  int n = static_cast<int>(data.rows());
  return build_order3(n, max_entries, [&](int i, int j, int l) {
    return std::max(K(i, j), std::max(K(j, l), K(i, l)));
  });
}

CubicalTensor affine_subspace_tensor(const Matrix& data, double gamma, long long max_entries) {
  int n = static_cast<int>(data.rows());
  return build_order3(n, max_entries, [&](int i, int j, int l) {
    Eigen::Matrix3d M;
    Eigen::Matrix<double, Eigen::Dynamic, 3> X(data.cols(), 3);
    X.col(0) = data.row(i).transpose();
    X.col(1) = data.row(j).transpose();
    X.col(2) = data.row(l).transpose();
    M = X.transpose() * X;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es;
    es.computeDirect(M);
    double lambda_min = std::max(0.0, es.eigenvalues()[0]);
    return std::exp(-gamma * lambda_min);
  });
}

namespace {

// Distance from p to the affine hull of {a, b}: the line through them, or
// the single point when a and b coincide.
double hull_distance(const Vector& p, const Vector& a, const Vector& b) {
  Vector ab = b - a;
  double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  Vector ap = p - a;
  double s = ap.dot(ab) / len2;
  return (ap - s * ab).norm();
}

}  // namespace

CubicalTensor dh2_tensor(const Matrix& data, double gamma, long long max_entries) {
  int n = static_cast<int>(data.rows());
  return build_order3(n, max_entries, [&](int i, int j, int l) {
    Vector a = data.row(i).transpose();
    Vector b = data.row(j).transpose();
    Vector c = data.row(l).transpose();
    double s = hull_distance(a, b, c) + hull_distance(b, a, c) + hull_distance(c, a, b);
    return std::exp(-gamma * s);
  });
}

CubicalTensor gendot_tensor(const Matrix& data, long long max_entries) {
  int n = static_cast<int>(data.rows());
  int d = static_cast<int>(data.cols());
  return build_order3(n, max_entries, [&](int i, int j, int l) {
    double s = 0.0;
    for (int c = 0; c < d; ++c) s += data(i, c) * data(j, c) * data(l, c);
    return s;
  });
}

const char* modeling_name(Modeling m) {
  switch (m) {
    case Modeling::biclique:
      return "biclique";
    case Modeling::gd_max:
      return "gd-max";
    case Modeling::affine:
      return "affine";
    case Modeling::dh2:
      return "dh2";
    case Modeling::gendot:
      return "gendot";
  }
  return "unknown";
}

Modeling parse_modeling(const std::string& name) {
  if (name == "biclique") return Modeling::biclique;
  if (name == "gd-max") return Modeling::gd_max;
  if (name == "affine") return Modeling::affine;
  if (name == "dh2") return Modeling::dh2;
  if (name == "gendot") return Modeling::gendot;
  throw ConfigError("unknown modeling '" + name +
                    "' (expected biclique, gd-max, affine, dh2 or gendot)");
}

ClusteringResult cluster_order3(const Matrix& data, Modeling modeling, const KernelSpec& spec,
                                double gamma, int k, const ClusterOpts& opts) {
  CubicalTensor T(3, 1);
  std::string params;
  switch (modeling) {
    case Modeling::biclique:
      throw ConfigError("the biclique modeling is even-order; use the multi-way pipeline instead");
    case Modeling::gd_max:
      T = gd_max_tensor(data, spec);
      params = "kernel=" + spec.describe();
      break;
    case Modeling::affine:
      T = affine_subspace_tensor(data, gamma);
      params = "gamma=" + format_double(gamma);
      break;
    case Modeling::dh2:
      T = dh2_tensor(data, gamma);
      params = "gamma=" + format_double(gamma);
      break;
    case Modeling::gendot:
      T = gendot_tensor(data);
      params = "";
      break;
  }
  Matrix M = contract_gd(T);
  ClusterOpts effective = opts;
  if (effective.shift.mode == ShiftSpec::Mode::none) {
    effective.shift = ShiftSpec::min_to_zero();
  }
  ClusteringResult result = cluster_similarity(M, k, effective);
  std::string::size_type tail = result.config.find("k=");
  result.config = "modeling=" + std::string(modeling_name(modeling)) +
                  (params.empty() ? "" : " " + params) + " m=3 " +
                  (tail == std::string::npos ? result.config : result.config.substr(tail));
  return result;
}

}  // namespace hyc
