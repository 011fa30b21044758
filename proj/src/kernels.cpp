#include "hyc/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "hyc/io.hpp"
#include "hyc/summation.hpp"

namespace hyc {

KernelSpec KernelSpec::gaussian_spec(double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("gaussian kernel needs gamma > 0, got " + format_double(gamma));
  KernelSpec s;
  s.kind = KernelKind::gaussian;
  s.gamma = gamma;
  return s;
}

KernelSpec KernelSpec::polynomial_spec(int degree, double offset) {
  if (degree < 1) throw ConfigError("polynomial kernel needs degree >= 1, got " + std::to_string(degree));
  KernelSpec s;
  s.kind = KernelKind::polynomial;
  s.degree = degree;
  s.offset = offset;
  return s;
}

KernelSpec KernelSpec::linear_spec() {
  KernelSpec s;
  s.kind = KernelKind::linear;
  return s;
}

std::string KernelSpec::describe() const {
  switch (kind) {
    case KernelKind::gaussian:
      return "gaussian(gamma=" + format_double(gamma) + ")";
    case KernelKind::polynomial:
      return "polynomial(degree=" + std::to_string(degree) + ",offset=" + format_double(offset) + ")";
    case KernelKind::linear:
      return "linear";
  }
  return "unknown";
}

double base_kernel_eval(const KernelSpec& spec, const Vector& x, const Vector& y) {
  if (x.size() != y.size()) {
    throw DataError("kernel arguments have different lengths: " + std::to_string(x.size()) +
                    " vs " + std::to_string(y.size()));
  }
  double value = 0.0;
  switch (spec.kind) {
    case KernelKind::gaussian:
      value = std::exp(-spec.gamma * (x - y).squaredNorm());
      break;
    case KernelKind::polynomial:
      value = double_ipow(x.dot(y) + spec.offset, spec.degree);
      break;
    case KernelKind::linear:
      value = x.dot(y);
      break;
  }
  if (!std::isfinite(value)) {
    throw NumericalError("kernel evaluation produced a non-finite value (" + spec.describe() + ")");
  }
  return value;
}

Matrix gram(const Matrix& data, const KernelSpec& spec) {
  int n = static_cast<int>(data.rows());
  Matrix K(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = base_kernel_eval(spec, data.row(i).transpose(), data.row(j).transpose());
      K(i, j) = v;
      K(j, i) = v;
    }
  }
  return K;
}

double biclique_eval(const KernelSpec& spec, const std::vector<Vector>& xs,
                     const std::vector<Vector>& ts) {
  if (xs.empty() || xs.size() != ts.size()) {
    throw ConfigError("pair-sum kernel needs two point sets of equal positive size, got " +
                      std::to_string(xs.size()) + " and " + std::to_string(ts.size()));
  }
  std::vector<double> buf;
  buf.reserve(xs.size() * ts.size());
  for (const Vector& x : xs)
    for (const Vector& t : ts) buf.push_back(base_kernel_eval(spec, x, t));
  return pairwise_sum(buf);
}

namespace {

void require_even_order(int m) {
  if (m < 2 || m % 2 != 0) {
    throw ConfigError("the multi-way order must be an even integer >= 2, got " + std::to_string(m));
  }
}

// Row sums and total sum of a symmetric matrix, pairwise-accumulated.
void row_stats(const Matrix& K, Vector& delta, double& rho) {
  int n = static_cast<int>(K.rows());
  delta.resize(n);
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(j)] = K(i, j);
    delta[i] = pairwise_sum(buf);
  }
  for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = delta[i];
  rho = pairwise_sum(buf);
}

}  // namespace

Matrix ScaledGram::materialize() const {
  return values * scale();
}

ScaledGram biclique_gram_fast_scaled(const Matrix& K, int m) {
  require_even_order(m);
  if (K.rows() != K.cols()) {
    throw DataError("gram matrix must be square, got " + std::to_string(K.rows()) + "x" +
                    std::to_string(K.cols()));
  }
  int n = static_cast<int>(K.rows());
  ScaledGram out;
  out.base = n;
  out.exponent = m - 2;
  if (m == 2) {
    out.values = K;
    return out;
  }
  Vector delta;
  double rho = 0.0;
  row_stats(K, delta, rho);
  double c1 = static_cast<double>(m - 2) / (2.0 * n);
  double c2 = static_cast<double>(m - 2) * static_cast<double>(m - 2) / (4.0 * n * n);
  double shift = c2 * rho;
  out.values.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = K(i, j) + c1 * (delta[i] + delta[j]) + shift;
      out.values(i, j) = v;
      out.values(j, i) = v;
    }
  }
  return out;
}

Matrix biclique_gram_fast(const Matrix& K, int m) {
  return biclique_gram_fast_scaled(K, m).materialize();
}

CubicalTensor biclique_gram_tensor(const Matrix& K, int m, std::size_t max_entries) {
  require_even_order(m);
  int n = static_cast<int>(K.rows());
  CubicalTensor T(m, n, max_entries);
  int h = m / 2;
  std::vector<int> idx(m, 0);
  std::vector<double> buf(static_cast<std::size_t>(h) * h);
  // Each orbit's value is computed once, on the canonical representative,
  // then copied to every member, so half-symmetry holds to the bit.
  do {
    if (idx != detail::canonical_half_form(idx)) continue;
    std::size_t t = 0;
    for (int a = 0; a < h; ++a)
      for (int b = 0; b < h; ++b) buf[t++] = K(idx[a], idx[h + b]);
    double value = pairwise_sum(buf);

    // Enumerate the orbit: permutations within each half, then the swap.
    std::vector<int> first(idx.begin(), idx.begin() + h);
    std::vector<int> second(idx.begin() + h, idx.end());
    std::vector<int> member(m);
    for (int swap = 0; swap < 2; ++swap) {
      std::vector<int> a = (swap == 0) ? first : second;
      std::vector<int> b = (swap == 0) ? second : first;
      std::sort(a.begin(), a.end());
      do {
        std::vector<int> bb = b;
        std::sort(bb.begin(), bb.end());
        do {
          std::copy(a.begin(), a.end(), member.begin());
          std::copy(bb.begin(), bb.end(), member.begin() + h);
          T.at(member) = value;
        } while (std::next_permutation(bb.begin(), bb.end()));
      } while (std::next_permutation(a.begin(), a.end()));
    }
  } while (detail::advance_index(idx, n));
  return T;
}

Matrix symmetric_gram_fast(const Matrix& K, int m) {
  require_even_order(m);
  if (m == 2) {
    throw ConfigError("the symmetric multi-way gram is defined for m >= 4 (the order-2 variant is not a kernel)");
  }
  int n = static_cast<int>(K.rows());
  Vector delta;
  double rho = 0.0;
  row_stats(K, delta, rho);
  double scale = double_ipow(static_cast<double>(n), m - 2) / 4.0;
  double c1 = static_cast<double>(m - 1) / n;
  double c2 = static_cast<double>(m - 1) * static_cast<double>(m - 1) / (static_cast<double>(n) * n);
  Matrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = scale * (K(i, j) + c1 * (delta[i] + delta[j]) + c2 * rho);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

ShiftSpec ShiftSpec::none() { return ShiftSpec{}; }

ShiftSpec ShiftSpec::min_to_zero() {
  ShiftSpec s;
  s.mode = Mode::min_to_zero;
  return s;
}

ShiftSpec ShiftSpec::add_constant(double c) {
  ShiftSpec s;
  s.mode = Mode::add_constant;
  s.constant = c;
  return s;
}

std::string ShiftSpec::describe() const {
  switch (mode) {
    case Mode::none:
      return "none";
    case Mode::min_to_zero:
      return "min_to_zero";
    case Mode::add_constant:
      return "add_constant(" + format_double(constant) + ")";
  }
  return "unknown";
}

Matrix shift_gram(const Matrix& K, const ShiftSpec& shift) {
  switch (shift.mode) {
    case ShiftSpec::Mode::none:
      return K;
    case ShiftSpec::Mode::min_to_zero: {
      double lo = K.minCoeff();
      if (lo >= 0.0) return K;
      return (K.array() - lo).matrix();
    }
    case ShiftSpec::Mode::add_constant:
      return (K.array() + shift.constant).matrix();
  }
  return K;
}

}  // namespace hyc
