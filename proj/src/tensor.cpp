#include "hyc/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyc/rng.hpp"
#include "hyc/summation.hpp"

namespace hyc {

CubicalTensor::CubicalTensor(int order, int dim, std::size_t max_entries)
    : order_(order), dim_(dim) {
  if (order < 1) throw ConfigError("tensor order must be >= 1, got " + std::to_string(order));
  if (dim < 1) throw ConfigError("tensor dimension must be >= 1, got " + std::to_string(dim));
  std::size_t count = checked_pow_size(dim, order);
  if (count > max_entries) {
    throw SizeGuardError("tensor with " + std::to_string(dim) + "^" + std::to_string(order) +
                         " entries exceeds the configured guard of " + std::to_string(max_entries));
  }
  entries_.assign(count, 0.0);
}

std::size_t CubicalTensor::linear_index(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != order_) {
    throw ConfigError("index tuple has " + std::to_string(idx.size()) + " entries, tensor order is " +
                      std::to_string(order_));
  }
  std::size_t lin = 0;
  for (int v : idx) {
    if (v < 0 || v >= dim_) {
      throw ConfigError("tensor index " + std::to_string(v) + " out of range [0, " +
                        std::to_string(dim_) + ")");
    }
    lin = lin * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(v);
  }
  return lin;
}

double CubicalTensor::frobenius_norm() const {
  // Chunked pairwise accumulation of squares: fixed reduction order, no
  // O(entries) scratch buffer.
  constexpr std::size_t kChunk = 4096;
  std::vector<double> partials;
  partials.reserve(entries_.size() / kChunk + 1);
  std::vector<double> buf;
  buf.reserve(kChunk);
  for (std::size_t start = 0; start < entries_.size(); start += kChunk) {
    std::size_t stop = std::min(entries_.size(), start + kChunk);
    buf.clear();
    for (std::size_t i = start; i < stop; ++i) buf.push_back(entries_[i] * entries_[i]);
    partials.push_back(pairwise_sum(buf));
  }
  if (partials.empty()) return 0.0;
  return std::sqrt(pairwise_sum(partials));
}

namespace detail {

std::vector<int> canonical_half_form(const std::vector<int>& idx) {
  std::size_t h = idx.size() / 2;
  std::vector<int> first(idx.begin(), idx.begin() + h);
  std::vector<int> second(idx.begin() + h, idx.end());
  std::sort(first.begin(), first.end());
  std::sort(second.begin(), second.end());
  if (second < first) first.swap(second);
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

}  // namespace detail

bool is_half_symmetric(const CubicalTensor& tensor, double tol) {
  if (tensor.order() % 2 != 0) {
    throw ConfigError("half-symmetry is defined for even orders only, got order " +
                      std::to_string(tensor.order()));
  }
  std::vector<int> idx(tensor.order(), 0);
  do {
    std::vector<int> canon = detail::canonical_half_form(idx);
    double a = tensor.entries()[tensor.linear_index(idx)];
    double b = tensor.entries()[tensor.linear_index(canon)];
    if (std::abs(a - b) > tol) return false;
  } while (detail::advance_index(idx, tensor.dim()));
  return true;
}

CubicalTensor mode_k_product(const CubicalTensor& tensor, int k, const Vector& v) {
  int m = tensor.order();
  int n = tensor.dim();
  if (k < 0 || k >= m) {
    throw ConfigError("mode index " + std::to_string(k) + " out of range for order " +
                      std::to_string(m));
  }
  if (static_cast<int>(v.size()) != n) {
    throw ConfigError("mode-product vector length " + std::to_string(v.size()) +
                      " does not match tensor dimension " + std::to_string(n));
  }
  if (m == 1) {
    // Full contraction to a scalar, held as an order-1, dim-1 tensor would
    // lose the dimension; keep the degenerate case out of scope.
    throw ConfigError("mode product of an order-1 tensor is a scalar; not supported");
  }
  CubicalTensor result(m - 1, n);
  std::vector<int> out(m - 1, 0);
  std::vector<int> in(m, 0);
  std::vector<double> buf(static_cast<std::size_t>(n));
  do {
    for (int pos = 0, o = 0; pos < m; ++pos) {
      if (pos == k) continue;
      in[pos] = out[o++];
    }
    for (int s = 0; s < n; ++s) {
      in[k] = s;
      buf[static_cast<std::size_t>(s)] = tensor.entries()[tensor.linear_index(in)] * v[s];
    }
    result.at(out) = pairwise_sum(buf);
  } while (detail::advance_index(out, n));
  return result;
}

Matrix contract_biclique(const CubicalTensor& tensor, double half_sym_tol) {
  int m = tensor.order();
  int n = tensor.dim();
  if (m % 2 != 0) {
    throw ConfigError("this contraction needs an even order, got " + std::to_string(m));
  }
  if (!is_half_symmetric(tensor, half_sym_tol)) {
    throw ConfigError("contraction input is not half-symmetric at tolerance " +
                      std::to_string(half_sym_tol));
  }
  Matrix M(n, n);
  if (m == 2) {
    // Nothing to contract; mirror the upper triangle so the result is
    // symmetric to the bit even if the input had rounding asymmetry.
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double v = tensor.entries()[tensor.linear_index({i, j})];
        M(i, j) = v;
        M(j, i) = v;
      }
    return M;
  }
  int h = m / 2;
  std::vector<int> idx(m);
  std::vector<int> rest(m - 2, 0);
  std::vector<double> buf;
  buf.reserve(checked_pow_size(n, m - 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      buf.clear();
      std::fill(rest.begin(), rest.end(), 0);
      // Free modes: first of each half (0 and h); the other m-2 modes run
      // over the full range in a fixed lexicographic order.
      do {
        idx[0] = i;
        idx[h] = j;
        for (int pos = 1, r = 0; pos < m; ++pos) {
          if (pos == h) continue;
          idx[pos] = rest[r++];
        }
        buf.push_back(tensor.entries()[tensor.linear_index(idx)]);
      } while (detail::advance_index(rest, n));
      double v = pairwise_sum(buf);
      M(i, j) = v;
      M(j, i) = v;
    }
  }
  return M;
}

Matrix contract_gd(const CubicalTensor& tensor) {
  int m = tensor.order();
  int n = tensor.dim();
  Matrix M(n, n);
  if (m == 2) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = tensor.entries()[tensor.linear_index({i, j})];
    return M;
  }
  std::vector<int> idx(m);
  std::vector<int> rest(m - 2, 0);
  std::vector<double> buf;
  buf.reserve(checked_pow_size(n, m - 2));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      buf.clear();
      std::fill(rest.begin(), rest.end(), 0);
      do {
        idx[0] = i;
        idx[1] = j;
        for (int pos = 2, r = 0; pos < m; ++pos) idx[pos] = rest[r++];
        buf.push_back(tensor.entries()[tensor.linear_index(idx)]);
      } while (detail::advance_index(rest, n));
      M(i, j) = pairwise_sum(buf);
    }
  }
  return M;
}

double poly_eval(const CubicalTensor& tensor, const Vector& x) {
  int m = tensor.order();
  int n = tensor.dim();
  if (static_cast<int>(x.size()) != n) {
    throw ConfigError("evaluation vector length " + std::to_string(x.size()) +
                      " does not match tensor dimension " + std::to_string(n));
  }
  constexpr std::size_t kChunk = 4096;
  std::vector<double> partials;
  std::vector<double> buf;
  buf.reserve(kChunk);
  std::vector<int> idx(m, 0);
  do {
    double term = tensor.entries()[tensor.linear_index(idx)];
    for (int pos = 0; pos < m; ++pos) term *= x[idx[pos]];
    buf.push_back(term);
    if (buf.size() == kChunk) {
      partials.push_back(pairwise_sum(buf));
      buf.clear();
    }
  } while (detail::advance_index(idx, n));
  if (!buf.empty()) partials.push_back(pairwise_sum(buf));
  if (partials.empty()) return 0.0;
  return pairwise_sum(partials);
}

bool semidefinite_probe(const CubicalTensor& tensor, int trials, std::uint64_t seed) {
  if (tensor.order() % 2 != 0) {
    throw ConfigError("the nonnegativity probe is defined for even orders only, got order " +
                      std::to_string(tensor.order()));
  }
  double threshold = -1e-8 * tensor.frobenius_norm();
  SplitMix64 rng(seed);
  Vector x(tensor.dim());
  for (int t = 0; t < trials; ++t) {
    for (int i = 0; i < tensor.dim(); ++i) x[i] = rng.uniform(-1.0, 1.0);
    if (poly_eval(tensor, x) < threshold) return false;
  }
  return true;
}

}  // namespace hyc
