#include "hyc/objectives.hpp"

#include <string>

#include "hyc/summation.hpp"
#include "hyc/tensor.hpp"

namespace hyc {

int validate_partition(const WeightedPartition& P) {
  int n = static_cast<int>(P.labels.size());
  if (n == 0) throw DataError("partition has no points");
  if (static_cast<int>(P.weights.size()) != n) {
    throw DataError("weights length " + std::to_string(P.weights.size()) +
                    " does not match label count " + std::to_string(n));
  }
  int k = 0;
  for (int l : P.labels) {
    if (l < 0) throw DataError("labels must be nonnegative");
    k = std::max(k, l + 1);
  }
  std::vector<int> sizes(static_cast<std::size_t>(k), 0);
  for (int l : P.labels) sizes[static_cast<std::size_t>(l)] += 1;
  for (int j = 0; j < k; ++j) {
    if (sizes[static_cast<std::size_t>(j)] == 0) {
      throw DataError("cluster " + std::to_string(j) + " is empty");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!(P.weights[i] > 0.0)) {
      throw DataError("weight of point " + std::to_string(i) + " is not positive");
    }
  }
  return k;
}

namespace {

Vector cluster_weights(const WeightedPartition& P, int k) {
  Vector s = Vector::Zero(k);
  for (std::size_t i = 0; i < P.labels.size(); ++i) s[P.labels[i]] += P.weights[static_cast<int>(i)];
  return s;
}

}  // namespace

Matrix weighted_indicator(const WeightedPartition& P) {
  int k = validate_partition(P);
  int n = static_cast<int>(P.labels.size());
  Vector s = cluster_weights(P, k);
  Matrix Y = Matrix::Zero(n, k);
  for (int i = 0; i < n; ++i) {
    Y(i, P.labels[static_cast<std::size_t>(i)]) =
        std::sqrt(P.weights[i] / s[P.labels[static_cast<std::size_t>(i)]]);
  }
  return Y;
}

// Shared combiner: objective = sum_i w_i Km_ii - sum_j (cluster cross sums)/s_j,
// evaluated from an explicit order-m gram (however it was produced).
namespace {

double objective_from_matrix(const Matrix& Km, const WeightedPartition& P) {
  int k = validate_partition(P);
  int n = static_cast<int>(P.labels.size());
  Vector s = cluster_weights(P, k);
  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = P.weights[i] * Km(i, i);
  double first = pairwise_sum(diag);
  double second = 0.0;
  for (int j = 0; j < k; ++j) {
    std::vector<double> cross;
    for (int r = 0; r < n; ++r) {
      if (P.labels[static_cast<std::size_t>(r)] != j) continue;
      for (int l = 0; l < n; ++l) {
        if (P.labels[static_cast<std::size_t>(l)] != j) continue;
        cross.push_back(P.weights[r] * P.weights[l] * Km(r, l));
      }
    }
    second += pairwise_sum(cross) / s[j];
  }
  return first - second;
}

}  // namespace

double wkk_gram(const Matrix& K, const WeightedPartition& P) {
  if (K.rows() != K.cols() || K.rows() != static_cast<long>(P.labels.size())) {
    throw DataError("gram matrix size does not match the partition");
  }
  return objective_from_matrix(K, P);
}

double wkk_feature(const Matrix& data, const WeightedPartition& P) {
  int k = validate_partition(P);
  int n = static_cast<int>(data.rows());
  if (n != static_cast<int>(P.labels.size())) {
    throw DataError("data row count does not match the partition");
  }
  Vector s = cluster_weights(P, k);
  Matrix means = Matrix::Zero(k, data.cols());
  for (int i = 0; i < n; ++i) {
    means.row(P.labels[static_cast<std::size_t>(i)]) += P.weights[i] * data.row(i);
  }
  for (int j = 0; j < k; ++j) means.row(j) /= s[j];
  std::vector<double> terms(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    terms[static_cast<std::size_t>(i)] =
        P.weights[i] * (data.row(i) - means.row(P.labels[static_cast<std::size_t>(i)])).squaredNorm();
  }
  return pairwise_sum(terms);
}

double multiway_wkk_direct(const Matrix& K, int m, const WeightedPartition& P,
                           long long max_tuples) {
  if (m < 2 || m % 2 != 0) {
    throw ConfigError("the multi-way order must be an even integer >= 2, got " + std::to_string(m));
  }
  int n = static_cast<int>(K.rows());
  std::size_t work = checked_pow_size(n, m);
  if (work > static_cast<std::size_t>(max_tuples)) {
    throw SizeGuardError("literal tuple enumeration needs " + std::to_string(work) +
                         " tuples, above the guard of " + std::to_string(max_tuples));
  }
  int h = m / 2;
  // Literal order-m gram: entry (i, l) sums the pair-sum kernel over every
  // companion tuple (u, v) in [0,n)^(h-1) x [0,n)^(h-1) around heads i, l.
  Matrix Km(n, n);
  std::vector<int> tuple(static_cast<std::size_t>(2 * h - 2), 0);
  std::vector<double> outer;
  std::vector<double> inner(static_cast<std::size_t>(h) * static_cast<std::size_t>(h));
  std::vector<int> left(static_cast<std::size_t>(h)), right(static_cast<std::size_t>(h));
  for (int i = 0; i < n; ++i) {
    for (int l = 0; l < n; ++l) {
      outer.clear();
      std::fill(tuple.begin(), tuple.end(), 0);
      left[0] = i;
      right[0] = l;
      do {
        for (int a = 1; a < h; ++a) left[static_cast<std::size_t>(a)] = tuple[static_cast<std::size_t>(a - 1)];
        for (int b = 1; b < h; ++b) right[static_cast<std::size_t>(b)] = tuple[static_cast<std::size_t>(h - 2 + b)];
        std::size_t t = 0;
        for (int a = 0; a < h; ++a)
          for (int b = 0; b < h; ++b)
            inner[t++] = K(left[static_cast<std::size_t>(a)], right[static_cast<std::size_t>(b)]);
        outer.push_back(pairwise_sum(inner));
      } while (detail::advance_index(tuple, n));
      Km(i, l) = pairwise_sum(outer);
    }
  }
  return objective_from_matrix(Km, P);
}

double multiway_wkk_trace(const Matrix& K, int m, const WeightedPartition& P) {
  Matrix Km = biclique_gram_fast(K, m);
  // Equal by expansion to: sum_i w_i Km_ii - trace(Y^T W^... Y); evaluated
  // through the same combiner so the two entry points share no code with the
  // literal enumeration above except the final reduction.
  int k = validate_partition(P);
  int n = static_cast<int>(P.labels.size());
  Vector sqw(n);
  for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(P.weights[i]);
  Matrix B = sqw.asDiagonal() * Km * sqw.asDiagonal();
  Matrix Y = weighted_indicator(P);
  std::vector<double> diag(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) diag[static_cast<std::size_t>(i)] = P.weights[i] * Km(i, i);
  double first = pairwise_sum(diag);
  double second = (Y.transpose() * B * Y).trace();
  (void)k;
  return first - second;
}

Matrix linear_feature_map(const Matrix& data, int m) {
  if (m < 2 || m % 2 != 0) {
    throw ConfigError("the multi-way order must be an even integer >= 2, got " + std::to_string(m));
  }
  int n = static_cast<int>(data.rows());
  int d = static_cast<int>(data.cols());
  Vector colsum(d);
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (int c = 0; c < d; ++c) {
    for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = data(i, c);
    colsum[c] = pairwise_sum(buf);
  }
  double scale = double_ipow(static_cast<double>(n), (m - 2) / 2);
  double mix = static_cast<double>(m - 2) / (2.0 * n);
  Matrix psi(n, d);
  for (int i = 0; i < n; ++i) {
    psi.row(i) = scale * (data.row(i) + mix * colsum.transpose());
  }
  return psi;
}

double psi_prime_objective(const Matrix& data, int m, const WeightedPartition& P) {
  return wkk_feature(linear_feature_map(data, m), P);
}

}  // namespace hyc
