// Pairwise (tree) summation: stabilizes long accumulations and gives a fixed
// reduction order, so results do not depend on worker count or chunking.
#pragma once

#include <cstddef>
#include <vector>

namespace hyc {

inline double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 8) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& values) {
  return pairwise_sum(values.data(), values.size());
}

}  // namespace hyc
