#include "hyc/assignment.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hyc {

std::vector<std::vector<long long>> confusion_counts(const std::vector<int>& pred,
                                                     const std::vector<int>& truth) {
  if (pred.size() != truth.size()) {
    throw DataError("label vectors have different lengths: " + std::to_string(pred.size()) +
                    " vs " + std::to_string(truth.size()));
  }
  int side = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    if (pred[i] < 0 || truth[i] < 0) {
      throw DataError("labels must be nonnegative (position " + std::to_string(i) + ")");
    }
    side = std::max(side, std::max(pred[i], truth[i]) + 1);
  }
  if (side > 64) throw DataError("label alphabet too large: " + std::to_string(side) + " > 64");
  std::vector<std::vector<long long>> counts(static_cast<std::size_t>(side),
                                             std::vector<long long>(static_cast<std::size_t>(side), 0));
  for (std::size_t i = 0; i < pred.size(); ++i) {
    counts[static_cast<std::size_t>(pred[i])][static_cast<std::size_t>(truth[i])] += 1;
  }
  return counts;
}

namespace {

long long exhaustive_agreement(const std::vector<std::vector<long long>>& counts) {
  int side = static_cast<int>(counts.size());
  std::vector<int> perm(static_cast<std::size_t>(side));
  std::iota(perm.begin(), perm.end(), 0);
  long long best = std::numeric_limits<long long>::min();
  do {
    long long total = 0;
    for (int a = 0; a < side; ++a) total += counts[static_cast<std::size_t>(a)][static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])];
    best = std::max(best, total);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Exact min-cost assignment (augmenting paths with potentials) on a square
// cost matrix; O(side^3).
long long assignment_min_cost(const std::vector<std::vector<long long>>& cost) {
  int n = static_cast<int>(cost.size());
  const long long kInf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> u(static_cast<std::size_t>(n + 1), 0), v(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> p(static_cast<std::size_t>(n + 1), 0), way(static_cast<std::size_t>(n + 1), 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<long long> minv(static_cast<std::size_t>(n + 1), kInf);
    std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
    do {
      used[static_cast<std::size_t>(j0)] = 1;
      int i0 = p[static_cast<std::size_t>(j0)], j1 = 0;
      long long delta = kInf;
      for (int j = 1; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        long long cur = cost[static_cast<std::size_t>(i0 - 1)][static_cast<std::size_t>(j - 1)] -
                        u[static_cast<std::size_t>(i0)] - v[static_cast<std::size_t>(j)];
        if (cur < minv[static_cast<std::size_t>(j)]) {
          minv[static_cast<std::size_t>(j)] = cur;
          way[static_cast<std::size_t>(j)] = j0;
        }
        if (minv[static_cast<std::size_t>(j)] < delta) {
          delta = minv[static_cast<std::size_t>(j)];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[static_cast<std::size_t>(j)]) {
          u[static_cast<std::size_t>(p[static_cast<std::size_t>(j)])] += delta;
          v[static_cast<std::size_t>(j)] -= delta;
        } else {
          minv[static_cast<std::size_t>(j)] -= delta;
        }
      }
      j0 = j1;
    } while (p[static_cast<std::size_t>(j0)] != 0);
    do {
      int j1 = way[static_cast<std::size_t>(j0)];
      p[static_cast<std::size_t>(j0)] = p[static_cast<std::size_t>(j1)];
      j0 = j1;
    } while (j0);
  }
  long long total = 0;
  for (int j = 1; j <= n; ++j) {
    total += cost[static_cast<std::size_t>(p[static_cast<std::size_t>(j)] - 1)][static_cast<std::size_t>(j - 1)];
  }
  return total;
}

}  // namespace

long long best_assignment_agreement(const std::vector<std::vector<long long>>& counts) {
  int side = static_cast<int>(counts.size());
  if (side == 0) return 0;
  if (side <= 8) return exhaustive_agreement(counts);
  long long top = 0;
  for (const auto& row : counts)
    for (long long c : row) top = std::max(top, c);
  // Maximize agreement by minimizing (top - count).
  std::vector<std::vector<long long>> cost(counts.size(),
                                           std::vector<long long>(counts.size(), 0));
  for (std::size_t a = 0; a < counts.size(); ++a)
    for (std::size_t b = 0; b < counts.size(); ++b) cost[a][b] = top - counts[a][b];
  long long min_cost = assignment_min_cost(cost);
  return static_cast<long long>(side) * top - min_cost;
}

double error_rate(const std::vector<int>& pred, const std::vector<int>& truth) {
  if (pred.empty()) throw DataError("cannot score empty label vectors");
  auto counts = confusion_counts(pred, truth);
  long long agree = best_assignment_agreement(counts);
  return 1.0 - static_cast<double>(agree) / static_cast<double>(pred.size());
}

}  // namespace hyc
