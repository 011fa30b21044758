// Optimal label matching between two clusterings: confusion matrix plus an
// exact assignment solver (exhaustive permutations for small k, Jonker-style
// augmenting-path assignment above). Shared by the restart statistics and
// the evaluation error rate.
#pragma once

#include <vector>

#include "hyc/common.hpp"

namespace hyc {

// counts[a][b] = #points with pred label a and truth label b. Square,
// side = max(label alphabet sizes). Labels must be nonnegative and the
// alphabets at most 64. Throws DataError on length mismatch.
std::vector<std::vector<long long>> confusion_counts(
    const std::vector<int>& pred, const std::vector<int>& truth);

// Maximum total count achievable by assigning each pred label to a distinct
// truth label (exhaustive search for side <= 8, augmenting-path assignment
// otherwise; both exact).
long long best_assignment_agreement(
    const std::vector<std::vector<long long>>& counts);

// Fraction of points NOT matched under the best bijection between label
// alphabets. Symmetric in its arguments; 0 iff some bijection matches
// exactly.
double error_rate(const std::vector<int>& pred, const std::vector<int>& truth);

}  // namespace hyc
