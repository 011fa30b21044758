// Dense cubical tensors (order-m, dimension-n) used as the desk-scale oracle
// side of the library: half-symmetry checks, mode-k products, the two
// contraction conventions, polynomial evaluation and a randomized
// semi-definiteness probe. Production code never touches these; they exist to
// cross-check the O(n^2) closed-form gram construction.
#pragma once

#include <cstdint>
#include <vector>

#include "hyc/common.hpp"

namespace hyc {

class CubicalTensor {
 public:
  // Dense zero tensor with dim^order entries (row-major index order).
  // Throws SizeGuardError if the entry count exceeds max_entries.
  CubicalTensor(int order, int dim, std::size_t max_entries = kDefaultOracleGuard);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t entry_count() const { return entries_.size(); }

  std::size_t linear_index(const std::vector<int>& idx) const;
  double at(const std::vector<int>& idx) const { return entries_[linear_index(idx)]; }
  double& at(const std::vector<int>& idx) { return entries_[linear_index(idx)]; }

  const std::vector<double>& entries() const { return entries_; }
  std::vector<double>& entries() { return entries_; }

  double frobenius_norm() const;

 private:
  int order_;
  int dim_;
  std::vector<double> entries_;
};

namespace detail {
// Row-major odometer: advances idx in place, returns false after the last
// tuple wraps around to all zeros.
inline bool advance_index(std::vector<int>& idx, int dim) {
  for (int pos = static_cast<int>(idx.size()) - 1; pos >= 0; --pos) {
    if (++idx[pos] < dim) return true;
    idx[pos] = 0;
  }
  return false;
}

// Canonical representative of the half-symmetry orbit: sort each half, then
// order the two halves lexicographically. This is the lexicographic minimum
// of the orbit, and the deduplication key used when turning tensors into
// hypergraph edges.
std::vector<int> canonical_half_form(const std::vector<int>& idx);
}  // namespace detail

// True iff every entry matches its orbit's canonical representative within
// tol (absolute): invariance under permutations inside each index half and
// under swapping the halves. Throws ConfigError for odd order.
bool is_half_symmetric(const CubicalTensor& tensor, double tol);

// Contract mode k (0-based) against v: result order drops by one.
CubicalTensor mode_k_product(const CubicalTensor& tensor, int k, const Vector& v);

// Contract every mode except one from each half (the first mode of each half
// stays free); all contracted modes are summed against the all-ones vector.
// Input must be half-symmetric (checked at half_sym_tol); the result matrix
// is exactly symmetric because only the upper triangle is accumulated (in a
// fixed lexicographic order) and then mirrored.
Matrix contract_biclique(const CubicalTensor& tensor, double half_sym_tol = 1e-9);

// Contraction convention for odd-order heuristic models: modes 0 and 1 stay
// free, the rest are summed out. Order-2 input is returned unchanged.
Matrix contract_gd(const CubicalTensor& tensor);

// Full multilinear form: sum over all tuples of T[t] * x[t_1] * ... * x[t_m].
double poly_eval(const CubicalTensor& tensor, const Vector& x);

// Randomized nonnegativity probe of the multilinear form over directions
// drawn uniformly from [-1,1]^n. A probe, not a proof. Even order only.
bool semidefinite_probe(const CubicalTensor& tensor, int trials, std::uint64_t seed);

}  // namespace hyc
