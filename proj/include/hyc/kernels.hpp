// Base kernels, gram matrices, and the multi-way kernel built by summing a
// base kernel over all pairs between two m/2-sets of points ("biclique"
// pattern). The closed-form O(n^2) gram construction here is the production
// path of the whole library; the tensor module provides its oracle.
#pragma once

#include <string>
#include <vector>

#include "hyc/common.hpp"
#include "hyc/tensor.hpp"

namespace hyc {

enum class KernelKind { gaussian, polynomial, linear };

struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double gamma = 1.0;   // gaussian: exp(-gamma * |x - y|^2)
  int degree = 1;       // polynomial: (<x, y> + offset)^degree
  double offset = 0.0;

  static KernelSpec gaussian_spec(double gamma);
  static KernelSpec polynomial_spec(int degree, double offset);
  static KernelSpec linear_spec();

  std::string describe() const;
};

double base_kernel_eval(const KernelSpec& spec, const Vector& x, const Vector& y);

// K[i,j] = kernel(row i, row j); each pair computed once and mirrored, so the
// result is symmetric to the bit.
Matrix gram(const Matrix& data, const KernelSpec& spec);

// Multi-way kernel value: sum of base-kernel evaluations over all pairs
// between the two m/2-point sets.
double biclique_eval(const KernelSpec& spec, const std::vector<Vector>& xs,
                     const std::vector<Vector>& ts);

// Order-m gram in scaled representation: the true matrix is
// values * base^exponent with base = n and exponent = m-2. The pipeline works
// on `values` directly because degree normalization cancels any positive
// scale; materialize() is for oracle-scale comparisons.
struct ScaledGram {
  Matrix values;
  int base = 1;
  int exponent = 0;

  double scale() const { return double_ipow(static_cast<double>(base), exponent); }
  Matrix materialize() const;
};

// Closed-form order-m gram from the base gram K:
//   K_m[i,j] = n^(m-2) * ( K[i,j] + (m-2)/(2n) * (delta_i + delta_j)
//                          + (m-2)^2/(4n^2) * rho )
// with delta = row sums of K and rho the total sum, both accumulated with
// pairwise summation. Cost O(n^2), independent of m. Even m only; m = 2
// returns K itself (scale exponent 0), bit-identical.
ScaledGram biclique_gram_fast_scaled(const Matrix& K, int m);
Matrix biclique_gram_fast(const Matrix& K, int m);

// Dense order-m gram tensor of the multi-way kernel over the same data,
// entry (i_1..i_m) = sum over pairs K[i_a, i_{m/2+b}]. Oracle-scale only.
// Each entry is computed once per half-symmetry orbit (on the canonical
// representative) and copied to the rest of the orbit, so half-symmetry is
// exact to the bit.
CubicalTensor biclique_gram_tensor(const Matrix& K, int m,
                                   std::size_t max_entries = kDefaultOracleGuard);

// Symmetric (order-insensitive) variant of the closed-form gram, defined for
// even m >= 4:
//   Ks[i,j] = n^(m-2)/4 * ( K[i,j] + (m-1)/n * (delta_i + delta_j)
//                           + (m-1)^2/n^2 * rho ).
// m = 2 is rejected (the symmetric order-2 expression is not a kernel).
Matrix symmetric_gram_fast(const Matrix& K, int m);

struct ShiftSpec {
  enum class Mode { none, min_to_zero, add_constant };
  Mode mode = Mode::none;
  double constant = 0.0;

  static ShiftSpec none();
  static ShiftSpec min_to_zero();
  static ShiftSpec add_constant(double c);
  std::string describe() const;
};

// Entrywise constant shift used to repair grams with negative entries
// (possible with polynomial base kernels). min_to_zero shifts only when the
// minimum entry is negative.
Matrix shift_gram(const Matrix& K, const ShiftSpec& shift);

}  // namespace hyc
