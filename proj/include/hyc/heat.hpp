// Heat-kernel constructions on sampled manifolds: the scaled Gaussian heat
// gram, the even-order discrete Laplacian built from it, energy functionals
// (matrix form and literal tuple form), and a Laplace-Beltrami convergence
// experiment on the unit circle.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hyc/common.hpp"
#include "hyc/rng.hpp"

namespace hyc {

struct HeatConfig {
  double t = 1.0;        // diffusion time, > 0
  double alpha = 1.0;    // bandwidth exponent for schedules t_n = n^{-1/(2+alpha)}
  int m = 2;             // even order >= 2
  int manifold_dim = 1;  // intrinsic dimension d in the (4 pi t)^{d/2} normalizer
};

// Heat-kernel value exp(-||x-y||^2 / (4t)) / (4 pi t)^{d/2}. Throws
// ConfigError for t <= 0.
double gaussian_heat(double t, int dim, const Vector& x, const Vector& y);

// Dense heat gram of a point set (pairwise gaussian_heat values).
Matrix heat_gram(const Matrix& data, double t, int dim);

// Even-order discrete Laplacian L^(m) = D/(m/2) - A, where A is the
// order-m biclique gram of G and D = diag(A's row sums). For m = 2 this is
// the ordinary unnormalized graph Laplacian of G. Throws NumericalError on
// degenerate (nonpositive) degrees.
Matrix heat_operator(const Matrix& G, int m);

// Convenience wrapper: heat_operator of heat_gram(data, cfg.t,
// cfg.manifold_dim) at order cfg.m.
Matrix discrete_laplacian_matrix(const Matrix& data, const HeatConfig& cfg);

// Quadratic energy of the discrete Laplacian: f^T L^(m) f.
double energy(const Matrix& data, const HeatConfig& cfg, const Vector& f);

// Literal tuple-space energy of the order-m construction: with h = m/2,
// tuple similarity k(u, v) = sum_{a,b} G[u_a, v_b] over (u, v) in
// [0,n)^h x [0,n)^h, tuple degree D_k(u) = sum_v k(u, v), and
// F(u) = sum_a f(u_a),
//
//   S2(f) = sum_u (D_k(u)/h) F(u)^2 - sum_{u,v} k(u,v) F(u) F(v),
//
// the quadratic form of the Laplacian-shaped tuple operator (degree part
// divided by h, mirroring D/(m/2) - A). At m = 2 it coincides with the
// classic Dirichlet energy (1/2) sum G_ij (f_i - f_j)^2. Evaluated via a
// closed form, exact for all even m (cross-checked against direct tuple
// enumeration in the tests):
//   S2 = f^T (D - h^2 A) f
//        + 2 h (h-1) n^{2h-3} (delta^T f)(1^T f)
//        + h (h-1)(h-2) n^{2h-4} rho (1^T f)^2,
// where A is the order-m biclique gram of G, D its row-sum diagonal,
// delta = G's row sums, rho = total sum of G. At m = 2 this reduces to
// f^T (D - A) f and agrees with energy(); at m >= 4 the two quadratic forms
// genuinely differ (the tests record the gap).
double tuple_energy(const Matrix& G, int m, const Vector& f);

// The matrix whose action on f equals the companion-variable tuple sums of
// the order-m construction: with h = m/2 and the tuple notation of
// tuple_energy,
//   (Ltilde f)_i = sum_{u: u_1 = i} sum_v k(u,v) (F(u)/h - F(v)),
// which collapses (cross-checked against direct enumeration in the tests) to
//   Ltilde = D/h - h A + (h-1) n^{2h-3} (delta 1^T + 1 delta^T)
//            + (h-1)(h-2) n^{2h-4} rho 1 1^T.
// At m = 2 this reduces to D - A and coincides with heat_operator; at
// m >= 4 the two differ.
Matrix companion_sum_operator(const Matrix& G, int m);

// A sampled manifold with a test function and its analytic Laplacian.
struct ManifoldProblem {
  std::function<Matrix(int, SplitMix64&)> sample;  // n points as rows
  std::function<Vector(const Matrix&)> f;          // f at each sample row
  std::function<Vector(const Matrix&)> laplacian;  // analytic Laplace-Beltrami of f
  int manifold_dim = 1;
};

// Unit circle in R^2, f(theta) = sin(theta) (the y-coordinate), whose
// Laplace-Beltrami image is -sin(theta).
ManifoldProblem circle_sine_problem();

struct ConvergenceRow {
  int n = 0;
  double t = 0.0;          // bandwidth t_n = n^{-1/(2+alpha)}
  int seeds = 0;           // number of seeds aggregated
  double mean_error = 0.0; // mean over seeds of mean |C*u - laplacian|
  double std_error = 0.0;  // population std over seeds
};

struct ConvergenceReport {
  int m = 0;
  double alpha = 0.0;
  std::vector<ConvergenceRow> rows;  // ascending n
};

// Pointwise convergence of the rescaled discrete Laplacian to the analytic
// one. For each n in n_grid and each seed: sample n points by restarting the
// seed's stream (so the size grid shares sample prefixes - common random
// numbers keep the row-to-row differences low-variance), set
// t_n = n^{-1/(2+alpha)}, compute u = L^(m) f / (n t_n), fit the free scale C
// by least squares against the analytic target, and record the mean absolute
// residual |C u - target|. Rows aggregate the residuals over seeds; the mean
// residual shrinks as n grows.
ConvergenceReport convergence_experiment(const ManifoldProblem& problem,
                                         const std::vector<int>& n_grid,
                                         double alpha, int m,
                                         const std::vector<std::uint64_t>& seeds);

}  // namespace hyc
