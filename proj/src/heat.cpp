#include "hyc/heat.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hyc/io.hpp"
#include "hyc/kernels.hpp"
#include "hyc/summation.hpp"

namespace hyc {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;

void require_heat_order(int m) {
  if (m < 2 || m % 2 != 0) {
    throw ConfigError("the heat operator order must be an even integer >= 2, got " + std::to_string(m));
  }
}

}  // namespace

double gaussian_heat(double t, int dim, const Vector& x, const Vector& y) {
  if (!(t > 0.0)) throw ConfigError("diffusion time must be positive, got " + format_double(t));
  double norm = std::pow(4.0 * kPi * t, 0.5 * dim);
  return std::exp(-(x - y).squaredNorm() / (4.0 * t)) / norm;
}

Matrix heat_gram(const Matrix& data, double t, int dim) {
  if (!(t > 0.0)) throw ConfigError("diffusion time must be positive, got " + format_double(t));
  int n = static_cast<int>(data.rows());
  double norm = std::pow(4.0 * kPi * t, 0.5 * dim);
  Matrix G(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double v = std::exp(-(data.row(i) - data.row(j)).squaredNorm() / (4.0 * t)) / norm;
      G(i, j) = v;
      G(j, i) = v;
    }
  }
  return G;
}

namespace {

// Shared statistics for the closed forms below.
struct HeatParts {
  Matrix A;      // order-m gram of G (materialized)
  Vector D;      // row sums of A
  Vector delta;  // row sums of G
  double rho;    // total sum of G
};

HeatParts heat_parts(const Matrix& G, int m) {
  require_heat_order(m);
  HeatParts p;
  p.A = biclique_gram_fast(G, m);
  int n = static_cast<int>(G.rows());
  p.D.resize(n);
  p.delta.resize(n);
  std::vector<double> buf(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(j)] = p.A(i, j);
    p.D[i] = pairwise_sum(buf);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) buf[static_cast<std::size_t>(j)] = G(i, j);
    p.delta[i] = pairwise_sum(buf);
  }
  for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = p.delta[i];
  p.rho = pairwise_sum(buf);
  return p;
}

}  // namespace

Matrix heat_operator(const Matrix& G, int m) {
  HeatParts p = heat_parts(G, m);
  int n = static_cast<int>(G.rows());
  for (int i = 0; i < n; ++i) {
    if (!(p.D[i] > 0.0)) {
      throw NumericalError("degree of point " + std::to_string(i) +
                           " is nonpositive; the discrete Laplacian is undefined");
    }
  }
  Matrix L = -p.A;
  double h = 0.5 * m;
  L.diagonal() += p.D / h;
  return L;
}

Matrix discrete_laplacian_matrix(const Matrix& data, const HeatConfig& cfg) {
  require_heat_order(cfg.m);
  if (cfg.manifold_dim < 1) {
    throw ConfigError("manifold dimension must be >= 1, got " + std::to_string(cfg.manifold_dim));
  }
  return heat_operator(heat_gram(data, cfg.t, cfg.manifold_dim), cfg.m);
}

double energy(const Matrix& data, const HeatConfig& cfg, const Vector& f) {
  Matrix L = discrete_laplacian_matrix(data, cfg);
  if (f.size() != L.rows()) throw DataError("function vector length does not match the point count");
  return f.dot(L * f);
}

double tuple_energy(const Matrix& G, int m, const Vector& f) {
  HeatParts p = heat_parts(G, m);
  int n = static_cast<int>(G.rows());
  if (f.size() != n) throw DataError("function vector length does not match the point count");
  int h = m / 2;
  double dn = static_cast<double>(n);
  double quad = f.dot(p.D.asDiagonal() * f) - static_cast<double>(h) * h * f.dot(p.A * f);
  double total = quad;
  if (h >= 2) {
    double df = p.delta.dot(f);
    double sf = f.sum();
    total += 2.0 * h * (h - 1) * double_ipow(dn, 2 * h - 3) * df * sf;
    if (h >= 3) {
      total += static_cast<double>(h) * (h - 1) * (h - 2) * double_ipow(dn, 2 * h - 4) * p.rho * sf * sf;
    }
  }
  return total;
}

Matrix companion_sum_operator(const Matrix& G, int m) {
  HeatParts p = heat_parts(G, m);
  int n = static_cast<int>(G.rows());
  int h = m / 2;
  double dn = static_cast<double>(n);
  Matrix L = -static_cast<double>(h) * p.A;
  L.diagonal() += p.D / static_cast<double>(h);
  if (h >= 2) {
    double c1 = (h - 1) * double_ipow(dn, 2 * h - 3);
    Vector ones = Vector::Ones(n);
    L += c1 * (p.delta * ones.transpose() + ones * p.delta.transpose());
    if (h >= 3) {
      double c2 = static_cast<double>(h - 1) * (h - 2) * double_ipow(dn, 2 * h - 4) * p.rho;
      L += c2 * (ones * ones.transpose());
    }
  }
  return L;
}

ManifoldProblem circle_sine_problem() {
  ManifoldProblem p;
  p.manifold_dim = 1;
  p.sample = [](int n, SplitMix64& rng) {
    Matrix X(n, 2);
    for (int i = 0; i < n; ++i) {
      double theta = rng.uniform(0.0, 2.0 * kPi);
      X(i, 0) = std::cos(theta);
      X(i, 1) = std::sin(theta);
    }
    return X;
  };
  p.f = [](const Matrix& X) { return Vector(X.col(1)); };
  p.laplacian = [](const Matrix& X) { return Vector(-X.col(1)); };
  return p;
}

ConvergenceReport convergence_experiment(const ManifoldProblem& problem,
                                         const std::vector<int>& n_grid, double alpha, int m,
                                         const std::vector<std::uint64_t>& seeds) {
  require_heat_order(m);
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive, got " + format_double(alpha));
  if (n_grid.empty() || seeds.empty()) throw ConfigError("need at least one sample size and one seed");
  std::vector<int> sizes = n_grid;
  std::sort(sizes.begin(), sizes.end());
  ConvergenceReport report;
  report.m = m;
  report.alpha = alpha;
  for (std::size_t ni = 0; ni < sizes.size(); ++ni) {
    int n = sizes[ni];
    if (n < 2) throw ConfigError("sample sizes must be >= 2");
    double t_n = std::pow(static_cast<double>(n), -1.0 / (2.0 + alpha));
    std::vector<double> residuals(seeds.size());
    for (std::size_t si = 0; si < seeds.size(); ++si) {
      // Restart the seed's stream for every n: sample sizes share their
      // prefixes (common random numbers), so consecutive rows are positively
      // correlated and the error differences are far less noisy.
      SplitMix64 rng(seeds[si]);
      Matrix X = problem.sample(n, rng);
      Vector f = problem.f(X);
      Vector target = problem.laplacian(X);
      Matrix L = heat_operator(heat_gram(X, t_n, problem.manifold_dim), m);
      Vector u = (L * f) / (static_cast<double>(n) * t_n);
      double uu = u.squaredNorm();
      double C = (uu > 0.0) ? u.dot(target) / uu : 0.0;
      residuals[si] = (C * u - target).cwiseAbs().mean();
    }
    ConvergenceRow row;
    row.n = n;
    row.t = t_n;
    row.seeds = static_cast<int>(seeds.size());
    double mean = pairwise_sum(residuals) / static_cast<double>(residuals.size());
    std::vector<double> sq(residuals.size());
    for (std::size_t i = 0; i < residuals.size(); ++i) sq[i] = (residuals[i] - mean) * (residuals[i] - mean);
    row.mean_error = mean;
    row.std_error = std::sqrt(pairwise_sum(sq) / static_cast<double>(residuals.size()));
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hyc
