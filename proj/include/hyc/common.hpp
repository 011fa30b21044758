// Shared aliases, error types and small helpers used across the library.
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hyc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Upper bound on dense tensor entries for the oracle-scale code paths.
// Overridable through configuration (oracle.max_entries).
inline constexpr std::size_t kDefaultOracleGuard = 10000000;

// Error taxonomy, aligned with the CLI exit codes:
//   ConfigError -> 1 (usage / configuration, incl. size-guard),
//   DataError   -> 2 (unparseable or inconsistent input data),
//   NumericalError -> 3 (degenerate degrees, failed decompositions, ...).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested oracle-scale object exceeds the configured entry guard.
class SizeGuardError : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

// n^m with overflow checking, for sizing dense tensors.
inline std::size_t checked_pow_size(int dim, int order) {
  std::size_t result = 1;
  for (int i = 0; i < order; ++i) {
    if (dim != 0 && result > SIZE_MAX / static_cast<std::size_t>(dim)) {
      throw SizeGuardError("tensor size n^m overflows size_t (n=" +
                           std::to_string(dim) + ", m=" + std::to_string(order) + ")");
    }
    result *= static_cast<std::size_t>(dim);
  }
  return result;
}

// Exact-ish integer power in double (plain repeated multiplication so the
// result is identical on every platform).
inline double double_ipow(double base, int exponent) {
  double r = 1.0;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

std::string format_double(double value);

}  // namespace hyc
