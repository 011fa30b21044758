// Deterministic random number generation.
//
// We own the generator (SplitMix64) instead of using <random> distributions
// because the determinism contract requires identical streams across
// platforms and standard-library implementations. Derived streams keyed by a
// counter make parallel restarts / grid points order-independent.
#pragma once

#include <cmath>
#include <cstdint>

namespace hyc {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  // Uniform integer in [0, n). Rejection-free modulo is fine here: n is
  // always tiny compared to 2^64 so the bias is far below anything we test.
  int uniform_int(int n) {
    return static_cast<int>(next() % static_cast<std::uint64_t>(n));
  }

  // Box-Muller without caching, so the consumed stream length is a fixed
  // function of the number of calls.
  double normal() {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  std::uint64_t state_;
};

// Independent child stream: one master seed fans out to restarts, grid rows,
// experiment seeds etc. without any sequential coupling.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
  SplitMix64 mixer(master ^ (0x9E3779B97F4A7C15ULL * (counter + 1)));
  return mixer.next();
}

}  // namespace hyc
