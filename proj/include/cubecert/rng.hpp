#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace cubecert {

/// Counter-based pseudorandom stream. Every draw is a pure function of
/// (seed, stream, counter), so concurrent users with distinct streams get
/// reproducible values regardless of evaluation order.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : state_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ULL))) {}

  std::uint64_t next_u64() { return mix(state_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  /// Uniform draw in [0, 1).
  double uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  /// Uniform barycentric coordinates over a k-vertex simplex
  /// (flat Dirichlet via exponential spacings).
  std::vector<double> barycentric(int k) {
    std::vector<double> w(k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      double u = uniform();
      while (u <= 0.0) u = uniform();
      w[i] = -std::log(u);
      sum += w[i];
    }
    for (double& x : w) x /= sum;
    return w;
  }

 private:
  // splitmix64 finalizer
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

}  // namespace cubecert
