#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace wsd {

// Thin wrapper over mt19937_64 with distribution code written out so that
// seeded results are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform in (0, 1]; never zero, so w/u is finite.
  double uniform_open_closed() { return 1.0 - uniform01(); }

  bool bernoulli(double p) { return uniform01() < p; }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    // Lemire's nearly-divisionless rejection method.
    unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * n;
    auto low = static_cast<std::uint64_t>(m);
    if (low < n) {
      const std::uint64_t threshold = -n % n;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(engine_()) * n;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Number of failures before the first success, success probability `q`.
  /// Mean (1 - q) / q.
  std::uint64_t geometric(double q) {
    if (q >= 1.0) return 0;
    const double u = uniform_open_closed();
    return static_cast<std::uint64_t>(std::floor(std::log(u) / std::log1p(-q)));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace wsd
