#pragma once

#include <cstdint>

namespace simplex {

/// SplitMix64 (Steele/Lea/Flood): a Weyl sequence pushed through a 64-bit
/// multiply-xor finalizer. Pure integer arithmetic, so streams are
/// bit-identical on every platform; this is the generator all seeded
/// commands and test fixtures use.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [-1, 1).
  double uniform_pm1() noexcept { return 2.0 * uniform01() - 1.0; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform01(); }

  /// Decorrelated generator for instance `index` of a batch run. Counter
  /// based, so instances can be evaluated in any order (or in parallel)
  /// with identical per-instance streams.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
    SplitMix64 mix(seed ^ (0x9E3779B97F4A7C15ull * (index + 1)));
    return SplitMix64(mix.next());
  }

 private:
  std::uint64_t state_;
};

}  // namespace simplex
