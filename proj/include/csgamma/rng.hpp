#pragma once

#include <cstdint>

namespace csgamma {

/// Deterministic 64-bit generator (splitmix64 finalizer over a Weyl
/// sequence).  Integer-only state; floating point output is value / 2^64,
/// so streams are identical across platforms.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64()) * 0x1.0p-64; }

  /// Uniform in [lo, hi).
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [0, n); n must be positive.
  uint64_t next_below(uint64_t n) { return next_u64() % n; }

  /// Independent sub-stream derived from (seed, index), used to keep
  /// parallel or reordered work deterministic.
  static Rng substream(uint64_t seed, uint64_t index) {
    Rng mix(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return Rng(mix.next_u64());
  }

 private:
  uint64_t state_;
};

}  // namespace csgamma
