#pragma once

#include <cstdint>

namespace resilmax {

/// splitmix64 generator. Chosen over <random> engines plus distributions
/// because its output is a fixed function of the seed on every platform,
/// which the byte-identical-output contracts of the generator and the
/// benchmark harness depend on.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform on {lo, ..., hi}, inclusive. Modulo bias is negligible for the
  /// small ranges used here (all well below 2^21).
  int uniform_int(int lo, int hi) {
    if (hi <= lo) return lo;
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  /// Uniform on the dyadic grid {1, 2, ..., 2^20} / 2^20, i.e. (0, 1].
  /// Grid weights keep sums and differences of desk-scale instances exact
  /// in binary64, so the exact-equality oracles (modular curvature = 0,
  /// myopic = optimal on modular instances) hold bitwise.
  double uniform_weight() {
    return static_cast<double>(uniform_int(1, 1 << 20)) /
           static_cast<double>(1 << 20);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Deterministic stream split: derives an independent seed from (seed, index)
/// so parallel trials can each own a generator.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  Rng r(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  r.next_u64();
  return r.next_u64();
}

}  // namespace resilmax
