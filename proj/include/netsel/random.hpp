#pragma once

#include <array>
#include <cstdint>

namespace netsel {

/// SplitMix64 step (Steele, Lea, Flood 2014). Used to expand a 64-bit seed
/// into generator state and to derive independent per-trial seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed for trial `index` of a run seeded with `base`. Independent of the
/// order in which trials are evaluated.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

/// xoshiro256** 1.0 (Blackman and Vigna), state filled from four SplitMix64
/// outputs of the seed. The stream is defined by integer arithmetic only, so
/// a seed reproduces the same values on every platform and compiler.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits: (next() >> 11) * 2^-53.
  double uniform01();
  /// lo + (hi - lo) * uniform01(); returns lo exactly when lo == hi.
  double uniform(double lo, double hi);
  /// Uniform integer in [0, bound) by rejection; bound must be > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::array<std::uint64_t, 4> s_;
};

}  // namespace netsel
