#pragma once

#include <cstdint>

namespace fading {

// Counter-addressable random source built on the SplitMix64 finalizer.
// Every draw is a pure function of (seed, stream, index, draw), so any
// partition of the index range across threads reproduces the sequence a
// single-threaded loop would produce. This is the fixed generator family
// for all stochastic components; test fixtures depend on it.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : base_(finalize(finalize(seed + 0x9e3779b97f4a7c15ULL) ^
                       (stream * 0xda942042e4dd58b5ULL))) {}

  std::uint64_t bits(std::uint64_t index, unsigned draw) const {
    return finalize(base_ + index * 0x9e3779b97f4a7c15ULL +
                    (std::uint64_t(draw) + 1) * 0xda942042e4dd58b5ULL);
  }

  /// Uniform double in [0, 1), 53 random bits.
  double uniform(std::uint64_t index, unsigned draw) const {
    return double(bits(index, draw) >> 11) * 0x1.0p-53;
  }

  static std::uint64_t finalize(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t base_;
};

// Stream ids keep independent random uses of one seed decoupled.
namespace rng_stream {
inline constexpr std::uint64_t kDirections = 1;
inline constexpr std::uint64_t kPhases = 2;
inline constexpr std::uint64_t kRealizations = 3;
}  // namespace rng_stream

}  // namespace fading
