#pragma once

#include <cstdint>

namespace itemnet {

// splitmix64 (Steele/Lea/Vigna, public domain). Fixed here as the project
// generator: 64-bit state, bit-portable output, and substreams derivable
// from (seed, index) so per-row / per-restart sampling stays
// schedule-independent.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits. std:: distributions are not
  // bit-portable across standard libraries, so raw mapping is used instead.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); bias is below 2^-53 per draw.
  int below(int n) { return static_cast<int>(uniform() * static_cast<double>(n)); }

 private:
  std::uint64_t state_;
};

// splitmix64 finalizer as a standalone mixer.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent stream for (seed, index); index 0 is distinct from the raw
// seed stream.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) {
  return SplitMix64(mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1)));
}

}  // namespace itemnet
