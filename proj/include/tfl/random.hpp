#pragma once

#include <cstdint>

namespace tfl {

/// SplitMix64 (Steele, Lea, Flood 2014). This exact algorithm is the reproducibility
/// contract for every seeded computation in the library:
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
/// below(n) rejects draws x < 2^64 mod n and returns x mod n.
/// split(i) seeds a child stream with next-output-of(SplitMix64(seed + (i+1) * golden)).
class SplitMix64 {
 public:
  static constexpr std::uint64_t golden = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) : state_(seed), seed_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += golden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      std::uint64_t x = next();
      if (x >= threshold) return x % n;
    }
  }

  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  std::uint64_t seed() const { return seed_; }

  /// Independent child stream number i, a function of the original seed only.
  SplitMix64 split(std::uint64_t i) const {
    SplitMix64 tmp(seed_ + (i + 1) * golden);
    return SplitMix64(tmp.next());
  }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
};

}  // namespace tfl
