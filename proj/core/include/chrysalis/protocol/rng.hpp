#pragma once

#include <cstdint>

namespace chrysalis::protocol {

/// SplitMix64. Every seeded draw in the protocol goes through this generator
/// so that two implementations agree bit for bit.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  constexpr double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in (0, 1].
  constexpr double unit_open() { return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53; }
  constexpr double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// next() mod n; n must be nonzero.
  constexpr std::uint64_t below(std::uint64_t n) { return next() % n; }
  constexpr bool coin() { return (next() & 1U) != 0; }

  constexpr std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace chrysalis::protocol
