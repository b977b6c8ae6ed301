#pragma once

#include <cstdint>

namespace rept {

// 64-bit finalizer with full avalanche (the murmur3/splitmix style mixer).
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

// Stateless keyed draw: a pure function of (seed, stream, counter). Used
// wherever a decision must not depend on evaluation order or thread
// scheduling.
inline constexpr std::uint64_t keyed_u64(std::uint64_t seed, std::uint64_t stream,
                                         std::uint64_t counter) {
  std::uint64_t x = mix64(seed + 0x9e3779b97f4a7c15ULL);
  x = mix64(x ^ stream);
  return mix64(x + counter * 0x9e3779b97f4a7c15ULL);
}

// Unbiased-enough reduction of a uniform 64-bit word onto [0, n): the
// multiply-shift trick. Deviation from uniform is at most n / 2^64.
inline constexpr std::uint64_t reduce_u64(std::uint64_t x, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(x) * static_cast<unsigned __int128>(n)) >> 64);
}

// Small sequential generator (splitmix64). Cheap to seed, no warm-up.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix64(state_);
  }

  // Uniform on [0, n), n > 0.
  std::uint64_t next_below(std::uint64_t n) { return reduce_u64(next(), n); }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

}  // namespace rept
