#pragma once

#include <cstddef>
#include <cstdint>

namespace docsim {

/// 64-bit linear congruential generator, state' = a * state + c (mod 2^64), with
/// Knuth's MMIX constants a = 6364136223846793005, c = 1442695040888963407.
///
/// Every random decision in the library (dataset shuffles, SVD start vectors)
/// draws from this generator so results are reproducible across platforms.
class Lcg64 {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit constexpr Lcg64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ = state_ * kMultiplier + kIncrement;
    return state_;
  }

  /// Uniform in [0, 1) from the top 53 bits.
  constexpr double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Index in [0, bound) from the top 32 bits by multiply-shift. bound must be < 2^32.
  constexpr std::size_t below(std::size_t bound) noexcept {
    return static_cast<std::size_t>(((next() >> 32) * static_cast<std::uint64_t>(bound)) >> 32);
  }

 private:
  std::uint64_t state_;
};

}  // namespace docsim
