#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace hypoent {

/// xoshiro256** seeded through splitmix64.
///
/// Streams are bit-exact for a given seed within this implementation. The
/// type models UniformRandomBitGenerator so it also works with <random>
/// distributions. A generator is single-owner state; give each thread its
/// own.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() noexcept;

  /// Uniform double in (0, 1]; never returns 0, so -log(u) is finite.
  double uniform_open_zero() noexcept;

  /// Exponential variate by inversion, -ln(U) / rate.
  double exponential(double rate) noexcept;

 private:
  std::array<std::uint64_t, 4> state_;
};

}  // namespace hypoent
