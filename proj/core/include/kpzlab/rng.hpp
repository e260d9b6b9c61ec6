#pragma once

#include <cstdint>
#include <limits>

namespace kpzlab {

/// Counter-based random generator (Philox4x32-10).
///
/// A generator is addressed by (seed, stream): the seed is the 64-bit user
/// seed, the stream selects an independent substream (one per Monte Carlo
/// replica). Streams never overlap, draws are reproducible regardless of
/// execution order, and a generator is cheap enough to construct per replica.
class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream) noexcept;

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  /// Next 64 random bits.
  result_type operator()() noexcept;

  /// Uniform double in the open interval (0, 1).
  double uniform() noexcept;

  /// Uniform double in (a, b).
  double uniform(double a, double b) noexcept;

  /// Standard normal deviate (Box-Muller, pairs cached).
  double normal() noexcept;

  /// Exact Poisson deviate. Inversion for small means, PTRS transformed
  /// rejection for large ones; valid for mean in [0, ~1e9].
  std::uint64_t poisson(double mean) noexcept;

 private:
  struct Block {
    std::uint32_t w[4];
  };
  Block next_block() noexcept;

  std::uint32_t key_[2];
  std::uint32_t counter_[4];
  std::uint64_t buffer_[2];
  int buffered_ = 0;
  double cached_normal_ = 0.0;
  bool has_cached_normal_ = false;
};

}  // namespace kpzlab
