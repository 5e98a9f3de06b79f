#pragma once

#include <array>
#include <cstdint>

namespace yule {

/// Derives a statistically independent child seed from (seed, index).
/// Pure counter-based mixing: the same pair always yields the same child,
/// and distinct indices yield decorrelated streams.
std::uint64_t split_stream(std::uint64_t seed, std::uint64_t index);

/// Philox-4x32-10 keyed counter block cipher (Salmon et al. constants).
std::array<std::uint32_t, 4> philox4x32(std::uint64_t key,
                                        std::uint64_t counter);

/// Deterministic random stream over a Philox counter. Output depends only
/// on the seed and the number of values drawn, never on sharing or
/// scheduling, which is what makes parallel replication reproducible.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : key_(seed) {}

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double next_uniform();

  /// Standard normal via inverse-CDF of next_uniform().
  double next_gaussian();

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::array<std::uint32_t, 4> block_{};
  int pos_ = 4;
};

}  // namespace yule
