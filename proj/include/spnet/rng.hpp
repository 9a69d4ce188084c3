#pragma once

#include <cstdint>
#include <string_view>

namespace spnet {

/// SplitMix64 finalizer. Used to derive substream seeds.
std::uint64_t splitmix64(std::uint64_t& state);

/// Mixes a master seed, a replicate index and a purpose tag into a substream seed.
/// The purpose tag is hashed with FNV-1a so derived seeds are stable across platforms.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index, std::string_view purpose);
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// xoshiro256** (Blackman & Vigna), state filled from SplitMix64(seed).
/// All distributions below are implemented here rather than taken from <random>,
/// whose distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform on [0,1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Exponential with the given rate.
  double exponential(double rate);
  /// Poisson(mean) by counting rate-1 exponential arrivals in [0, mean].
  /// O(mean) work; intended for means up to ~1e6.
  std::uint64_t poisson(double mean);

 private:
  std::uint64_t s_[4];
};

}  // namespace spnet
