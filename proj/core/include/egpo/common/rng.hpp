#pragma once

#include <cstdint>
#include <string_view>

namespace egpo {

/// Deterministic, platform-portable random stream (splitmix64 core).
///
/// All randomness in the project flows through explicitly constructed Rng
/// instances; nothing draws from ambient global state. Streams derived via
/// fork() are independent of each other and of the parent, so adding a new
/// consumer does not perturb existing ones.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform();

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [lo, hi] inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi);

  /// Standard normal via Box-Muller (pairs cached).
  double normal();

  /// Derive an independent named substream. Deterministic in (state seed, tag).
  Rng fork(std::string_view tag) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t state_;
  bool has_cached_normal_ = false;
  double cached_normal_ = 0.0;
};

/// FNV-1a 64-bit hash, used for substream derivation and config hashing.
std::uint64_t fnv1a64(std::string_view data);

}  // namespace egpo
