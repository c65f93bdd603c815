#ifndef SKEL_RANDOM_IDEAL_HPP
#define SKEL_RANDOM_IDEAL_HPP

#include <cstdint>

#include "skel/ideal.hpp"

namespace skel {

/// splitmix64: tiny, deterministic across platforms (std distributions are
/// implementation-defined, which would break byte-identical reruns).
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound), bound >= 1. Desk-scale bounds; modulo bias is
  /// irrelevant at 2^64.
  std::uint32_t below(std::uint32_t bound) {
    return static_cast<std::uint32_t>(next() % bound);
  }

 private:
  std::uint64_t state_;
};

/// Deterministic, minimalized, never the unit ideal: generator vectors are
/// redrawn until nonzero. Generator count is uniform in [1, max_gens],
/// exponents uniform in [0, max_exp].
MonomialIdeal random_ideal(std::uint64_t seed, int arity, int max_gens, int max_exp);

}  // namespace skel

#endif
