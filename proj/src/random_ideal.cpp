#include "skel/random_ideal.hpp"

#include <algorithm>

namespace skel {

MonomialIdeal random_ideal(std::uint64_t seed, int arity, int max_gens, int max_exp) {
  if (arity < 1 || max_gens < 1 || max_exp < 1) {
    throw PreconditionError("random_ideal parameters must be positive");
  }
  SplitMix64 rng(seed);
  int count = 1 + static_cast<int>(rng.below(static_cast<std::uint32_t>(max_gens)));
  std::vector<ExponentVector> gens;
  gens.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    std::vector<int> e(static_cast<std::size_t>(arity));
    do {
      for (int k = 0; k < arity; ++k) {
        e[static_cast<std::size_t>(k)] =
            static_cast<int>(rng.below(static_cast<std::uint32_t>(max_exp) + 1));
      }
    } while (std::all_of(e.begin(), e.end(), [](int v) { return v == 0; }));
    gens.emplace_back(e);
  }
  return minimalize(arity, std::move(gens));
}

}  // namespace skel
