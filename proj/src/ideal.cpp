#include "skel/ideal.hpp"

#include <algorithm>
#include <set>

namespace skel {

MonomialIdeal::MonomialIdeal(int arity) : arity_(arity) {
  if (arity < 1) throw Error("ring arity must be positive");
}

MonomialIdeal MonomialIdeal::unit(int arity) {
  return minimalize(arity, {ExponentVector::zero(arity)});
}

bool MonomialIdeal::contains(const ExponentVector& b) const {
  if (b.arity() != arity_) {
    throw ArityError("membership test: vector arity " + std::to_string(b.arity()) +
                     " does not match ideal arity " + std::to_string(arity_));
  }
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ExponentVector& a) { return divides(a, b); });
}

bool MonomialIdeal::contains_ideal(const MonomialIdeal& other) const {
  if (other.arity() != arity_) throw ArityError("ideal containment: arity mismatch");
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const ExponentVector& a) { return contains(a); });
}

MonomialIdeal minimalize(int arity, std::vector<ExponentVector> gens) {
  for (const auto& g : gens) {
    if (g.arity() != arity) {
      throw ArityError("generator arity " + std::to_string(g.arity()) +
                       " does not match ring arity " + std::to_string(arity));
    }
  }
  std::sort(gens.begin(), gens.end(), GrlexLess{});
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> minimal;
  // grlex-sorted, so a divisor never appears after its multiple
  for (const auto& g : gens) {
    bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                 [&](const ExponentVector& m) { return divides(m, g); });
    if (!redundant) minimal.push_back(g);
  }
  MonomialIdeal out(arity);
  out.gens_ = std::move(minimal);
  return out;
}

MonomialIdeal add_generators(const MonomialIdeal& ideal,
                             const std::vector<ExponentVector>& gens) {
  std::vector<ExponentVector> all = ideal.generators();
  all.insert(all.end(), gens.begin(), gens.end());
  return minimalize(ideal.arity(), std::move(all));
}

MonomialIdeal truncate_at_degree(const MonomialIdeal& ideal, int j) {
  std::vector<ExponentVector> out;
  for (const auto& u : ideal.generators()) {
    int need = std::max(0, j - u.total_degree());
    if (need == 0) {
      out.push_back(u);
      continue;
    }
    for (const auto& m : monomials_of_total_degree(ideal.arity(), need)) {
      out.push_back(sum(u, m));
    }
  }
  return minimalize(ideal.arity(), std::move(out));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<ExponentVector> out;
  out.reserve(ideal.generators().size());
  for (const auto& u : ideal.generators()) {
    std::vector<int> e(static_cast<std::size_t>(ideal.arity()));
    for (int i = 0; i < ideal.arity(); ++i) e[static_cast<std::size_t>(i)] = u[i] > 0 ? 1 : 0;
    out.emplace_back(std::move(e));
  }
  return minimalize(ideal.arity(), std::move(out));
}

int dimension_oracle(const MonomialIdeal& ideal) {
  const int n = ideal.arity();
  if (n > 24) {
    throw PreconditionError("dimension_oracle enumerates 2^n subsets; arity " +
                            std::to_string(n) + " exceeds the supported bound");
  }
  MonomialIdeal rad = radical(ideal);
  std::vector<std::uint32_t> supports;
  supports.reserve(rad.generators().size());
  for (const auto& u : rad.generators()) {
    std::uint32_t mask = 0;
    for (int i = 0; i < n; ++i) {
      if (u[i] > 0) mask |= (1u << i);
    }
    supports.push_back(mask);
  }
  int best = -1;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    bool face = std::none_of(supports.begin(), supports.end(),
                             [&](std::uint32_t s) { return (s & ~w) == 0; });
    if (face) best = std::max(best, static_cast<int>(__builtin_popcount(w)));
  }
  return best;
}

std::optional<std::vector<ExponentVector>> lcm_lattice_degrees_capped(
    const std::vector<MonomialIdeal>& ideals, std::size_t cap) {
  if (ideals.empty()) return std::vector<ExponentVector>{};
  const int n = ideals.front().arity();
  std::vector<ExponentVector> gens;
  for (const auto& ideal : ideals) {
    if (ideal.arity() != n) throw ArityError("lcm lattice: ideal arity mismatch");
    gens.insert(gens.end(), ideal.generators().begin(), ideal.generators().end());
  }
  std::set<ExponentVector, GrlexLess> lattice(gens.begin(), gens.end());
  // close under pairwise join with the generators; reaches all subset-joins
  std::vector<ExponentVector> frontier(lattice.begin(), lattice.end());
  while (!frontier.empty()) {
    std::vector<ExponentVector> next;
    for (const auto& v : frontier) {
      for (const auto& u : gens) {
        ExponentVector w = join(v, u);
        if (lattice.insert(w).second) {
          if (lattice.size() > cap) return std::nullopt;
          next.push_back(std::move(w));
        }
      }
    }
    frontier = std::move(next);
  }
  return std::vector<ExponentVector>(lattice.begin(), lattice.end());
}

std::vector<ExponentVector> lcm_lattice_degrees(const std::vector<MonomialIdeal>& ideals) {
  return *lcm_lattice_degrees_capped(ideals, static_cast<std::size_t>(-1));
}

ExponentVector generator_join(const MonomialIdeal& ideal) {
  ExponentVector g = ExponentVector::zero(ideal.arity());
  for (const auto& u : ideal.generators()) g = join(g, u);
  return g;
}

}  // namespace skel
