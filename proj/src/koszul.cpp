#include "skel/koszul.hpp"

#include <algorithm>

#include "skel/exact_rank.hpp"
#include "skel/parallel.hpp"
#include "skel/skeleton.hpp"

namespace skel {

namespace {

bool in_module(const MonomialIdeal& inner, const MonomialIdeal& outer, const ExponentVector& b) {
  return outer.contains(b) && !inner.contains(b);
}

// a - e_W, or nullopt if some coordinate would go negative.
std::optional<ExponentVector> drop_set(const ExponentVector& a, std::uint32_t w) {
  std::vector<int> e = a.entries();
  for (int k = 0; k < a.arity(); ++k) {
    if (w & (1u << k)) {
      if (--e[static_cast<std::size_t>(k)] < 0) return std::nullopt;
    }
  }
  return ExponentVector(std::move(e));
}

// Basis of the degree-a strand in homological position i, as sorted bitmasks.
std::vector<std::uint32_t> strand_basis(const MonomialIdeal& inner, const MonomialIdeal& outer,
                                        const ExponentVector& a, int i) {
  const int n = a.arity();
  std::vector<std::uint32_t> basis;
  for (std::uint32_t w = 0; w < (1u << n); ++w) {
    if (__builtin_popcount(w) != i) continue;
    auto m = drop_set(a, w);
    if (m && in_module(inner, outer, *m)) basis.push_back(w);
  }
  return basis;
}

// The differential d_i : C_i -> C_{i-1} of the strand.
IntMatrix strand_differential(const MonomialIdeal& inner, const MonomialIdeal& outer,
                              const ExponentVector& a,
                              const std::vector<std::uint32_t>& cols,
                              const std::vector<std::uint32_t>& rows) {
  IntMatrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    std::uint32_t w = cols[c];
    int position = 0;
    for (int k = 0; k < a.arity(); ++k) {
      if (!(w & (1u << k))) continue;
      ++position;  // 1-based index of k within W
      std::uint32_t w2 = w & ~(1u << k);
      auto target = drop_set(a, w2);
      if (!target || !in_module(inner, outer, *target)) continue;
      auto r = std::lower_bound(rows.begin(), rows.end(), w2);
      if (r == rows.end() || *r != w2) continue;
      m.at(static_cast<std::size_t>(r - rows.begin()), c) = (position % 2 == 1) ? 1 : -1;
    }
  }
  return m;
}

void require_nontrivial_module(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  if (!outer.contains_ideal(inner)) {
    throw PreconditionError("inner ideal is not contained in the outer ideal");
  }
}

}  // namespace

int koszul_strand_rank(const MonomialIdeal& inner, const MonomialIdeal& outer,
                       const ExponentVector& a, int i, const FieldConfig& field) {
  const int n = a.arity();
  if (inner.arity() != n || outer.arity() != n) throw ArityError("koszul strand: arity mismatch");
  if (i < 0 || i > n) throw PreconditionError("koszul position out of range [0, n]");
  std::vector<std::uint32_t> basis = strand_basis(inner, outer, a, i);
  if (basis.empty()) return 0;
  std::vector<std::uint32_t> below =
      i > 0 ? strand_basis(inner, outer, a, i - 1) : std::vector<std::uint32_t>{};
  std::vector<std::uint32_t> above =
      i < n ? strand_basis(inner, outer, a, i + 1) : std::vector<std::uint32_t>{};
  int rank_in = below.empty()
                    ? 0
                    : matrix_rank(strand_differential(inner, outer, a, basis, below), field);
  int rank_out = above.empty()
                     ? 0
                     : matrix_rank(strand_differential(inner, outer, a, above, basis), field);
  return static_cast<int>(basis.size()) - rank_in - rank_out;
}

BettiTable betti_table(const MonomialIdeal& inner, const MonomialIdeal& outer,
                       const FieldConfig& field, unsigned jobs) {
  require_nontrivial_module(inner, outer);
  const int n = inner.arity();
  std::vector<ExponentVector> degrees = lcm_lattice_degrees({inner, outer});
  auto per_degree = parallel_map<std::vector<int>>(
      degrees.size(), jobs, [&](std::size_t idx) {
        std::vector<int> ranks(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i <= n; ++i) {
          ranks[static_cast<std::size_t>(i)] =
              koszul_strand_rank(inner, outer, degrees[idx], i, field);
        }
        return ranks;
      });
  BettiTable table;
  table.arity = n;
  table.field = field;
  for (int i = 0; i <= n; ++i) {
    for (std::size_t idx = 0; idx < degrees.size(); ++idx) {
      int r = per_degree[idx][static_cast<std::size_t>(i)];
      if (r > 0) table.entries.push_back({i, degrees[idx], r});
    }
  }
  return table;
}

int BettiTable::projective_dimension() const {
  if (entries.empty()) throw ZeroModuleError("projective dimension of the zero module");
  int p = 0;
  for (const auto& e : entries) p = std::max(p, e.i);
  return p;
}

int BettiTable::depth() const { return arity - projective_dimension(); }

int BettiTable::regularity() const {
  if (entries.empty()) throw ZeroModuleError("regularity of the zero module");
  int r = 0;
  for (const auto& e : entries) r = std::max(r, e.degree.total_degree() - e.i);
  return r;
}

int BettiTable::rank_at(int i, const ExponentVector& a) const {
  for (const auto& e : entries) {
    if (e.i == i && e.degree == a) return e.rank;
  }
  return 0;
}

int depth(const MonomialIdeal& inner, const MonomialIdeal& outer, const FieldConfig& field) {
  BettiTable table = betti_table(inner, outer, field);
  if (table.zero_module()) throw ZeroModuleError("depth of the zero module");
  return table.depth();
}

int module_dimension(const MonomialIdeal& inner, const MonomialIdeal& outer) {
  require_nontrivial_module(inner, outer);
  ExponentVector g = join(generator_join(inner), generator_join(outer));
  return dimension_from_poset(build_poset(inner, outer, g));
}

bool is_cohen_macaulay(const MonomialIdeal& inner, const MonomialIdeal& outer,
                       const FieldConfig& field) {
  int dim = module_dimension(inner, outer);
  if (dim == -1) throw ZeroModuleError("Cohen-Macaulay test on the zero module");
  return depth(inner, outer, field) == dim;
}

int depth_via_skeletons(const MonomialIdeal& ideal, const ExponentVector& g,
                        const FieldConfig& field) {
  if (ideal.is_unit()) throw PreconditionError("depth_via_skeletons needs a proper ideal");
  SkeletonChain chain = skeleton_chain(ideal, g);
  MonomialIdeal ring = MonomialIdeal::unit(ideal.arity());
  int best = -1;
  std::vector<bool> cm(static_cast<std::size_t>(chain.d) + 1, false);
  for (int j = 0; j <= chain.d; ++j) {
    cm[static_cast<std::size_t>(j)] =
        depth(chain.ideals[static_cast<std::size_t>(j)], ring, field) == j;
    if (cm[static_cast<std::size_t>(j)]) best = j;
  }
  for (int j = 0; j <= best; ++j) {
    if (!cm[static_cast<std::size_t>(j)]) {
      throw Error("S/I_" + std::to_string(j) + " fails to be Cohen-Macaulay below the maximum");
    }
  }
  return best;
}

int regularity(const MonomialIdeal& ideal, const FieldConfig& field) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("regularity needs a nonzero proper ideal");
  }
  return betti_table(MonomialIdeal(ideal.arity()), ideal, field).regularity();
}

bool has_linear_resolution(const MonomialIdeal& ideal, const FieldConfig& field) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("linear resolution test needs a nonzero proper ideal");
  }
  int t = ideal.generators().front().total_degree();
  for (const auto& u : ideal.generators()) {
    if (u.total_degree() != t) return false;
  }
  return regularity(ideal, field) == t;
}

int min_linear_truncation_degree(const MonomialIdeal& ideal, const FieldConfig& field) {
  if (ideal.is_zero() || ideal.is_unit()) {
    throw PreconditionError("truncation scan needs a nonzero proper ideal");
  }
  int start = 0;
  for (const auto& u : ideal.generators()) start = std::max(start, u.total_degree());
  // reg(I) <= |join of generators|, so the scan below always terminates
  int cap = generator_join(ideal).total_degree() + 1;
  for (int j = start; j <= cap; ++j) {
    if (has_linear_resolution(truncate_at_degree(ideal, j), field)) return j;
  }
  throw Error("no linear truncation found below the lcm degree bound");
}

long long hilbert_numerator_coefficient(const MonomialIdeal& inner, const MonomialIdeal& outer,
                                        const ExponentVector& a) {
  auto ideal_term = [&](const MonomialIdeal& ideal) {
    const auto& gens = ideal.generators();
    if (gens.size() > 25) {
      throw PreconditionError("inclusion-exclusion over " + std::to_string(gens.size()) +
                              " generators is not supported");
    }
    long long total = 0;
    for (std::uint32_t mask = 1; mask < (1u << gens.size()); ++mask) {
      ExponentVector l = ExponentVector::zero(ideal.arity());
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (mask & (1u << k)) l = join(l, gens[k]);
      }
      if (l == a) total += (__builtin_popcount(mask) % 2 == 1) ? 1 : -1;
    }
    return total;
  };
  return ideal_term(outer) - ideal_term(inner);
}

}  // namespace skel
