#include "skel/poset.hpp"

#include <algorithm>

namespace skel {

int rho(const ExponentVector& b, const ExponentVector& g) {
  require_same_arity(b, g);
  int count = 0;
  for (int i = 0; i < b.arity(); ++i) {
    if (b[i] == g[i]) ++count;
  }
  return count;
}

std::vector<int> z_set(const ExponentVector& b, const ExponentVector& g) {
  require_same_arity(b, g);
  std::vector<int> out;
  for (int i = 0; i < b.arity(); ++i) {
    if (b[i] == g[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> y_set(const ExponentVector& b, const ExponentVector& g) {
  require_same_arity(b, g);
  std::vector<int> out;
  for (int i = 0; i < b.arity(); ++i) {
    if (b[i] != g[i]) out.push_back(i);
  }
  return out;
}

namespace {

std::string vector_string(const ExponentVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.arity(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

CharacteristicPoset build_poset(const MonomialIdeal& inner, const MonomialIdeal& outer,
                                const ExponentVector& g) {
  if (inner.arity() != outer.arity() || inner.arity() != g.arity()) {
    throw ArityError("build_poset: inner, outer and g must share one arity");
  }
  for (const auto& a : inner.generators()) {
    if (!divides(a, g)) {
      throw PreconditionError("g " + vector_string(g) +
                              " is too small: inner generator " + vector_string(a) +
                              " is not below it");
    }
  }
  for (const auto& b : outer.generators()) {
    if (!divides(b, g)) {
      throw PreconditionError("g " + vector_string(g) +
                              " is too small: outer generator " + vector_string(b) +
                              " is not below it");
    }
  }
  for (const auto& a : inner.generators()) {
    if (!outer.contains(a)) {
      throw PreconditionError("inner ideal is not contained in the outer ideal: generator " +
                              vector_string(a) + " lies outside");
    }
  }
  CharacteristicPoset poset(g, inner, outer);
  for (const auto& b : box_points(g)) {
    if (outer.contains(b) && !inner.contains(b)) {
      poset.rho_.push_back(rho(b, g));
      poset.points_.push_back(b);
    }
  }
  return poset;
}

bool CharacteristicPoset::is_point(const ExponentVector& b) const {
  return index_of(b).has_value();
}

std::optional<std::size_t> CharacteristicPoset::index_of(const ExponentVector& b) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), b, GrlexLess{});
  if (it != points_.end() && *it == b) {
    return static_cast<std::size_t>(it - points_.begin());
  }
  return std::nullopt;
}

int dimension_from_poset(const CharacteristicPoset& poset) {
  int best = -1;
  for (std::size_t i = 0; i < poset.size(); ++i) best = std::max(best, poset.rho_at(i));
  return best;
}

bool is_valid_interval(const CharacteristicPoset& poset, const ExponentVector& low,
                       const ExponentVector& high) {
  require_same_arity(low, high);
  if (!divides(low, high)) return false;
  return poset.is_point(low) && poset.is_point(high);
}

namespace {

// Indices of the poset points inside [low, high].
std::vector<std::size_t> interval_point_indices(const CharacteristicPoset& poset,
                                                const Interval& interval) {
  std::vector<std::size_t> out;
  const auto& pts = poset.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (divides(interval.low, pts[i]) && divides(pts[i], interval.high)) out.push_back(i);
  }
  return out;
}

}  // namespace

PartitionCheck validate_partition(const CharacteristicPoset& poset, const Partition& partition) {
  PartitionCheck check;
  for (std::size_t k = 0; k < partition.intervals.size(); ++k) {
    const auto& iv = partition.intervals[k];
    if (!is_valid_interval(poset, iv.low, iv.high)) {
      check.bad_interval = k;
      check.message = "interval " + std::to_string(k) + " [" + vector_string(iv.low) + "," +
                      vector_string(iv.high) + "] is not a valid interval of the poset";
      return check;
    }
  }
  std::vector<int> cover(poset.size(), 0);
  for (const auto& iv : partition.intervals) {
    for (std::size_t i : interval_point_indices(poset, iv)) ++cover[i];
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i] > 1) {
      check.duplicated = poset.points()[i];
      check.message = "point " + vector_string(poset.points()[i]) + " is covered " +
                      std::to_string(cover[i]) + " times";
      return check;
    }
  }
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i] == 0) {
      check.missed = poset.points()[i];
      check.message = "point " + vector_string(poset.points()[i]) + " is not covered";
      return check;
    }
  }
  check.valid = true;
  return check;
}

DecompositionCheck validate_decomposition_in_box(const MonomialIdeal& inner,
                                                 const MonomialIdeal& outer,
                                                 const StanleyDecomposition& dec,
                                                 const ExponentVector& bound) {
  DecompositionCheck check;
  const int n = bound.arity();
  auto in_space = [&](const StanleySpace& space, const ExponentVector& u) {
    if (!divides(space.root, u)) return false;
    for (int i = 0; i < n; ++i) {
      if (u[i] != space.root[i] &&
          std::find(space.vars.begin(), space.vars.end(), i) == space.vars.end()) {
        return false;
      }
    }
    return true;
  };
  for (const auto& u : box_points(bound)) {
    bool member = outer.contains(u) && !inner.contains(u);
    int covered = 0;
    for (const auto& space : dec.spaces) {
      if (in_space(space, u)) ++covered;
    }
    if (member && covered != 1) {
      check.message = "monomial " + vector_string(u) + " of the module is covered " +
                      std::to_string(covered) + " times";
      return check;
    }
    if (!member && covered != 0) {
      check.message = "monomial " + vector_string(u) + " outside the module is covered";
      return check;
    }
  }
  check.valid = true;
  return check;
}

StanleyDecomposition partition_to_decomposition(const CharacteristicPoset& poset,
                                                const Partition& partition) {
  PartitionCheck check = validate_partition(poset, partition);
  if (!check.valid) {
    throw PreconditionError("partition_to_decomposition: " + check.message);
  }
  const ExponentVector& g = poset.g();
  StanleyDecomposition dec;
  for (const auto& iv : partition.intervals) {
    std::vector<int> z = z_set(iv.high, g);
    // coordinates strictly between the endpoints that do not reach g
    std::vector<int> between;
    for (int k = 0; k < g.arity(); ++k) {
      if (iv.low[k] < iv.high[k] && iv.high[k] < g[k]) between.push_back(k);
    }
    std::vector<ExponentVector> roots;
    std::vector<int> cur = iv.low.entries();
    auto rec = [&](auto&& self, std::size_t pos) -> void {
      if (pos == between.size()) {
        roots.emplace_back(cur);
        return;
      }
      int k = between[pos];
      for (int v = iv.low[k]; v <= iv.high[k]; ++v) {
        cur[static_cast<std::size_t>(k)] = v;
        self(self, pos + 1);
      }
      cur[static_cast<std::size_t>(k)] = iv.low[k];
    };
    rec(rec, 0);
    std::sort(roots.begin(), roots.end(), GrlexLess{});
    for (auto& root : roots) dec.spaces.push_back({std::move(root), z});
  }
  return dec;
}

Partition decomposition_to_partition(const CharacteristicPoset& poset,
                                     const StanleyDecomposition& dec) {
  const ExponentVector& g = poset.g();
  ExponentVector bound = sum(g, ExponentVector(std::vector<int>(static_cast<std::size_t>(g.arity()), 1)));
  DecompositionCheck dc = validate_decomposition_in_box(poset.inner(), poset.outer(), dec, bound);
  if (!dc.valid) {
    throw PreconditionError("decomposition_to_partition: not a Stanley decomposition: " +
                            dc.message);
  }
  Partition partition;
  for (const auto& space : dec.spaces) {
    if (!divides(space.root, g)) continue;
    std::vector<int> high = space.root.entries();
    for (int k : space.vars) high[static_cast<std::size_t>(k)] = g[k];
    partition.intervals.push_back({space.root, ExponentVector(std::move(high))});
  }
  PartitionCheck check = validate_partition(poset, partition);
  if (!check.valid) {
    throw PreconditionError("decomposition_to_partition: produced family is not a partition: " +
                            check.message);
  }
  return partition;
}

}  // namespace skel
