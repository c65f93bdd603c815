#include "skel/skeleton.hpp"

#include <algorithm>
#include <map>

namespace skel {

namespace {

std::string vector_string(const ExponentVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.arity(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void require_admissible(const MonomialIdeal& ideal, const ExponentVector& g) {
  if (g.arity() != ideal.arity()) throw ArityError("skeleton: g arity mismatch");
  for (int k = 0; k < g.arity(); ++k) {
    if (g[k] < 1) {
      throw PreconditionError("g " + vector_string(g) + " is too small: coordinate " +
                              std::to_string(k + 1) + " must be at least 1");
    }
  }
  for (const auto& a : ideal.generators()) {
    if (!divides(a, g)) {
      throw PreconditionError("g " + vector_string(g) + " is too small: generator " +
                              vector_string(a) + " is not below it");
    }
  }
}

}  // namespace

ExponentVector skeleton_admissible_g(const MonomialIdeal& ideal) {
  ExponentVector g = generator_join(ideal);
  std::vector<int> e = g.entries();
  for (int& v : e) v = std::max(v, 1);
  return ExponentVector(std::move(e));
}

MonomialIdeal skeleton_ideal(const MonomialIdeal& ideal, const ExponentVector& g, int j) {
  require_admissible(ideal, g);
  if (ideal.is_unit()) throw PreconditionError("skeleton ideal of the unit ideal is undefined");
  CharacteristicPoset poset = build_poset(ideal, MonomialIdeal::unit(ideal.arity()), g);
  int d = dimension_from_poset(poset);
  if (j < 0 || j > d) {
    throw PreconditionError("skeleton index j = " + std::to_string(j) +
                            " out of range [0, " + std::to_string(d) + "]");
  }
  std::vector<ExponentVector> extra;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (poset.rho_at(i) > j) extra.push_back(poset.points()[i]);
  }
  return add_generators(ideal, extra);
}

SkeletonChain skeleton_chain(const MonomialIdeal& ideal, const ExponentVector& g) {
  require_admissible(ideal, g);
  if (ideal.is_unit()) throw PreconditionError("skeleton chain of the unit ideal is undefined");
  CharacteristicPoset poset = build_poset(ideal, MonomialIdeal::unit(ideal.arity()), g);
  SkeletonChain chain;
  chain.g = g;
  chain.d = dimension_from_poset(poset);
  chain.ideals.reserve(static_cast<std::size_t>(chain.d) + 1);
  for (int j = 0; j <= chain.d; ++j) {
    std::vector<ExponentVector> extra;
    for (std::size_t i = 0; i < poset.size(); ++i) {
      if (poset.rho_at(i) > j) extra.push_back(poset.points()[i]);
    }
    MonomialIdeal level = add_generators(ideal, extra);
    CharacteristicPoset level_poset =
        build_poset(level, MonomialIdeal::unit(ideal.arity()), g);
    if (dimension_from_poset(level_poset) != j) {
      throw Error("skeleton chain: dim S/I_" + std::to_string(j) + " is not " +
                  std::to_string(j));
    }
    chain.ideals.push_back(std::move(level));
  }
  return chain;
}

std::vector<LayerSummand> layer_decomposition(const MonomialIdeal& ideal,
                                              const ExponentVector& g, int j) {
  MonomialIdeal base = skeleton_ideal(ideal, g, j);  // validates g and the range of j
  CharacteristicPoset poset = build_poset(base, MonomialIdeal::unit(ideal.arity()), g);

  // group the level set A = {b : rho(b) = j} by Z_b
  std::map<std::vector<int>, std::vector<ExponentVector>> classes;
  for (std::size_t i = 0; i < poset.size(); ++i) {
    if (poset.rho_at(i) == j) {
      classes[z_set(poset.points()[i], g)].push_back(poset.points()[i]);
    }
  }

  std::vector<LayerSummand> out;
  for (const auto& [z, members] : classes) {
    ExponentVector b_min = members.front();
    for (const auto& b : members) b_min = meet(b_min, b);
    // meet-closure of the class; the fold then yields its least element
    for (const auto& b : members) {
      for (const auto& b2 : members) {
        ExponentVector m = meet(b, b2);
        if (std::find(members.begin(), members.end(), m) == members.end()) {
          throw Error("layer class for Z is not meet-closed at " + vector_string(m));
        }
      }
    }
    if (std::find(members.begin(), members.end(), b_min) == members.end()) {
      throw Error("layer class has no least element");
    }
    std::vector<ExponentVector> ann_gens;
    for (const auto& a : base.generators()) ann_gens.push_back(clipped_diff(a, b_min));
    MonomialIdeal ann = minimalize(ideal.arity(), std::move(ann_gens));
    for (int k : y_set(b_min, g)) {
      ExponentVector pure = ExponentVector::zero(ideal.arity());
      std::vector<int> e = pure.entries();
      e[static_cast<std::size_t>(k)] = g[k] - b_min[k];
      if (!ann.contains(ExponentVector(std::move(e)))) {
        throw Error("annihilator misses the pure power of variable " + std::to_string(k + 1));
      }
    }
    out.push_back({std::move(b_min), z, std::move(ann)});
  }
  std::sort(out.begin(), out.end(), [](const LayerSummand& a, const LayerSummand& b) {
    return grlex_less(a.b_min, b.b_min);
  });
  return out;
}

DirectSumReport verify_layer_direct_sum(const MonomialIdeal& ideal, const ExponentVector& g,
                                        int j, const std::vector<LayerSummand>& summands) {
  DirectSumReport report;
  MonomialIdeal base = skeleton_ideal(ideal, g, j);
  MonomialIdeal upper = j >= 1 ? skeleton_ideal(ideal, g, j - 1) : MonomialIdeal::unit(ideal.arity());
  std::vector<ExponentVector> box = box_points(g);

  // pairwise: everything above two distinct roots already lies in I_j
  for (std::size_t i = 0; i < summands.size(); ++i) {
    for (std::size_t k = i + 1; k < summands.size(); ++k) {
      ExponentVector top = join(summands[i].b_min, summands[k].b_min);
      for (const auto& c : box) {
        if (divides(top, c) && !base.contains(c)) {
          report.message = "monomial " + std::to_string(i) + "/" + std::to_string(k) +
                           " overlap survives outside I_j";
          return report;
        }
      }
    }
  }

  // basis supports B_i = {b >= b_i : x^b not in I_j} within the box
  std::vector<int> owner(box.size(), -1);
  for (std::size_t s = 0; s < summands.size(); ++s) {
    for (std::size_t b = 0; b < box.size(); ++b) {
      if (divides(summands[s].b_min, box[b]) && !base.contains(box[b])) {
        if (owner[b] >= 0) {
          report.message = "basis supports of summands " + std::to_string(owner[b]) + " and " +
                           std::to_string(s) + " overlap";
          return report;
        }
        owner[b] = static_cast<int>(s);
      }
    }
  }
  report.direct = true;

  // the supports must tile the layer's poset P^g_{I_{j-1}/I_j}
  for (std::size_t b = 0; b < box.size(); ++b) {
    bool in_layer = upper.contains(box[b]) && !base.contains(box[b]);
    if (in_layer != (owner[b] >= 0)) {
      report.message = "layer point coverage mismatch at box index " + std::to_string(b);
      return report;
    }
  }
  report.covers = true;
  return report;
}

}  // namespace skel
