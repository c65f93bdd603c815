#ifndef SKEL_SKELETON_HPP
#define SKEL_SKELETON_HPP

#include <string>
#include <vector>

#include "skel/poset.hpp"

namespace skel {

/// join(G(I)) ∨ (1,...,1). Skeleton constructions need every g(k) >= 1:
/// a coordinate with g(k) = 0 forces rho(0) >= 1 and collapses I_0 to the
/// unit ideal, breaking dim S/I_j = j.
ExponentVector skeleton_admissible_g(const MonomialIdeal& ideal);

/// The jth skeleton ideal I_j: I together with all x^b, b <= g, x^b not in I,
/// rho(b) > j. Generating from the box suffices: rho(b∧g) >= rho(b) and
/// b∧g <= b for arbitrary b. Requires g skeleton-admissible and 0 <= j <= d.
MonomialIdeal skeleton_ideal(const MonomialIdeal& ideal, const ExponentVector& g, int j);

/// The chain I = I_d ⊂ I_{d-1} ⊂ ... ⊂ I_0 with dim S/I_j = j.
struct SkeletonChain {
  ExponentVector g;
  int d = -1;                        // dim S/I
  std::vector<MonomialIdeal> ideals;  // ideals[j] = I_j for j = 0..d
};

SkeletonChain skeleton_chain(const MonomialIdeal& ideal, const ExponentVector& g);

/// One cyclic summand S·f_i of the layer I_{j-1}/I_j: f_i = x^{b_min} + I_j,
/// Z the coordinates where b_min touches g, and ann the ideal M_i·S with
/// Ann(S f_i) = M_i S, generated by the clipped differences (a - b_min)_+
/// over a in G(I_j); all of them are supported on Y = complement of Z.
struct LayerSummand {
  ExponentVector b_min;
  std::vector<int> z_vars;  // 0-based
  MonomialIdeal ann;        // M_i S, full arity
};

/// The direct-sum decomposition of the layer I_{j-1}/I_j (with I_{-1} = S):
/// groups the rho = j points of P^g_{S/I_j} by their Z-set, takes the meet of
/// each class as b_min (meet-closure is asserted), and reads off the
/// annihilator. Summands are sorted by b_min graded-lex.
std::vector<LayerSummand> layer_decomposition(const MonomialIdeal& ideal,
                                              const ExponentVector& g, int j);

struct DirectSumReport {
  bool direct = false;   // pairwise joins land in I_j; basis supports disjoint
  bool covers = false;   // basis supports exhaust the layer's poset points
  std::string message;
};

/// Checks, inside the box [0,g], that the summands' multidegree supports
/// {b >= b_i : x^b not in I_j} are pairwise disjoint and cover exactly the
/// points of P^g_{I_{j-1}/I_j}, and that every c above two roots lies in I_j.
DirectSumReport verify_layer_direct_sum(const MonomialIdeal& ideal, const ExponentVector& g,
                                        int j, const std::vector<LayerSummand>& summands);

}  // namespace skel

#endif
