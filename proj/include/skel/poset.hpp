#ifndef SKEL_POSET_HPP
#define SKEL_POSET_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "skel/ideal.hpp"

namespace skel {

/// rho(b) = #{j : b(j) = g(j)} — the number of coordinates where b touches
/// the cap vector. Counts exact equality only; b <= g is not required.
int rho(const ExponentVector& b, const ExponentVector& g);

/// Z_b = {j : b(j) = g(j)} and Y_b = its complement, as 0-based indices.
std::vector<int> z_set(const ExponentVector& b, const ExponentVector& g);
std::vector<int> y_set(const ExponentVector& b, const ExponentVector& g);

/// The finite poset P^g_{J/I}: all b <= g with x^b in J \ I, ordered
/// componentwise. `outer` = J (the unit ideal stands for S), `inner` = I
/// (possibly zero). Points are enumerated graded-lex ascending.
class CharacteristicPoset {
 public:
  const ExponentVector& g() const { return g_; }
  const MonomialIdeal& inner() const { return inner_; }
  const MonomialIdeal& outer() const { return outer_; }
  const std::vector<ExponentVector>& points() const { return points_; }

  bool empty() const { return points_.empty(); }
  std::size_t size() const { return points_.size(); }
  bool is_point(const ExponentVector& b) const;
  std::optional<std::size_t> index_of(const ExponentVector& b) const;
  int rho_at(std::size_t index) const { return rho_[index]; }

 private:
  CharacteristicPoset(ExponentVector g, MonomialIdeal inner, MonomialIdeal outer)
      : g_(std::move(g)), inner_(std::move(inner)), outer_(std::move(outer)) {}

  ExponentVector g_;
  MonomialIdeal inner_;
  MonomialIdeal outer_;
  std::vector<ExponentVector> points_;
  std::vector<int> rho_;
  friend CharacteristicPoset build_poset(const MonomialIdeal&, const MonomialIdeal&,
                                         const ExponentVector&);
};

/// Enumerates the box [0,g] and keeps the points of J \ I.
/// Requires g >= every generator of both ideals and inner ⊆ outer.
CharacteristicPoset build_poset(const MonomialIdeal& inner, const MonomialIdeal& outer,
                                const ExponentVector& g);

/// dim J/I = max rho over the poset; -1 for the empty poset (zero module).
int dimension_from_poset(const CharacteristicPoset& poset);

/// An interval [low, high] = {c in P : low <= c <= high}.
struct Interval {
  ExponentVector low;
  ExponentVector high;
};

struct Partition {
  std::vector<Interval> intervals;
};

/// True iff low <= high and every lattice point between them is a poset
/// point. Because inner-membership is upward closed and outer-membership
/// downward closed along the box, it suffices that both endpoints are poset
/// points (the exhaustive check is kept as a test oracle).
bool is_valid_interval(const CharacteristicPoset& poset, const ExponentVector& low,
                       const ExponentVector& high);

struct PartitionCheck {
  bool valid = false;
  std::string message;                       // empty when valid
  std::optional<std::size_t> bad_interval;   // malformed interval, if any
  std::optional<ExponentVector> duplicated;  // first point covered twice
  std::optional<ExponentVector> missed;      // first point not covered
};

/// Pairwise disjointness and exact cover of the poset.
PartitionCheck validate_partition(const CharacteristicPoset& poset, const Partition& partition);

/// A Stanley space x^root K[Z]: vars holds the 0-based indices of Z.
struct StanleySpace {
  ExponentVector root;
  std::vector<int> vars;
};

struct StanleyDecomposition {
  std::vector<StanleySpace> spaces;
};

struct DecompositionCheck {
  bool valid = false;
  std::string message;
};

/// Exhaustive oracle in the box [0, bound]: every monomial of J \ I is
/// covered by exactly one space and no space covers a monomial outside J \ I.
DecompositionCheck validate_decomposition_in_box(const MonomialIdeal& inner,
                                                 const MonomialIdeal& outer,
                                                 const StanleyDecomposition& dec,
                                                 const ExponentVector& bound);

/// The Stanley decomposition attached to a partition. An interval [c,d] with
/// d(k) ∈ {c(k), g(k)} for all k maps to the single space (c, Z_d); a general
/// interval is first refined along its coordinates with c(k) < d(k) < g(k),
/// one space per fiber, all with Z = Z_d. min |Z| over the spaces equals
/// rho(P) and max |root| equals sigma(P).
StanleyDecomposition partition_to_decomposition(const CharacteristicPoset& poset,
                                                const Partition& partition);

/// The partition attached to a Stanley decomposition: a space (c, Z) with
/// c <= g yields the interval [c, d] where d(j) = g(j) for j in Z and c(j)
/// otherwise; spaces with c not<= g do not contribute. The decomposition is
/// checked in the box [0, g+1] first, and the produced family is validated.
Partition decomposition_to_partition(const CharacteristicPoset& poset,
                                     const StanleyDecomposition& dec);

}  // namespace skel

#endif
