#ifndef SKEL_IDEAL_HPP
#define SKEL_IDEAL_HPP

#include <optional>
#include <vector>

#include "skel/exponent.hpp"

namespace skel {

/// A monomial ideal of K[x_1..x_n], stored by its unique minimal generating
/// set G(I): an antichain under componentwise <=, sorted graded-lex so equal
/// ideals serialize byte-identically. The zero ideal has no generators; the
/// unit ideal is generated by the zero vector (the monomial 1) and stands for
/// S itself where an outer ideal is expected.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int arity);  // zero ideal
  static MonomialIdeal unit(int arity);

  int arity() const { return arity_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_zero(); }

  /// x^b ∈ I, i.e. some generator divides x^b.
  bool contains(const ExponentVector& b) const;

  /// other ⊆ this (every generator of other lies in this).
  bool contains_ideal(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int arity_;
  std::vector<ExponentVector> gens_;
  friend MonomialIdeal minimalize(int, std::vector<ExponentVector>);
};

/// Drop every generator that is a multiple of another; sort canonically.
/// Idempotent and membership-preserving.
MonomialIdeal minimalize(int arity, std::vector<ExponentVector> gens);

/// Minimalized sum I + (gens).
MonomialIdeal add_generators(const MonomialIdeal& ideal,
                             const std::vector<ExponentVector>& gens);

/// The truncation I_{>=j}: the ideal generated by all monomials of I of total
/// degree at least j. Generators come from multiplying each u in G(I) by every
/// monomial of degree max(0, j - |u|), then minimalizing.
MonomialIdeal truncate_at_degree(const MonomialIdeal& ideal, int j);

/// Squarefree ideal generated by the supports of the generators.
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Krull dimension of S/I by brute force over all 2^n variable subsets W:
/// the largest |W| such that no generator of radical(I) has support inside W.
/// dim S/0 = n, dim S/S = -1. Practical bound n <= 20 (hard guard at 24).
int dimension_oracle(const MonomialIdeal& ideal);

/// Joins of all nonempty subsets of the union of the generator sets: the
/// candidate multidegrees for Betti numbers. Closed under join; contains
/// every generator. Sorted graded-lex.
std::vector<ExponentVector> lcm_lattice_degrees(const std::vector<MonomialIdeal>& ideals);

/// As above, but gives up (nullopt) once the lattice grows past `cap`.
std::optional<std::vector<ExponentVector>> lcm_lattice_degrees_capped(
    const std::vector<MonomialIdeal>& ideals, std::size_t cap);

/// Componentwise join of all generators (the minimal admissible g for the
/// characteristic poset). Zero vector for the zero ideal.
ExponentVector generator_join(const MonomialIdeal& ideal);

}  // namespace skel

#endif
