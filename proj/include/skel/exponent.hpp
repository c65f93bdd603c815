#ifndef SKEL_EXPONENT_HPP
#define SKEL_EXPONENT_HPP

#include <vector>

#include "skel/errors.hpp"

namespace skel {

/// A point of N^n, i.e. the exponent vector of a monomial x^a in n variables.
/// Entries are nonnegative; the componentwise order makes N^n a distributive
/// lattice with meet a∧b and join a∨b.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> entries);

  static ExponentVector zero(int arity);
  static ExponentVector unit(int arity, int var);  // var is 0-based

  int arity() const { return static_cast<int>(e_.size()); }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }
  int total_degree() const;
  bool is_zero() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<int> e_;
};

void require_same_arity(const ExponentVector& a, const ExponentVector& b);

/// x^a divides x^b, i.e. a <= b componentwise.
bool divides(const ExponentVector& a, const ExponentVector& b);

ExponentVector meet(const ExponentVector& a, const ExponentVector& b);
ExponentVector join(const ExponentVector& a, const ExponentVector& b);
ExponentVector sum(const ExponentVector& a, const ExponentVector& b);

/// Componentwise max(a - b, 0).
ExponentVector clipped_diff(const ExponentVector& a, const ExponentVector& b);

/// Graded lexicographic, ascending: first by total degree, ties by the
/// leftmost differing entry. A total order; the canonical sort everywhere.
bool grlex_less(const ExponentVector& a, const ExponentVector& b);

struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return grlex_less(a, b);
  }
};

/// All b with 0 <= b <= g, sorted graded-lex ascending.
std::vector<ExponentVector> box_points(const ExponentVector& g);

/// All exponent vectors of the given total degree (stars and bars),
/// sorted graded-lex ascending.
std::vector<ExponentVector> monomials_of_total_degree(int arity, int degree);

}  // namespace skel

#endif
