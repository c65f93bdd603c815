#ifndef SKEL_EXACT_RANK_HPP
#define SKEL_EXACT_RANK_HPP

#include <cstddef>
#include <vector>

#include "skel/field.hpp"

namespace skel {

/// Dense integer matrix, row-major. Koszul strand differentials only ever
/// hold entries in {-1, 0, 1} and stay small (at most C(n,i) rows), but rank
/// computation must be exact, so no floating point anywhere.
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  int at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_, cols_;
  std::vector<int> data_;
};

/// Rank over Q via fraction-free (Bareiss) elimination on big integers.
int rank_over_rationals(const IntMatrix& m);

/// Rank over F_p via ordinary elimination.
int rank_mod_p(const IntMatrix& m, std::uint32_t p);

int matrix_rank(const IntMatrix& m, const FieldConfig& field);

}  // namespace skel

#endif
