#include "skel/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace skel {

namespace mp = boost::multiprecision;

int rank_over_rationals(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<mp::cpp_int>> a(rows, std::vector<mp::cpp_int>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
  }
  std::size_t rank = 0;
  mp::cpp_int prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const mp::cpp_int piv = a[rank][col];
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const mp::cpp_int factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        mp::cpp_int num = piv * a[r][c] - factor * a[rank][c];
        // Bareiss: entries are minors, so the division is exact
        mp::cpp_int quot = num / prev, rem = num % prev;
        if (rem != 0) throw Error("fraction-free elimination: inexact division");
        a[r][c] = std::move(quot);
      }
    }
    prev = piv;
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_mod_p(const IntMatrix& m, std::uint32_t p) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows == 0 || cols == 0) return 0;
  const std::uint64_t mod = p;
  std::vector<std::vector<std::uint64_t>> a(rows, std::vector<std::uint64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      long long v = m.at(r, c) % static_cast<long long>(mod);
      if (v < 0) v += static_cast<long long>(mod);
      a[r][c] = static_cast<std::uint64_t>(v);
    }
  }
  auto pow_mod = [&](std::uint64_t base, std::uint64_t exp) {
    std::uint64_t out = 1;
    while (exp) {
      if (exp & 1) out = out * base % mod;
      base = base * base % mod;
      exp >>= 1;
    }
    return out;
  };
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const std::uint64_t inv = pow_mod(a[rank][col], mod - 2);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const std::uint64_t factor = a[r][col] * inv % mod;
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = (a[r][c] + mod - factor * a[rank][c] % mod) % mod;
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

int matrix_rank(const IntMatrix& m, const FieldConfig& field) {
  return field.kind == FieldConfig::Kind::Rationals ? rank_over_rationals(m)
                                                    : rank_mod_p(m, field.p);
}

}  // namespace skel
