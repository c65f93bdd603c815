#include "skel/exponent.hpp"

#include <algorithm>
#include <numeric>

namespace skel {

ExponentVector::ExponentVector(std::vector<int> entries) : e_(std::move(entries)) {
  for (int v : e_) {
    if (v < 0) throw Error("exponent vector entry must be nonnegative");
  }
}

ExponentVector ExponentVector::zero(int arity) {
  return ExponentVector(std::vector<int>(static_cast<std::size_t>(arity), 0));
}

ExponentVector ExponentVector::unit(int arity, int var) {
  std::vector<int> e(static_cast<std::size_t>(arity), 0);
  e.at(static_cast<std::size_t>(var)) = 1;
  return ExponentVector(std::move(e));
}

int ExponentVector::total_degree() const {
  return std::accumulate(e_.begin(), e_.end(), 0);
}

bool ExponentVector::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int v) { return v == 0; });
}

void require_same_arity(const ExponentVector& a, const ExponentVector& b) {
  if (a.arity() != b.arity()) {
    throw ArityError("arity mismatch: " + std::to_string(a.arity()) + " vs " +
                     std::to_string(b.arity()));
  }
}

bool divides(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  for (int i = 0; i < a.arity(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

ExponentVector meet(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  std::vector<int> e(static_cast<std::size_t>(a.arity()));
  for (int i = 0; i < a.arity(); ++i) e[static_cast<std::size_t>(i)] = std::min(a[i], b[i]);
  return ExponentVector(std::move(e));
}

ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  std::vector<int> e(static_cast<std::size_t>(a.arity()));
  for (int i = 0; i < a.arity(); ++i) e[static_cast<std::size_t>(i)] = std::max(a[i], b[i]);
  return ExponentVector(std::move(e));
}

ExponentVector sum(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  std::vector<int> e(static_cast<std::size_t>(a.arity()));
  for (int i = 0; i < a.arity(); ++i) e[static_cast<std::size_t>(i)] = a[i] + b[i];
  return ExponentVector(std::move(e));
}

ExponentVector clipped_diff(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  std::vector<int> e(static_cast<std::size_t>(a.arity()));
  for (int i = 0; i < a.arity(); ++i) e[static_cast<std::size_t>(i)] = std::max(a[i] - b[i], 0);
  return ExponentVector(std::move(e));
}

bool grlex_less(const ExponentVector& a, const ExponentVector& b) {
  require_same_arity(a, b);
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  return a.entries() < b.entries();
}

std::vector<ExponentVector> box_points(const ExponentVector& g) {
  std::vector<ExponentVector> out;
  const int n = g.arity();
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  while (true) {
    out.emplace_back(cur);
    int i = n - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == g[i]) {
      cur[static_cast<std::size_t>(i)] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
  }
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

std::vector<ExponentVector> monomials_of_total_degree(int arity, int degree) {
  std::vector<ExponentVector> out;
  std::vector<int> cur(static_cast<std::size_t>(arity), 0);
  // Depth-first distribution of `degree` over `arity` slots.
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == arity - 1) {
      cur[static_cast<std::size_t>(pos)] = remaining;
      out.emplace_back(cur);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      cur[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  if (arity >= 1 && degree >= 0) rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace skel
