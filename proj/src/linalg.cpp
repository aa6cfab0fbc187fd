#include "origamiq/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

namespace origamiq {

namespace {

// Row-reduces `a` in place, returns pivot columns. When rhs is non-null it is
// carried along as an extra column.
std::vector<std::size_t> row_reduce(RatMat& a, RatVec* rhs, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[sel], a[row]);
    if (rhs) std::swap((*rhs)[sel], (*rhs)[row]);
    Rat inv = a[row][col];
    for (std::size_t j = col; j < cols; ++j) a[row][j] /= inv;
    if (rhs) (*rhs)[row] /= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[row];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rat determinant(RatMat a) {
  std::size_t n = a.size();
  Rat det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && a[sel][col] == 0) ++sel;
    if (sel == n) return 0;
    if (sel != col) {
      std::swap(a[sel], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      Rat f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  return det;
}

int rank(RatMat a) {
  if (a.empty()) return 0;
  std::size_t cols = a[0].size();
  return static_cast<int>(row_reduce(a, nullptr, cols).size());
}

std::optional<RatVec> solve_unique(RatMat a, RatVec b) {
  std::size_t n = a.size();
  auto pivots = row_reduce(a, &b, n);
  if (pivots.size() < n) return std::nullopt;
  return b;
}

std::optional<RatMat> inverse(const RatMat& a) {
  std::size_t n = a.size();
  RatMat aug(n, RatVec(2 * n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto pivots = row_reduce(aug, nullptr, 2 * n);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMat inv(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

std::vector<RatVec> nullspace(RatMat a, std::size_t cols) {
  auto pivots = row_reduce(a, nullptr, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMat mat_from_int_rows(const std::vector<IntVec>& rows) {
  RatMat m;
  m.reserve(rows.size());
  for (const IntVec& r : rows) m.push_back(to_rat_vec(r));
  return m;
}

IntVec primitive_direction(const RatVec& v) {
  Int l = 1;
  for (const Rat& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  IntVec w;
  w.reserve(v.size());
  for (const Rat& x : v) w.push_back(numerator(x) * (l / denominator(x)));
  return primitive(std::move(w));
}

}  // namespace origamiq
