#include "tamekit/lp.hpp"

#include <stdexcept>

namespace tamekit {

std::optional<std::vector<Rational>> nonnegative_solution(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("nonnegative_solution: row count mismatch");
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto& r : a) {
    if (r.size() != cols) throw std::invalid_argument("nonnegative_solution: ragged matrix");
  }
  if (rows == 0) return std::vector<Rational>(cols, 0);

  // Tableau over [x | artificials | rhs]; one artificial per row.
  const std::size_t width = cols + rows;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width + 1, 0));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][cols + i] = 1;
    t[i][width] = flip ? Rational(-b[i]) : b[i];
    basis[i] = cols + i;
  }
  // Phase-one objective: minimise the sum of artificials. Reduced costs of the
  // original columns are minus the column sums.
  std::vector<Rational> cost(width + 1, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cost[j] -= t[i][j];
    cost[width] -= t[i][width];
  }

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < width; ++j) {
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][width] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) break;  // unbounded below cannot happen in phase one
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j <= width; ++j) t[i][j] -= f * t[leave][j];
    }
    if (sgn(cost[enter]) != 0) {
      const Rational f = cost[enter];
      for (std::size_t j = 0; j <= width; ++j) cost[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  if (sgn(cost[width]) != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    if (basis[i] < cols) x[basis[i]] = t[i][width];
  }
  return x;
}

}  // namespace tamekit
