#include "bigpic/linear_system.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace bigpic {

AffineSolution solve_affine(const RationalMatrix& a, const std::vector<Rational>& b,
                            const std::vector<std::size_t>& column_order) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw std::invalid_argument("right-hand side length differs from row count");
  const std::size_t cols = rows == 0 ? column_order.size() : a.front().size();
  std::vector<std::size_t> order = column_order;
  if (order.empty()) {
    order.resize(cols);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != cols) throw std::invalid_argument("column order must list every column");

  // Augmented matrix.
  RationalMatrix m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != cols) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    m[i][cols] = b[i];
  }

  std::vector<std::size_t> pivot_col_of_row;
  std::vector<bool> is_pivot(cols, false);
  std::size_t r = 0;
  for (std::size_t col : order) {
    if (r == rows) break;
    std::size_t pr = r;
    while (pr < rows && m[pr][col] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    const Rational inv = Rational(1) / m[r][col];
    for (auto& e : m[r]) e *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = 0; j <= cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col_of_row.push_back(col);
    is_pivot[col] = true;
    ++r;
  }

  AffineSolution sol;
  for (std::size_t i = r; i < rows; ++i) {
    if (m[i][cols] != 0) return sol;
  }
  sol.feasible = true;
  sol.particular.assign(cols, Rational(0));
  for (std::size_t i = 0; i < r; ++i) sol.particular[pivot_col_of_row[i]] = m[i][cols];
  for (std::size_t col : order) {
    if (is_pivot[col]) continue;
    std::vector<Rational> dir(cols, Rational(0));
    dir[col] = 1;
    for (std::size_t i = 0; i < r; ++i) dir[pivot_col_of_row[i]] = -m[i][col];
    sol.directions.push_back(std::move(dir));
  }
  return sol;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pr = c;
    while (pr < n && m[pr][c] == 0) ++pr;
    if (pr == n) return 0;
    if (pr != c) {
      std::swap(m[pr], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

}  // namespace bigpic
