#pragma once

// Small dense exact linear algebra over the rationals: row reduction, rank,
// and nullspace bases.  Matrices here stay desk-sized (a few hundred rows at
// most), so plain fraction-based Gaussian elimination is fine.

#include "polyalg/rational.hpp"

#include <stdexcept>
#include <vector>

namespace polyalg {

using RatMatrix = std::vector<std::vector<Rational>>;

// Reduce in place to row echelon form; returns the pivot column of each
// pivot row (row i of the reduced matrix has its pivot at pivots[i]).
inline std::vector<int> row_reduce(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[row], m[piv]);
    const Rational lead = m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] /= lead;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (int j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(RatMatrix m) { return static_cast<int>(row_reduce(m).size()); }

// Basis of {x : m x = 0}, one vector per row of the result.
inline RatMatrix nullspace(RatMatrix m) {
  if (m.empty()) return {};
  const int cols = static_cast<int>(m[0].size());
  const std::vector<int> pivots = row_reduce(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;

  RatMatrix basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Solve m x = rhs; throws if the system is inconsistent or underdetermined.
inline std::vector<Rational> solve(RatMatrix m, std::vector<Rational> rhs) {
  const int rows = static_cast<int>(m.size());
  if (rows != static_cast<int>(rhs.size())) throw std::invalid_argument("solve: rhs size");
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int i = 0; i < rows; ++i) m[i].push_back(rhs[i]);
  const std::vector<int> pivots = row_reduce(m);
  for (size_t i = 0; i < pivots.size(); ++i)
    if (pivots[i] == cols) throw std::domain_error("solve: inconsistent system");
  if (static_cast<int>(pivots.size()) < cols) throw std::domain_error("solve: rank deficient");
  // Full column rank: pivot i sits in column i.
  std::vector<Rational> x(cols);
  for (int i = 0; i < cols; ++i) x[i] = m[i][cols];
  return x;
}

}  // namespace polyalg
