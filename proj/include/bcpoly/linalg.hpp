#pragma once

#include <vector>

#include "bcpoly/rational.hpp"

namespace bcpoly {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Solves A X = B exactly by Gauss-Jordan elimination. B has one column per
/// right-hand side. Throws Error("singular system") when A is singular.
inline RationalMatrix solve_linear(RationalMatrix a, RationalMatrix b) {
  const std::size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) throw Error("solve_linear: matrix is not square");
  if (b.size() != n) throw Error("solve_linear: right-hand side has wrong height");
  const std::size_t m = n ? b[0].size() : 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error("singular system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    for (std::size_t k = 0; k < m; ++k) b[col][k] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      for (std::size_t k = 0; k < m; ++k) b[r][k] -= f * b[col][k];
    }
  }
  return b;
}

inline RationalMatrix identity_matrix(std::size_t n) {
  RationalMatrix id(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

inline RationalMatrix invert(const RationalMatrix& a) { return solve_linear(a, identity_matrix(a.size())); }

}  // namespace bcpoly
