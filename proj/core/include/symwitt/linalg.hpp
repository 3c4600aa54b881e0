// Copyright 2026 The symwitt Authors
// SPDX-License-Identifier: Apache-2.0
//
// Small exact dense linear algebra over Q, used for base-change matrices
// and for kernel computations in the linearization checks.

#ifndef SYMWITT_LINALG_HPP
#define SYMWITT_LINALG_HPP

#include <cstddef>
#include <vector>

#include "symwitt/errors.hpp"
#include "symwitt/numbers.hpp"

namespace symwitt::detail {

using RatMatrix = std::vector<std::vector<Rat>>;

/// Row-reduce in place; returns the pivot column of each pivot row.
inline std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    Rat inv = Rat(1) / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rat f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Inverse of a square matrix; throws DescriptorError if singular.
inline RatMatrix invert(const RatMatrix& m) {
  std::size_t n = m.size();
  RatMatrix a(n, std::vector<Rat>(2 * n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j];
    a[i][n + i] = 1;
  }
  auto pivots = rref(a);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw DescriptorError("matrix is singular");
  RatMatrix inv(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

/// Basis of the nullspace {x : A x = 0}, one vector per non-pivot column.
inline std::vector<std::vector<Rat>> kernel_basis(RatMatrix a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  auto pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace symwitt::detail

#endif
