#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "descent/errors.hpp"

namespace descent {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

template <class F>
using Matrix = std::vector<std::vector<F>>;

// Dense elimination over an exact field. F needs is_zero(), inverse() and the
// ring operators; Rational and CyclotomicElement both qualify.

/// Reduces `m` in place to row echelon form and returns its rank.
template <class F>
std::size_t row_reduce(Matrix<F>& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    F inv = m[rank][c].inverse();
    for (std::size_t j = c; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      F factor = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] - factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m);
}

/// Solves A x = b for square nonsingular A; nullopt when A is singular.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  std::size_t n = a.size();
  if (b.size() != n) throw UsageError("solve: dimension mismatch");
  Matrix<F> aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw UsageError("solve: matrix not square");
    aug[i] = a[i];
    aug[i].push_back(b[i]);
  }
  if (row_reduce(aug) < n) return std::nullopt;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i][i].is_zero()) return std::nullopt;
  }
  std::vector<F> x;
  x.reserve(n);
  for (std::size_t i = 0; i < n; ++i) x.push_back(aug[i][n]);
  return x;
}

/// Exact integer determinant (fraction-free Bareiss elimination).
mpz_class determinant(const IntMatrix& m);

/// Inverse of a unimodular integer matrix; nullopt when det is not +-1.
std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix identity_matrix(std::size_t n);

}  // namespace descent
