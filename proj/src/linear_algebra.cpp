#include "descent/linear_algebra.hpp"

#include "descent/rational.hpp"

namespace descent {

mpz_class determinant(const IntMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw UsageError("determinant: matrix not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  mpz_class sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

std::optional<IntMatrix> unimodular_inverse(const IntMatrix& m) {
  std::size_t n = m.size();
  mpz_class det = determinant(m);
  if (det != 1 && det != -1) return std::nullopt;
  Matrix<Rational> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = Rational(static_cast<long>(m[i][j]));
    aug[i][n + i] = Rational(1);
  }
  row_reduce(aug);
  IntMatrix inv(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& v = aug[i][n + j];
      if (v.denominator() != 1 || !v.numerator().fits_slong_p()) {
        throw DomainError("unimodular inverse entry not a machine integer");
      }
      inv[i][j] = v.numerator().get_si();
    }
  }
  return inv;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  std::size_t rows = a.size();
  std::size_t inner = b.size();
  std::size_t cols = inner == 0 ? 0 : b[0].size();
  IntMatrix out(rows, std::vector<std::int64_t>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    if (a[i].size() != inner) throw UsageError("multiply: dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

}  // namespace descent
