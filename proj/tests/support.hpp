#pragma once

// Random generators and independent oracles shared by the unit and acceptance
// suites. Oracles here deliberately avoid the library's algorithms: they work
// on raw gmp values and on formulas written out directly.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "descent/cohomology.hpp"
#include "descent/cyclotomic.hpp"
#include "descent/monomial_map.hpp"
#include "descent/symbolic.hpp"

namespace descent::testing {

inline constexpr std::uint64_t kSeed = 0x5eedULL;

inline Rational random_rational(std::mt19937_64& rng, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return Rational(num(rng), den(rng));
}

inline CyclotomicElement random_cyclotomic(std::mt19937_64& rng, unsigned conductor, long bound = 5) {
  auto field = CyclotomicField::get(conductor);
  std::vector<Rational> coords(field->degree());
  for (auto& c : coords) c = random_rational(rng, bound);
  return CyclotomicElement(field, std::move(coords));
}

inline CyclotomicElement random_nonzero_cyclotomic(std::mt19937_64& rng, unsigned conductor, long bound = 5) {
  for (;;) {
    auto e = random_cyclotomic(rng, conductor, bound);
    if (!e.is_zero()) return e;
  }
}

/// Random signed monomial over a few rational and field symbols.
inline SymbolicScalar random_symbolic(std::mt19937_64& rng, long order) {
  static const char* const kRational[] = {"gamma", "delta", "b"};
  static const char* const kField[] = {"a", "c"};
  std::uniform_int_distribution<long> exp(-3, 3);
  std::uniform_int_distribution<long> tag(0, order - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  SymbolicScalar out = coin(rng) ? SymbolicScalar::one() : SymbolicScalar::minus_one();
  for (const char* name : kRational) out *= SymbolicScalar::rational_symbol(name, exp(rng));
  for (const char* name : kField) out *= SymbolicScalar::field_symbol(name, tag(rng), exp(rng));
  return out;
}

/// Polynomial remainder of x^k modulo the monic integer polynomial `modulus`
/// (constant term first), by schoolbook long division on mpq values.
inline std::vector<mpq_class> monomial_remainder(unsigned k, const std::vector<long>& modulus) {
  std::size_t deg = modulus.size() - 1;
  std::vector<mpq_class> poly(std::max<std::size_t>(k + 1, deg), 0);
  poly[k] = 1;
  for (std::size_t i = poly.size(); i-- > deg;) {
    mpq_class c = poly[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * modulus[j];
  }
  poly.resize(deg);
  return poly;
}

/// Determinant by Gaussian elimination on mpq values with partial pivoting.
inline mpq_class oracle_determinant(const IntMatrix& m) {
  std::size_t n = m.size();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m[i][j]);
  }
  mpq_class det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      mpq_class f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

/// The standard cyclic cocycle value alpha(sigma, sigma^j), written out.
inline SymbolicScalar oracle_alpha1(unsigned s, std::size_t j, const SymbolicScalar& gamma) {
  return (1 + j % s >= s) ? gamma : SymbolicScalar::one();
}

struct RatioOracle {
  std::vector<SymbolicScalar> ratios;  // coordinate ratios with unknown b_i
  std::vector<mpq_class> gamma_exponents;  // solution with k = 1, beta_0 = 1
  bool points_cancel = true;
  bool consistent = true;
};

/// Expands Theta(phi_1(a)) and psi_1(Theta(a)) at the generic point
/// a_j = field symbol "a<j>" with unknown rational scalars b_i, forms the
/// coordinate ratios, sets each ratio to 1 and solves the resulting linear
/// system in the gamma-exponents of b_i by elimination. No library map
/// machinery is used; maps are written out from their formulas.
inline RatioOracle beta_ratio_oracle(unsigned s, long ell) {
  SymbolicScalar gamma = SymbolicScalar::rational_symbol("gamma");
  auto sigma_of = [&](const SymbolicScalar& x) { return x.apply_sigma(1, s); };
  std::vector<SymbolicScalar> a, b;
  for (unsigned j = 0; j < s; ++j) {
    a.push_back(SymbolicScalar::field_symbol("a" + std::to_string(j), 0));
    b.push_back(SymbolicScalar::rational_symbol("b" + std::to_string(j)));
  }
  auto theta = [&](const std::vector<SymbolicScalar>& p) {
    std::vector<SymbolicScalar> out;
    for (unsigned i = 0; i < s; ++i) {
      SymbolicScalar v = b[i];
      for (long t = 0; t < ell; ++t) v *= p[(i + t) % s];
      out.push_back(v);
    }
    return out;
  };
  auto phi = [&](const std::vector<SymbolicScalar>& p, long power) {
    std::vector<SymbolicScalar> out;
    for (unsigned j = 0; j < s; ++j) out.push_back(oracle_alpha1(s, j, gamma).pow(power) * sigma_of(p[(j + 1) % s]));
    return out;
  };
  auto left = theta(phi(a, 1));
  auto right = phi(theta(a), ell);

  RatioOracle out;
  // Rows: s ratio equations plus x_0 = 0; columns: x_0..x_{s-1} | rhs.
  std::vector<std::vector<mpq_class>> sys(s + 1, std::vector<mpq_class>(s + 1, 0));
  for (unsigned i = 0; i < s; ++i) {
    SymbolicScalar r = left[i] * right[i].inverse();
    out.ratios.push_back(r);
    for (const auto& [sym, e] : r.exponents()) {
      if (!sym.rational) out.points_cancel = false;
      if (sym.rational && sym.name[0] == 'b') sys[i][std::stoul(sym.name.substr(1))] = e;
    }
    if (r.sign() != 1) out.consistent = false;
    sys[i][s] = -r.rational_exponent("gamma");
  }
  sys[s][0] = 1;
  // Gauss-Jordan.
  std::size_t rank = 0;
  for (std::size_t c = 0; c < s && rank <= s; ++c) {
    std::size_t p = rank;
    while (p <= s && sys[p][c] == 0) ++p;
    if (p > s) continue;
    std::swap(sys[p], sys[rank]);
    mpq_class piv = sys[rank][c];
    for (auto& v : sys[rank]) v /= piv;
    for (std::size_t r = 0; r <= s; ++r) {
      if (r == rank || sys[r][c] == 0) continue;
      mpq_class f = sys[r][c];
      for (std::size_t j = 0; j <= s; ++j) sys[r][j] -= f * sys[rank][j];
    }
    ++rank;
  }
  for (std::size_t r = rank; r <= s; ++r) {
    if (sys[r][s] != 0) out.consistent = false;
  }
  if (rank < s) out.consistent = false;
  out.gamma_exponents.assign(s, 0);
  for (std::size_t r = 0; r < rank; ++r) {
    for (std::size_t c = 0; c < s; ++c) {
      if (sys[r][c] == 1) {
        out.gamma_exponents[c] = sys[r][s];
        break;
      }
    }
  }
  return out;
}

}  // namespace descent::testing
