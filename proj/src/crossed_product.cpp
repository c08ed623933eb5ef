#include "descent/crossed_product.hpp"

#include <random>

namespace descent {

namespace {

void require_cyclotomic(const Cocycle2& alpha) {
  if (alpha.sigma().backend() != Backend::cyclotomic) {
    throw Unsupported("crossed products need the cyclotomic backend");
  }
}

// sigma^j for j = 0..s-1.
std::vector<GaloisAutomorphism> sigma_powers(const Cocycle2& alpha) {
  std::vector<GaloisAutomorphism> out;
  const auto& sigma = *alpha.sigma().automorphism();
  for (unsigned j = 0; j < alpha.order(); ++j) out.push_back(sigma.pow(j));
  return out;
}

CrossedElement multiply_with(const CrossedElement& x, const CrossedElement& y, const Cocycle2& alpha,
                             const std::vector<GaloisAutomorphism>& powers) {
  unsigned s = alpha.order();
  if (x.order() != s || y.order() != s) throw UsageError("crossed element order mismatch");
  CrossedElement out = crossed_zero(alpha);
  for (unsigned i = 0; i < s; ++i) {
    if (x.coeffs[i].is_zero()) continue;
    for (unsigned j = 0; j < s; ++j) {
      if (y.coeffs[j].is_zero()) continue;
      // (u_i a)(u_j b) = u_{i+j} alpha(i,j) sigma^j(a) b
      out.coeffs[(i + j) % s] += alpha(i, j).cyclotomic() * x.coeffs[i].apply(powers[j]) * y.coeffs[j];
    }
  }
  return out;
}

std::vector<CrossedElement> rational_basis(const Cocycle2& alpha) {
  unsigned phi = alpha.sigma().field()->degree();
  std::vector<CrossedElement> basis;
  for (unsigned a = 0; a < alpha.order(); ++a) {
    for (unsigned p = 0; p < phi; ++p) basis.push_back(crossed_basis(alpha, a, p));
  }
  return basis;
}

}  // namespace

bool CrossedElement::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

CrossedElement operator+(const CrossedElement& x, const CrossedElement& y) {
  if (x.order() != y.order()) throw UsageError("crossed element order mismatch");
  CrossedElement out = x;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += y.coeffs[i];
  return out;
}

CrossedElement operator-(const CrossedElement& x, const CrossedElement& y) {
  if (x.order() != y.order()) throw UsageError("crossed element order mismatch");
  CrossedElement out = x;
  for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] -= y.coeffs[i];
  return out;
}

CrossedElement crossed_zero(const Cocycle2& alpha) {
  require_cyclotomic(alpha);
  return CrossedElement{std::vector<CyclotomicElement>(alpha.order(), CyclotomicElement(alpha.sigma().field()))};
}

CrossedElement crossed_monomial(const Cocycle2& alpha, unsigned a, const CyclotomicElement& coeff) {
  CrossedElement out = crossed_zero(alpha);
  if (a >= alpha.order()) throw UsageError("group index out of range");
  if (coeff.conductor() != alpha.sigma().field()->conductor()) throw UsageError("coefficient conductor mismatch");
  out.coeffs[a] = coeff;
  return out;
}

CrossedElement crossed_basis(const Cocycle2& alpha, unsigned a, unsigned p) {
  require_cyclotomic(alpha);
  return crossed_monomial(alpha, a, CyclotomicElement::zeta(alpha.sigma().field(), p));
}

CrossedElement crossed_one(const Cocycle2& alpha) {
  require_cyclotomic(alpha);
  return crossed_monomial(alpha, 0, alpha(0, 0).cyclotomic().inverse());
}

CrossedElement crossed_scalar(const Cocycle2& alpha, const CyclotomicElement& k) {
  CrossedElement one = crossed_one(alpha);
  one.coeffs[0] *= k;
  return one;
}

CrossedElement crossed_multiply(const CrossedElement& x, const CrossedElement& y, const Cocycle2& alpha) {
  require_cyclotomic(alpha);
  return multiply_with(x, y, alpha, sigma_powers(alpha));
}

AssociativityCheck associativity_check(const Cocycle2& alpha, const AssociativityScope& scope) {
  require_cyclotomic(alpha);
  auto powers = sigma_powers(alpha);
  auto mul = [&](const CrossedElement& x, const CrossedElement& y) { return multiply_with(x, y, alpha, powers); };
  AssociativityCheck result;

  if (std::holds_alternative<BasisScope>(scope)) {
    unsigned s = alpha.order();
    unsigned phi = alpha.sigma().field()->degree();
    // Group indices outermost so the first failure matches check_2cocycle's witness order.
    for (unsigned a = 0; a < s; ++a) {
      for (unsigned b = 0; b < s; ++b) {
        for (unsigned c = 0; c < s; ++c) {
          for (unsigned p = 0; p < phi; ++p) {
            for (unsigned q = 0; q < phi; ++q) {
              for (unsigned r = 0; r < phi; ++r) {
                auto x = crossed_basis(alpha, a, p);
                auto y = crossed_basis(alpha, b, q);
                auto z = crossed_basis(alpha, c, r);
                if (mul(mul(x, y), z) == mul(x, mul(y, z))) continue;
                result.ok = false;
                result.witness = BasisTriple{{a, p}, {b, q}, {c, r}};
                return result;
              }
            }
          }
        }
      }
    }
    return result;
  }

  const auto& random = std::get<RandomScope>(scope);
  std::mt19937_64 rng(random.seed);
  std::uniform_int_distribution<long> dist(-3, 3);
  auto field = alpha.sigma().field();
  auto draw = [&] {
    CrossedElement e = crossed_zero(alpha);
    for (auto& c : e.coeffs) {
      std::vector<Rational> coords(field->degree());
      for (auto& v : coords) v = Rational(dist(rng));
      c = CyclotomicElement(field, std::move(coords));
    }
    return e;
  };
  for (std::size_t t = 0; t < random.count; ++t) {
    auto x = draw();
    auto y = draw();
    auto z = draw();
    if (!(mul(mul(x, y), z) == mul(x, mul(y, z)))) {
      result.ok = false;
      result.failing_trial = t;
      return result;
    }
  }
  return result;
}

std::size_t algebra_dimension(const Cocycle2& alpha) {
  require_cyclotomic(alpha);
  return static_cast<std::size_t>(alpha.order()) * alpha.sigma().field()->degree();
}

std::size_t center_dimension(const Cocycle2& alpha) {
  require_cyclotomic(alpha);
  auto powers = sigma_powers(alpha);
  unsigned s = alpha.order();
  unsigned phi = alpha.sigma().field()->degree();
  std::size_t n = static_cast<std::size_t>(s) * phi;
  auto basis = rational_basis(alpha);
  std::vector<CrossedElement> generators{
      crossed_monomial(alpha, 1 % s, CyclotomicElement::from_rational(alpha.sigma().field(), Rational(1))),
      crossed_scalar(alpha, CyclotomicElement::zeta(alpha.sigma().field()))};

  // Column k: coordinates of [basis_k, b] for each generator b, stacked.
  Matrix<Rational> system(generators.size() * n, std::vector<Rational>(n));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t gi = 0; gi < generators.size(); ++gi) {
      const auto& b = generators[gi];
      CrossedElement commutator =
          multiply_with(basis[k], b, alpha, powers) - multiply_with(b, basis[k], alpha, powers);
      for (unsigned a = 0; a < s; ++a) {
        for (unsigned p = 0; p < phi; ++p) {
          system[gi * n + a * phi + p][k] = commutator.coeffs[a].coefficients()[p];
        }
      }
    }
  }
  return n - rank(std::move(system));
}

SplitMatrix matrix_multiply(const SplitMatrix& a, const SplitMatrix& b) {
  std::size_t n = a.size();
  if (n == 0) return {};
  std::size_t inner = b.size();
  std::size_t m = b[0].size();
  SplitMatrix out(n, std::vector<CyclotomicElement>(m, CyclotomicElement(a[0][0].field())));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != inner) throw UsageError("matrix dimension mismatch");
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

SplitMatrix splitting_representation(const CrossedElement& x, const Cocycle2& alpha) {
  require_cyclotomic(alpha);
  auto gamma = standard_form_parameter(alpha);
  if (!gamma) throw Unsupported("splitting representation needs a standard cyclic cocycle");
  unsigned s = alpha.order();
  if (x.order() != s) throw UsageError("crossed element order mismatch");
  auto field = alpha.sigma().field();
  auto powers = sigma_powers(alpha);
  CyclotomicElement zero(field);
  CyclotomicElement one = CyclotomicElement::from_rational(field, Rational(1));

  SplitMatrix shift(s, std::vector<CyclotomicElement>(s, zero));
  shift[0][s - 1] = gamma->cyclotomic();
  for (unsigned t = 1; t < s; ++t) shift[t][t - 1] = one;

  SplitMatrix power(s, std::vector<CyclotomicElement>(s, zero));  // shift^a, starting at identity
  for (unsigned t = 0; t < s; ++t) power[t][t] = one;
  SplitMatrix out(s, std::vector<CyclotomicElement>(s, zero));
  for (unsigned a = 0; a < s; ++a) {
    if (!x.coeffs[a].is_zero()) {
      SplitMatrix diag(s, std::vector<CyclotomicElement>(s, zero));
      for (unsigned t = 0; t < s; ++t) diag[t][t] = x.coeffs[a].apply(powers[t]);
      auto term = matrix_multiply(power, diag);
      for (unsigned i = 0; i < s; ++i) {
        for (unsigned j = 0; j < s; ++j) out[i][j] += term[i][j];
      }
    }
    power = matrix_multiply(power, shift);
  }
  return out;
}

SplittingReport splitting_check(const Cocycle2& alpha) {
  require_cyclotomic(alpha);
  SplittingReport report;
  unsigned s = alpha.order();
  unsigned phi = alpha.sigma().field()->degree();
  auto powers = sigma_powers(alpha);
  auto basis = rational_basis(alpha);
  std::vector<SplitMatrix> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(splitting_representation(b, alpha));

  for (std::size_t i = 0; i < basis.size() && report.multiplicative; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      auto product = splitting_representation(multiply_with(basis[i], basis[j], alpha, powers), alpha);
      if (product == matrix_multiply(images[i], images[j])) continue;
      report.multiplicative = false;
      report.witness = std::make_pair(BasisIndex{static_cast<unsigned>(i / phi), static_cast<unsigned>(i % phi)},
                                      BasisIndex{static_cast<unsigned>(j / phi), static_cast<unsigned>(j % phi)});
      break;
    }
  }

  // Rank over K of the flattened images.
  Matrix<CyclotomicElement> flat;
  for (const auto& m : images) {
    std::vector<CyclotomicElement> row;
    for (const auto& r : m) row.insert(row.end(), r.begin(), r.end());
    flat.push_back(std::move(row));
  }
  report.rank = rank(std::move(flat));
  report.expected_rank = static_cast<std::size_t>(s) * s;
  return report;
}

}  // namespace descent
