#include "descent/monomial_map.hpp"

#include <algorithm>
#include <sstream>

namespace descent {

namespace {

long mod(long a, long m) { return ((a % m) + m) % m; }

}  // namespace

MonomialMap::MonomialMap(GaloisGenerator sigma, IntMatrix exponents, std::vector<Scalar> coefficients, long twist)
    : sigma_(std::move(sigma)), exponents_(std::move(exponents)), coefficients_(std::move(coefficients)) {
  std::size_t s = exponents_.size();
  if (s != sigma_.order()) {
    throw UsageError("map dimension " + std::to_string(s) + " differs from the group order " +
                     std::to_string(sigma_.order()));
  }
  if (coefficients_.size() != s) throw UsageError("coefficient vector length differs from the dimension");
  for (const auto& row : exponents_) {
    if (row.size() != s) throw UsageError("exponent matrix is not square");
  }
  std::int64_t d = degree();
  for (const auto& row : exponents_) {
    std::int64_t sum = 0;
    for (auto e : row) sum += e;
    if (sum != d) throw UsageError("exponent matrix rows must have a common sum");
  }
  if (d < 1) throw UsageError("map degree must be at least 1");
  for (const auto& c : coefficients_) {
    sigma_.check(c);
    if (c.is_zero()) throw DomainError("map coefficients must be nonzero");
  }
  twist_ = mod(twist, static_cast<long>(s));
}

std::int64_t MonomialMap::degree() const {
  std::int64_t sum = 0;
  for (auto e : exponents_.at(0)) sum += e;
  return sum;
}

MonomialMap MonomialMap::identity(const GaloisGenerator& sigma) {
  std::size_t s = sigma.order();
  return MonomialMap(sigma, identity_matrix(s), std::vector<Scalar>(s, sigma.one()), 0);
}

MonomialMap MonomialMap::diagonal(const GaloisGenerator& sigma, std::vector<Scalar> coefficients) {
  std::size_t s = sigma.order();
  return MonomialMap(sigma, identity_matrix(s), std::move(coefficients), 0);
}

std::string MonomialMap::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < dimension(); ++i) {
    if (i > 0) os << ", ";
    bool wrote = false;
    if (!coefficients_[i].is_one()) {
      os << coefficients_[i].to_string();
      wrote = true;
    }
    for (std::size_t j = 0; j < dimension(); ++j) {
      auto e = exponents_[i][j];
      if (e == 0) continue;
      if (wrote) os << "*";
      os << "x" << j;
      if (twist_ != 0) os << "@" << twist_;
      if (e != 1) os << "^" << e;
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  os << "]";
  return os.str();
}

MonomialMap compose(const MonomialMap& t, const MonomialMap& u) {
  if (t.dimension() != u.dimension()) throw UsageError("cannot compose maps of different dimension");
  if (!(t.sigma() == u.sigma())) throw UsageError("cannot compose maps over different Galois groups");
  std::size_t s = t.dimension();
  const auto& sigma = t.sigma();
  std::vector<Scalar> twisted_u;
  twisted_u.reserve(s);
  for (const auto& c : u.coefficients()) twisted_u.push_back(sigma.apply(c, t.twist()));

  std::vector<Scalar> coeffs;
  coeffs.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    Scalar c = t.coefficients()[i];
    for (std::size_t j = 0; j < s; ++j) {
      auto e = t.exponents()[i][j];
      if (e != 0) c *= twisted_u[j].pow(e);
    }
    coeffs.push_back(std::move(c));
  }
  return MonomialMap(sigma, multiply(t.exponents(), u.exponents()), std::move(coeffs), t.twist() + u.twist());
}

MonomialMap power(const MonomialMap& t, unsigned k) {
  MonomialMap out = MonomialMap::identity(t.sigma());
  for (unsigned i = 0; i < k; ++i) out = compose(t, out);
  return out;
}

MonomialMap galois_power_map(const Cocycle2& alpha, unsigned i) {
  const auto& sigma = alpha.sigma();
  if (sigma.backend() == Backend::symbolic && !alpha.is_rational()) {
    throw Unsupported("symbolic generator maps need a sigma-fixed cocycle");
  }
  std::size_t s = alpha.order();
  IntMatrix e(s, std::vector<std::int64_t>(s, 0));
  std::vector<Scalar> coeffs;
  coeffs.reserve(s);
  for (std::size_t j = 0; j < s; ++j) {
    e[j][(j + i) % s] = 1;
    coeffs.push_back(alpha(i, static_cast<long>(j)));
  }
  return MonomialMap(sigma, std::move(e), std::move(coeffs), static_cast<long>(i));
}

MonomialMap galois_generator_map(const Cocycle2& alpha) { return galois_power_map(alpha, 1); }

MonomialMap galois_generator_map(const Cocycle2& alpha, long ell) {
  return galois_power_map(cocycle_power(alpha, ell), 1);
}

ProjectiveComparison projectively_equal(const MonomialMap& t, const MonomialMap& u, ProjectiveMode mode) {
  if (t.dimension() != u.dimension()) throw UsageError("cannot compare maps of different dimension");
  ProjectiveComparison out;
  if (t.twist() != u.twist()) {
    out.reason = "twists differ";
    return out;
  }
  std::size_t s = t.dimension();
  std::vector<std::int64_t> shift(s, 0);
  for (std::size_t j = 0; j < s; ++j) shift[j] = t.exponents()[0][j] - u.exponents()[0][j];
  bool zero_shift = std::all_of(shift.begin(), shift.end(), [](auto v) { return v == 0; });
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < s; ++j) {
      if (t.exponents()[i][j] - u.exponents()[i][j] == shift[j]) continue;
      out.first_mismatch = i;
      out.reason = "exponent rows differ by more than a common monomial";
      return out;
    }
  }
  if (mode == ProjectiveMode::strict && !zero_shift) {
    out.first_mismatch = 0;
    out.reason = "exponent matrices differ";
    return out;
  }
  Scalar lambda = t.coefficients()[0] / u.coefficients()[0];
  for (std::size_t i = 1; i < s; ++i) {
    if (t.coefficients()[i] / u.coefficients()[i] == lambda) continue;
    out.first_mismatch = i;
    out.lambda = lambda;
    out.reason = "coefficient ratio at coordinate " + std::to_string(i) + " differs from coordinate 0";
    return out;
  }
  out.equal = true;
  out.lambda = lambda;
  if (mode == ProjectiveMode::torus) out.shift = shift;
  return out;
}

DescentCheck descent_cocycle_check(const MonomialMap& t) {
  std::size_t s = t.dimension();
  if (t.twist() != static_cast<long>(1 % s)) throw UsageError("descent datum must have twist 1");
  DescentCheck out;
  auto composite = power(t, static_cast<unsigned>(s));
  auto cmp = projectively_equal(composite, MonomialMap::identity(t.sigma()), ProjectiveMode::strict);
  out.ok = cmp.equal;
  out.lambda = cmp.lambda;
  out.reason = cmp.reason;
  return out;
}

LatticeCertificate lattice_certificate(const MonomialMap& t) {
  std::size_t s = t.dimension();
  const auto& e = t.exponents();
  LatticeCertificate cert;
  cert.reduced.assign(s - 1, std::vector<std::int64_t>(s - 1, 0));
  for (std::size_t i = 1; i < s; ++i) {
    for (std::size_t j = 1; j < s; ++j) cert.reduced[i - 1][j - 1] = e[i][j] - e[0][j];
  }
  cert.determinant = determinant(cert.reduced);
  cert.birational = cert.determinant == 1 || cert.determinant == -1;
  if (cert.birational) cert.inverse = unimodular_inverse(cert.reduced);
  return cert;
}

MonomialMap invert_on_torus(const MonomialMap& t, const LatticeCertificate& cert) {
  if (!cert.birational || !cert.inverse) {
    throw DomainError("map is not birational: chart determinant " + cert.determinant.get_str());
  }
  std::size_t s = t.dimension();
  const IntMatrix& inv = *cert.inverse;
  if (inv.size() + 1 != s) throw UsageError("certificate does not match the map dimension");

  // Homogenize: row 0 is D*e_0, row i puts the remaining degree on x_0.
  std::int64_t d = 1;
  for (const auto& row : inv) {
    std::int64_t sum = 0;
    for (auto v : row) sum += v;
    d = std::max(d, sum);
  }
  IntMatrix f(s, std::vector<std::int64_t>(s, 0));
  f[0][0] = d;
  for (std::size_t i = 1; i < s; ++i) {
    std::int64_t sum = 0;
    for (std::size_t j = 1; j < s; ++j) {
      f[i][j] = inv[i - 1][j - 1];
      sum += f[i][j];
    }
    f[i][0] = d - sum;
  }

  // Coefficients cancel those of T after composing: c_i = prod_j sigma^{-t}(c^T_j)^{-F_ij}.
  const auto& sigma = t.sigma();
  std::vector<Scalar> untwisted;
  for (const auto& c : t.coefficients()) untwisted.push_back(sigma.apply(c, -t.twist()));
  std::vector<Scalar> coeffs;
  for (std::size_t i = 0; i < s; ++i) {
    Scalar c = sigma.one();
    for (std::size_t j = 0; j < s; ++j) {
      if (f[i][j] != 0) c *= untwisted[j].pow(-f[i][j]);
    }
    coeffs.push_back(std::move(c));
  }
  return MonomialMap(sigma, std::move(f), std::move(coeffs), -t.twist());
}

Evaluation evaluate(const MonomialMap& t, const std::vector<Scalar>& point) {
  std::size_t s = t.dimension();
  if (point.size() != s) throw UsageError("point dimension mismatch");
  const auto& sigma = t.sigma();
  std::vector<Scalar> moved;
  moved.reserve(s);
  for (const auto& p : point) moved.push_back(sigma.apply(p, t.twist()));
  std::vector<Scalar> out;
  out.reserve(s);
  for (std::size_t i = 0; i < s; ++i) {
    Scalar value = t.coefficients()[i];
    for (std::size_t j = 0; j < s; ++j) {
      auto e = t.exponents()[i][j];
      if (e == 0) continue;
      if (moved[j].is_zero()) {
        if (e < 0) return Evaluation{};
        value = value - value;
        continue;
      }
      value *= moved[j].pow(e);
    }
    out.push_back(std::move(value));
  }
  return Evaluation{std::move(out)};
}

std::optional<Scalar> projective_ratio(const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
  if (p.size() != q.size()) throw UsageError("point dimension mismatch");
  std::optional<Scalar> lambda;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool pz = p[i].is_zero();
    bool qz = q[i].is_zero();
    if (pz != qz) return std::nullopt;
    if (pz) continue;
    Scalar r = p[i] / q[i];
    if (!lambda) {
      lambda = r;
    } else if (!(*lambda == r)) {
      return std::nullopt;
    }
  }
  return lambda;
}

}  // namespace descent
