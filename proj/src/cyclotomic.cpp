#include "descent/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "descent/linear_algebra.hpp"

namespace descent {

long gcd_long(long a, long b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned euler_phi(unsigned n) {
  if (n == 0) throw UsageError("euler_phi(0)");
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

unsigned multiplicative_order(long g, unsigned n) {
  if (n == 0) throw UsageError("multiplicative order modulo 0");
  if (n == 1) return 1;
  long base = ((g % static_cast<long>(n)) + n) % n;
  if (gcd_long(base, n) != 1) throw UsageError("element is not a unit modulo n");
  unsigned order = 1;
  long x = base;
  while (x != 1) {
    x = (x * base) % n;
    ++order;
  }
  return order;
}

bool has_primitive_root(unsigned n) {
  if (n == 0) return false;
  if (n <= 2 || n == 4) return true;
  unsigned m = n % 2 == 0 ? n / 2 : n;
  if (m % 2 == 0) return false;
  unsigned p = 3;
  while (m % p != 0) p += 2;
  while (m % p == 0) m /= p;
  return m == 1;
}

unsigned smallest_primitive_root(unsigned n) {
  if (!has_primitive_root(n)) {
    throw UsageError("(Z/" + std::to_string(n) + ")^x is not cyclic");
  }
  if (n <= 2) return 1;
  unsigned phi = euler_phi(n);
  for (unsigned g = 2; g < n; ++g) {
    if (gcd_long(g, n) == 1 && multiplicative_order(g, n) == phi) return g;
  }
  throw UsageError("no primitive root found");
}

namespace {

// Exact quotient of polynomials (constant term first); divisor must divide.
std::vector<Rational> exact_divide(std::vector<Rational> num, const std::vector<Rational>& den) {
  std::size_t dn = den.size() - 1;
  std::vector<Rational> quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    Rational c = num[i] / den[dn];
    quot[i - dn] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

}  // namespace

std::vector<Rational> cyclotomic_polynomial(unsigned n) {
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Rational>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  if (n == 0) throw UsageError("cyclotomic polynomial of conductor 0");
  std::vector<Rational> poly(n + 1);
  poly[0] = Rational(-1);
  poly[n] = Rational(1);
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) poly = exact_divide(poly, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mutex);
  cache.emplace(n, poly);
  return poly;
}

CyclotomicField::CyclotomicField(unsigned conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
  zeta_powers_.reserve(conductor_);
  for (unsigned k = 0; k < conductor_; ++k) {
    std::vector<Rational> mono(k + 1);
    mono[k] = Rational(1);
    zeta_powers_.push_back(reduce(std::move(mono)));
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(unsigned conductor) {
  static std::mutex mutex;
  static std::map<unsigned, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(conductor);
  if (it != cache.end()) return it->second;
  if (conductor == 0) throw UsageError("conductor must be positive");
  auto field = std::make_shared<const CyclotomicField>(conductor);
  cache.emplace(conductor, field);
  return field;
}

std::vector<Rational> CyclotomicField::reduce(std::vector<Rational> poly) const {
  std::size_t deg = degree();
  for (std::size_t i = poly.size(); i-- > deg;) {
    if (poly[i].is_zero()) continue;
    Rational c = poly[i];
    for (std::size_t j = 0; j <= deg; ++j) poly[i - deg + j] -= c * modulus_[j];
  }
  poly.resize(deg);
  return poly;
}

const std::vector<Rational>& CyclotomicField::zeta_power(long k) const {
  long n = conductor_;
  return zeta_powers_[static_cast<std::size_t>(((k % n) + n) % n)];
}

CyclotomicElement::CyclotomicElement(std::shared_ptr<const CyclotomicField> field)
    : field_(std::move(field)), coeffs_(field_->degree()) {}

CyclotomicElement::CyclotomicElement(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(field_->reduce(std::move(coeffs))) {}

CyclotomicElement CyclotomicElement::from_rational(std::shared_ptr<const CyclotomicField> field, const Rational& r) {
  CyclotomicElement e(std::move(field));
  e.coeffs_[0] = r;
  return e;
}

CyclotomicElement CyclotomicElement::zeta(std::shared_ptr<const CyclotomicField> field, long k) {
  CyclotomicElement e(field);
  e.coeffs_ = field->zeta_power(k);
  return e;
}

bool CyclotomicElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool CyclotomicElement::is_one() const { return is_rational() && coeffs_[0].is_one(); }

void CyclotomicElement::check_same_field(const CyclotomicElement& other) const {
  if (field_->conductor() != other.field_->conductor()) {
    throw UsageError("cyclotomic conductor mismatch: " + std::to_string(field_->conductor()) + " vs " +
                     std::to_string(other.field_->conductor()));
  }
}

CyclotomicElement& CyclotomicElement::operator+=(const CyclotomicElement& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator-=(const CyclotomicElement& rhs) {
  check_same_field(rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CyclotomicElement& CyclotomicElement::operator*=(const CyclotomicElement& rhs) {
  check_same_field(rhs);
  std::size_t deg = coeffs_.size();
  std::vector<Rational> product(deg == 0 ? 0 : 2 * deg - 1);
  for (std::size_t i = 0; i < deg; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      product[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = field_->reduce(std::move(product));
  return *this;
}

CyclotomicElement CyclotomicElement::operator-() const {
  CyclotomicElement out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  return a.field_->conductor() == b.field_->conductor() && a.coeffs_ == b.coeffs_;
}

CyclotomicElement CyclotomicElement::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero cyclotomic element");
  std::size_t deg = coeffs_.size();
  // Column j holds this * zeta^j; solve for the coordinates of 1.
  Matrix<Rational> mult(deg, std::vector<Rational>(deg));
  for (std::size_t j = 0; j < deg; ++j) {
    CyclotomicElement col = *this * zeta(field_, static_cast<long>(j));
    for (std::size_t i = 0; i < deg; ++i) mult[i][j] = col.coeffs_[i];
  }
  std::vector<Rational> rhs(deg);
  rhs[0] = Rational(1);
  auto sol = solve(mult, rhs);
  if (!sol) throw DomainError("singular multiplication matrix in Q(zeta)");
  CyclotomicElement out(field_);
  out.coeffs_ = std::move(*sol);
  return out;
}

CyclotomicElement CyclotomicElement::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CyclotomicElement result = from_rational(field_, Rational(1));
  CyclotomicElement base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

CyclotomicElement CyclotomicElement::apply(const GaloisAutomorphism& tau) const {
  if (tau.conductor() != conductor()) {
    throw UsageError("automorphism conductor " + std::to_string(tau.conductor()) +
                     " does not match element conductor " + std::to_string(conductor()));
  }
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const auto& image = field_->zeta_power(static_cast<long>(k) * tau.exponent());
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!image[i].is_zero()) out[i] += coeffs_[k] * image[i];
    }
  }
  CyclotomicElement result(field_);
  result.coeffs_ = std::move(out);
  return result;
}

std::string CyclotomicElement::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag << "*";
    os << "z";
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

GaloisAutomorphism::GaloisAutomorphism(unsigned conductor, long exponent) : conductor_(conductor) {
  if (conductor == 0) throw UsageError("conductor must be positive");
  long n = conductor;
  long g = ((exponent % n) + n) % n;
  if (conductor == 1) g = 0;
  if (gcd_long(g, n) != 1) {
    throw UsageError("exponent " + std::to_string(exponent) + " is not a unit modulo " + std::to_string(conductor));
  }
  exponent_ = static_cast<unsigned>(g);
}

GaloisAutomorphism GaloisAutomorphism::after(const GaloisAutomorphism& first) const {
  if (first.conductor_ != conductor_) throw UsageError("automorphism conductor mismatch");
  return GaloisAutomorphism(conductor_, static_cast<long>(exponent_) * first.exponent_ % conductor_);
}

GaloisAutomorphism GaloisAutomorphism::pow(long k) const {
  long n = conductor_;
  long ord = order();
  long e = ((k % ord) + ord) % ord;
  long g = 1 % n;
  for (long i = 0; i < e; ++i) g = g * exponent_ % n;
  return GaloisAutomorphism(conductor_, g);
}

bool GaloisAutomorphism::fixes(const CyclotomicElement& a) const { return a.apply(*this) == a; }

bool fixed_by(const GaloisAutomorphism& tau, const CyclotomicElement& a) { return tau.fixes(a); }

}  // namespace descent
