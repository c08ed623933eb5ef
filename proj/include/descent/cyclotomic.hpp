#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "descent/rational.hpp"

namespace descent {

unsigned euler_phi(unsigned n);
long gcd_long(long a, long b);

/// True when (Z/n)^x is cyclic, i.e. n in {1, 2, 4, p^k, 2p^k} for odd prime p.
bool has_primitive_root(unsigned n);

/// Smallest generator of (Z/n)^x; throws UsageError when the group is not cyclic.
unsigned smallest_primitive_root(unsigned n);

/// Multiplicative order of g modulo n (gcd(g, n) must be 1).
unsigned multiplicative_order(long g, unsigned n);

/// The field Q(zeta_n), represented as Q[x] / Phi_n(x). Instances are shared
/// and immutable; obtain them through get().
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(unsigned conductor);

  unsigned conductor() const { return conductor_; }
  unsigned degree() const { return static_cast<unsigned>(modulus_.size() - 1); }

  /// Phi_n, coefficients from the constant term up, monic.
  const std::vector<Rational>& modulus() const { return modulus_; }

  /// Remainder of an arbitrary polynomial modulo Phi_n, padded to degree().
  std::vector<Rational> reduce(std::vector<Rational> poly) const;

  /// Reduced coordinates of zeta^k (k taken mod n).
  const std::vector<Rational>& zeta_power(long k) const;

  explicit CyclotomicField(unsigned conductor);

 private:
  unsigned conductor_;
  std::vector<Rational> modulus_;
  std::vector<std::vector<Rational>> zeta_powers_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Rational> cyclotomic_polynomial(unsigned n);

class GaloisAutomorphism;

/// An element of Q(zeta_n) in its canonical reduced residue form.
class CyclotomicElement {
 public:
  explicit CyclotomicElement(std::shared_ptr<const CyclotomicField> field);
  CyclotomicElement(std::shared_ptr<const CyclotomicField> field, std::vector<Rational> coeffs);

  static CyclotomicElement from_rational(std::shared_ptr<const CyclotomicField> field, const Rational& r);
  /// zeta_n^k.
  static CyclotomicElement zeta(std::shared_ptr<const CyclotomicField> field, long k = 1);

  unsigned conductor() const { return field_->conductor(); }
  const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;

  CyclotomicElement inverse() const;
  CyclotomicElement pow(long exponent) const;
  CyclotomicElement apply(const GaloisAutomorphism& tau) const;

  CyclotomicElement& operator+=(const CyclotomicElement& rhs);
  CyclotomicElement& operator-=(const CyclotomicElement& rhs);
  CyclotomicElement& operator*=(const CyclotomicElement& rhs);

  friend CyclotomicElement operator+(CyclotomicElement a, const CyclotomicElement& b) { return a += b; }
  friend CyclotomicElement operator-(CyclotomicElement a, const CyclotomicElement& b) { return a -= b; }
  friend CyclotomicElement operator*(CyclotomicElement a, const CyclotomicElement& b) { return a *= b; }
  CyclotomicElement operator-() const;

  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

  /// Human-readable polynomial in z, e.g. "2*z^2 - z + 1/3".
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const CyclotomicElement& e) { return os << e.to_string(); }

 private:
  void check_same_field(const CyclotomicElement& other) const;

  std::shared_ptr<const CyclotomicField> field_;
  std::vector<Rational> coeffs_;
};

/// zeta_n -> zeta_n^g for g a unit modulo n.
class GaloisAutomorphism {
 public:
  GaloisAutomorphism(unsigned conductor, long exponent);

  unsigned conductor() const { return conductor_; }
  unsigned exponent() const { return exponent_; }
  unsigned order() const { return multiplicative_order(exponent_, conductor_); }

  /// this applied after `first`.
  GaloisAutomorphism after(const GaloisAutomorphism& first) const;
  GaloisAutomorphism pow(long k) const;

  CyclotomicElement operator()(const CyclotomicElement& a) const { return a.apply(*this); }
  bool fixes(const CyclotomicElement& a) const;

  friend bool operator==(const GaloisAutomorphism&, const GaloisAutomorphism&) = default;

 private:
  unsigned conductor_;
  unsigned exponent_;
};

/// True iff tau(a) = a.
bool fixed_by(const GaloisAutomorphism& tau, const CyclotomicElement& a);

}  // namespace descent
