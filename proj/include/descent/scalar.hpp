#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "descent/cyclotomic.hpp"
#include "descent/symbolic.hpp"

namespace descent {

enum class Backend { cyclotomic, symbolic };

std::string to_string(Backend b);

/// A field element from one of the two backends. Operations between
/// different backends throw UsageError.
class Scalar {
 public:
  Scalar(CyclotomicElement value) : value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(SymbolicScalar value) : value_(std::move(value)) {}     // NOLINT(google-explicit-constructor)

  Backend backend() const;
  bool is_cyclotomic() const { return std::holds_alternative<CyclotomicElement>(value_); }
  bool is_symbolic() const { return std::holds_alternative<SymbolicScalar>(value_); }
  const CyclotomicElement& cyclotomic() const;
  const SymbolicScalar& symbolic() const;

  bool is_zero() const;
  bool is_one() const;

  /// Same-backend multiplicative identity.
  Scalar one() const;
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar& operator*=(const Scalar& rhs);
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  // Additive structure exists only in the cyclotomic backend.
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

 private:
  std::variant<CyclotomicElement, SymbolicScalar> value_;
};

enum class FieldOp { mul, inv, eq };

/// Dispatcher over mul / inv / eq. inv ignores `b`. eq returns a bool.
std::variant<Scalar, bool> field_op(const Scalar& a, const Scalar& b, FieldOp which);

/// The generator sigma of a cyclic Galois group G of order s, for one backend:
/// cyclotomic sigma is zeta -> zeta^g; symbolic sigma shifts field-symbol tags
/// modulo s and fixes rational symbols.
class GaloisGenerator {
 public:
  static GaloisGenerator symbolic(unsigned order);
  static GaloisGenerator cyclotomic(const GaloisAutomorphism& sigma);
  /// Q(zeta_n) with sigma: zeta -> zeta^g.
  static GaloisGenerator cyclotomic(unsigned conductor, long exponent);

  Backend backend() const { return backend_; }
  unsigned order() const { return order_; }
  const std::optional<GaloisAutomorphism>& automorphism() const { return automorphism_; }
  std::shared_ptr<const CyclotomicField> field() const;

  /// sigma^power(a).
  Scalar apply(const Scalar& a, long power = 1) const;
  bool fixes(const Scalar& a) const { return apply(a) == a; }

  Scalar one() const;
  Scalar from_rational(const Rational& r) const;
  /// Throws UsageError when `a` is not in this generator's backend/field.
  void check(const Scalar& a) const;

  friend bool operator==(const GaloisGenerator&, const GaloisGenerator&) = default;

  std::string describe() const;

 private:
  GaloisGenerator(Backend backend, unsigned order, std::optional<GaloisAutomorphism> automorphism)
      : backend_(backend), order_(order), automorphism_(std::move(automorphism)) {}

  Backend backend_;
  unsigned order_;
  std::optional<GaloisAutomorphism> automorphism_;
};

/// apply_automorphism: sigma^power acting on a.
Scalar apply_automorphism(const GaloisGenerator& sigma, long power, const Scalar& a);

}  // namespace descent
