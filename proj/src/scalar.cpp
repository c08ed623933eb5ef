#include "descent/scalar.hpp"

namespace descent {

std::string to_string(Backend b) { return b == Backend::cyclotomic ? "cyclotomic" : "symbolic"; }

namespace {

[[noreturn]] void mismatch() { throw UsageError("scalar backend mismatch"); }

}  // namespace

Backend Scalar::backend() const { return is_cyclotomic() ? Backend::cyclotomic : Backend::symbolic; }

const CyclotomicElement& Scalar::cyclotomic() const {
  if (!is_cyclotomic()) throw UsageError("expected a cyclotomic scalar");
  return std::get<CyclotomicElement>(value_);
}

const SymbolicScalar& Scalar::symbolic() const {
  if (!is_symbolic()) throw UsageError("expected a symbolic scalar");
  return std::get<SymbolicScalar>(value_);
}

bool Scalar::is_zero() const { return is_cyclotomic() && cyclotomic().is_zero(); }

bool Scalar::is_one() const { return is_cyclotomic() ? cyclotomic().is_one() : symbolic().is_one(); }

Scalar Scalar::one() const {
  if (is_cyclotomic()) return CyclotomicElement::from_rational(cyclotomic().field(), Rational(1));
  return SymbolicScalar::one();
}

Scalar Scalar::inverse() const {
  if (is_cyclotomic()) return cyclotomic().inverse();
  return symbolic().inverse();
}

Scalar Scalar::pow(long exponent) const {
  if (is_cyclotomic()) return cyclotomic().pow(exponent);
  return symbolic().pow(exponent);
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (backend() != rhs.backend()) mismatch();
  if (is_cyclotomic()) {
    std::get<CyclotomicElement>(value_) *= rhs.cyclotomic();
  } else {
    std::get<SymbolicScalar>(value_) *= rhs.symbolic();
  }
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (backend() != rhs.backend()) mismatch();
  if (!is_cyclotomic()) throw Unsupported("addition in the symbolic backend");
  std::get<CyclotomicElement>(value_) += rhs.cyclotomic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (backend() != rhs.backend()) mismatch();
  if (!is_cyclotomic()) throw Unsupported("subtraction in the symbolic backend");
  std::get<CyclotomicElement>(value_) -= rhs.cyclotomic();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.backend() != b.backend()) mismatch();
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  return is_cyclotomic() ? cyclotomic().to_string() : symbolic().to_string();
}

std::variant<Scalar, bool> field_op(const Scalar& a, const Scalar& b, FieldOp which) {
  switch (which) {
    case FieldOp::mul:
      return a * b;
    case FieldOp::inv:
      return a.inverse();
    case FieldOp::eq:
      return a == b;
  }
  throw UsageError("unknown field operation");
}

GaloisGenerator GaloisGenerator::symbolic(unsigned order) {
  if (order == 0) throw UsageError("group order must be positive");
  return GaloisGenerator(Backend::symbolic, order, std::nullopt);
}

GaloisGenerator GaloisGenerator::cyclotomic(const GaloisAutomorphism& sigma) {
  return GaloisGenerator(Backend::cyclotomic, sigma.order(), sigma);
}

GaloisGenerator GaloisGenerator::cyclotomic(unsigned conductor, long exponent) {
  return cyclotomic(GaloisAutomorphism(conductor, exponent));
}

std::shared_ptr<const CyclotomicField> GaloisGenerator::field() const {
  if (!automorphism_) throw UsageError("symbolic generator has no cyclotomic field");
  return CyclotomicField::get(automorphism_->conductor());
}

void GaloisGenerator::check(const Scalar& a) const {
  if (a.backend() != backend_) mismatch();
  if (automorphism_ && a.cyclotomic().conductor() != automorphism_->conductor()) {
    throw UsageError("scalar conductor " + std::to_string(a.cyclotomic().conductor()) +
                     " does not match generator conductor " + std::to_string(automorphism_->conductor()));
  }
}

Scalar GaloisGenerator::apply(const Scalar& a, long power) const {
  check(a);
  if (automorphism_) return a.cyclotomic().apply(automorphism_->pow(power));
  return a.symbolic().apply_sigma(power, order_);
}

Scalar GaloisGenerator::one() const {
  if (automorphism_) return CyclotomicElement::from_rational(field(), Rational(1));
  return SymbolicScalar::one();
}

Scalar GaloisGenerator::from_rational(const Rational& r) const {
  if (automorphism_) return CyclotomicElement::from_rational(field(), r);
  if (r == Rational(1)) return SymbolicScalar::one();
  if (r == Rational(-1)) return SymbolicScalar::minus_one();
  throw Unsupported("symbolic backend only represents the rationals +-1");
}

std::string GaloisGenerator::describe() const {
  if (automorphism_) {
    return "Q(zeta_" + std::to_string(automorphism_->conductor()) + "), sigma: zeta -> zeta^" +
           std::to_string(automorphism_->exponent()) + ", order " + std::to_string(order_);
  }
  return "symbolic, order " + std::to_string(order_);
}

Scalar apply_automorphism(const GaloisGenerator& sigma, long power, const Scalar& a) { return sigma.apply(a, power); }

}  // namespace descent
