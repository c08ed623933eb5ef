#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "descent/cohomology.hpp"
#include "descent/linear_algebra.hpp"

namespace descent {

/// A sigma-semilinear monomial map of P^{s-1}_K:
///
///   T(p)_i = c_i * prod_j sigma^t(p_j)^{E_ij}
///
/// E is an integer matrix whose rows share a common sum d >= 1 (entries may
/// be negative, in which case T is only defined on the torus), c is a vector
/// of units and t is the twist, an exponent of sigma taken mod s.
class MonomialMap {
 public:
  MonomialMap(GaloisGenerator sigma, IntMatrix exponents, std::vector<Scalar> coefficients, long twist);

  static MonomialMap identity(const GaloisGenerator& sigma);
  /// [a_0 : ... ] -> [c_0 a_0 : c_1 a_1 : ...].
  static MonomialMap diagonal(const GaloisGenerator& sigma, std::vector<Scalar> coefficients);

  const GaloisGenerator& sigma() const { return sigma_; }
  std::size_t dimension() const { return exponents_.size(); }
  const IntMatrix& exponents() const { return exponents_; }
  const std::vector<Scalar>& coefficients() const { return coefficients_; }
  long twist() const { return twist_; }
  std::int64_t degree() const;

  friend bool operator==(const MonomialMap& a, const MonomialMap& b) {
    return a.exponents_ == b.exponents_ && a.coefficients_ == b.coefficients_ && a.twist_ == b.twist_;
  }

  /// e.g. "[x1@1, x2@1, gamma*x0@1]" with x_j@t = sigma^t(x_j).
  std::string to_string() const;

 private:
  GaloisGenerator sigma_;
  IntMatrix exponents_;
  std::vector<Scalar> coefficients_;
  long twist_;
};

/// (T o U)(p) = T(U(p)).
MonomialMap compose(const MonomialMap& t, const MonomialMap& u);

/// T composed with itself k times (k = 0 gives the identity).
MonomialMap power(const MonomialMap& t, unsigned k);

/// phi_1 for alpha: T(p)_j = alpha(sigma, sigma^j) * sigma(p_{(j+1) mod s}).
/// In the symbolic backend alpha must be rational.
MonomialMap galois_generator_map(const Cocycle2& alpha);
/// psi_1: the generator map of alpha^ell.
MonomialMap galois_generator_map(const Cocycle2& alpha, long ell);
/// phi_i transcribed directly: T(p)_j = alpha(sigma^i, sigma^j) * sigma^i(p_{(j+i) mod s}).
MonomialMap galois_power_map(const Cocycle2& alpha, unsigned i);

enum class ProjectiveMode { strict, torus };

struct ProjectiveComparison {
  bool equal = false;
  std::optional<Scalar> lambda;                    // common coefficient ratio T/U
  std::optional<std::vector<std::int64_t>> shift;  // common row of E_T - E_U (torus mode)
  std::optional<std::size_t> first_mismatch;       // first coordinate whose ratio differs
  std::string reason;
};

/// strict: same exponents and twist, coefficient ratios all equal to one lambda.
/// torus: rows of E_T - E_U may also equal one common integer vector.
ProjectiveComparison projectively_equal(const MonomialMap& t, const MonomialMap& u,
                                        ProjectiveMode mode = ProjectiveMode::strict);

struct DescentCheck {
  bool ok = false;
  std::optional<Scalar> lambda;  // common scalar of the s-fold composite
  std::string reason;
};

/// The s-fold composite of T is projectively the identity. T must have twist 1.
DescentCheck descent_cocycle_check(const MonomialMap& t);

/// Birationality data of a monomial map restricted to the chart x_0 != 0.
struct LatticeCertificate {
  IntMatrix reduced;  // rows (row_i(E) - row_0(E)) in the y_j = x_j / x_0 exponents, i, j >= 1
  mpz_class determinant;
  bool birational = false;  // determinant is +-1
  std::optional<IntMatrix> inverse;
};

LatticeCertificate lattice_certificate(const MonomialMap& t);

/// The torus inverse U: compose(U, T) and compose(T, U) are torus-projectively
/// the identity. Throws DomainError when the certificate is not birational.
MonomialMap invert_on_torus(const MonomialMap& t, const LatticeCertificate& cert);

/// Result of evaluating a map at a point; `outside_torus` is set when a zero
/// coordinate meets a negative exponent.
struct Evaluation {
  std::optional<std::vector<Scalar>> value;
  bool outside_torus() const { return !value.has_value(); }
};

Evaluation evaluate(const MonomialMap& t, const std::vector<Scalar>& point);

/// lambda with p = lambda * q coordinatewise, nullopt if the points differ
/// projectively (or either is the zero vector).
std::optional<Scalar> projective_ratio(const std::vector<Scalar>& p, const std::vector<Scalar>& q);

}  // namespace descent
