#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "descent/cohomology.hpp"
#include "descent/linear_algebra.hpp"

namespace descent {

/// sum_i u_{sigma^i} a_i with coefficients on the right, a_i in K = Q(zeta_n).
struct CrossedElement {
  std::vector<CyclotomicElement> coeffs;

  unsigned order() const { return static_cast<unsigned>(coeffs.size()); }
  bool is_zero() const;
  friend bool operator==(const CrossedElement&, const CrossedElement&) = default;
};

CrossedElement operator+(const CrossedElement& x, const CrossedElement& y);
CrossedElement operator-(const CrossedElement& x, const CrossedElement& y);

// Constructors for elements of (K, G, alpha). alpha must use the cyclotomic backend.
CrossedElement crossed_zero(const Cocycle2& alpha);
/// u_{sigma^a} * a_coeff.
CrossedElement crossed_monomial(const Cocycle2& alpha, unsigned a, const CyclotomicElement& coeff);
/// u_{sigma^a} * zeta^p, the Q-basis element indexed by (a, p).
CrossedElement crossed_basis(const Cocycle2& alpha, unsigned a, unsigned p);
/// The multiplicative identity u_1 * alpha(1,1)^-1 (just u_1 when alpha is normalized).
CrossedElement crossed_one(const Cocycle2& alpha);
/// The image of k in K inside the algebra.
CrossedElement crossed_scalar(const Cocycle2& alpha, const CyclotomicElement& k);

/// Bilinear product from a u_g = u_g g(a) and u_g u_h = u_{gh} alpha(g,h).
CrossedElement crossed_multiply(const CrossedElement& x, const CrossedElement& y, const Cocycle2& alpha);

struct BasisIndex {
  unsigned group = 0;  // a in u_{sigma^a}
  unsigned power = 0;  // p in zeta^p
  friend bool operator==(const BasisIndex&, const BasisIndex&) = default;
};

struct BasisTriple {
  BasisIndex x, y, z;
  GroupTriple group() const { return {x.group, y.group, z.group}; }
};

struct BasisScope {};
struct RandomScope {
  std::size_t count = 100;
  std::uint64_t seed = 1;
};
using AssociativityScope = std::variant<BasisScope, RandomScope>;

struct AssociativityCheck {
  bool ok = true;
  std::optional<BasisTriple> witness;        // basis scope
  std::optional<std::size_t> failing_trial;  // random scope
};

/// (xy)z = x(yz) over all basis triples, or over random triples. Accepts
/// tables that are not cocycles.
AssociativityCheck associativity_check(const Cocycle2& alpha, const AssociativityScope& scope = BasisScope{});

/// dim_Q of the center, from the kernel of z -> [z, u_sigma] (+) [z, zeta].
std::size_t center_dimension(const Cocycle2& alpha);

/// dim_Q of the algebra, s * phi(n).
std::size_t algebra_dimension(const Cocycle2& alpha);

using SplitMatrix = Matrix<CyclotomicElement>;

/// rho(a) = diag(a, sigma(a), ..., sigma^{s-1}(a)) and rho(u_sigma) = the matrix
/// with gamma at (0, s-1) and 1 at (t, t-1), extended linearly and
/// multiplicatively. alpha must be in standard cyclic form.
SplitMatrix splitting_representation(const CrossedElement& x, const Cocycle2& alpha);

SplitMatrix matrix_multiply(const SplitMatrix& a, const SplitMatrix& b);

struct SplittingReport {
  bool multiplicative = true;
  std::optional<std::pair<BasisIndex, BasisIndex>> witness;
  std::size_t rank = 0;
  std::size_t expected_rank = 0;
  bool ok() const { return multiplicative && rank == expected_rank; }
};

/// rho multiplicative on all basis pairs, and the images of the basis span
/// M_s(K) over K.
SplittingReport splitting_check(const Cocycle2& alpha);

}  // namespace descent
