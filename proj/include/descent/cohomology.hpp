#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "descent/scalar.hpp"

namespace descent {

/// Group elements sigma^a, sigma^b, sigma^c of a cyclic group, as exponents.
struct GroupTriple {
  unsigned g = 0;
  unsigned h = 0;
  unsigned f = 0;
  friend bool operator==(const GroupTriple&, const GroupTriple&) = default;
};

/// An s x s table alpha(sigma^i, sigma^j) of field units on the cyclic group
/// generated by `sigma()`. Construction only requires nonzero entries; whether
/// the table is a 2-cocycle is decided by check_2cocycle, so corrupted tables
/// can be represented and rejected.
class Cocycle2 {
 public:
  Cocycle2(GaloisGenerator sigma, std::vector<std::vector<Scalar>> table);

  const GaloisGenerator& sigma() const { return sigma_; }
  unsigned order() const { return sigma_.order(); }
  /// alpha(sigma^i, sigma^j), indices reduced mod s.
  const Scalar& operator()(long i, long j) const;
  const std::vector<std::vector<Scalar>>& table() const { return table_; }
  /// Every entry fixed by sigma.
  bool is_rational() const { return rational_; }

  friend bool operator==(const Cocycle2& a, const Cocycle2& b) { return a.table_ == b.table_; }

 private:
  GaloisGenerator sigma_;
  std::vector<std::vector<Scalar>> table_;
  bool rational_ = true;
};

/// alpha(sigma^i, sigma^j) = 1 if i + j < s, gamma otherwise.
Cocycle2 standard_cyclic_cocycle(const GaloisGenerator& sigma, const Scalar& gamma);

struct CocycleCheck {
  bool ok = true;
  std::optional<GroupTriple> witness;  // first violating triple in (g, h, f) lexicographic order
  std::vector<GroupTriple> violations;  // filled only when requested
};

/// Exhaustive test of f(alpha(g,h)) alpha(gh,f) = alpha(g,hf) alpha(h,f) over all s^3 triples.
CocycleCheck check_2cocycle(const Cocycle2& alpha, bool collect_all = false);

/// Entrywise power alpha^ell (ell may be negative).
Cocycle2 cocycle_power(const Cocycle2& alpha, long ell);

/// Entrywise product of two tables on the same group.
Cocycle2 cocycle_product(const Cocycle2& a, const Cocycle2& b);

/// alpha(1, g) = alpha(g, 1) = 1 for all g.
bool is_normalized(const Cocycle2& alpha);

/// The parameter gamma when alpha is in standard cyclic form, nullopt otherwise.
/// For s = 1 the table (1) is standard with gamma = 1.
std::optional<Scalar> standard_form_parameter(const Cocycle2& alpha);

/// Coboundary of a 1-cochain c: G -> K^x, (dc)(g,h) = h(c(g)) c(h) / c(gh), the
/// change of basis u_g -> u_g c(g). Multiplying a cocycle by it yields a
/// cohomologous cocycle.
Cocycle2 coboundary(const GaloisGenerator& sigma, const std::vector<Scalar>& cochain);

}  // namespace descent
