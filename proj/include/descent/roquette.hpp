#pragma once

#include <optional>
#include <string>
#include <vector>

#include "descent/cohomology.hpp"
#include "descent/monomial_map.hpp"

namespace descent {

/// Input of the construction: the cyclic algebra (K, G, gamma) of degree s
/// and the tensor power ell, 1 <= ell < s.
struct ThetaSpec {
  unsigned s = 2;
  long ell = 1;
  GaloisGenerator sigma;
  Scalar gamma;

  /// Symbolic backend with gamma the rational symbol "gamma".
  static ThetaSpec symbolic(unsigned s, long ell);
  /// K = Q(zeta_n) with sigma: zeta -> zeta^g; s is the order of g.
  static ThetaSpec cyclotomic(unsigned conductor, long generator, long ell, const Rational& gamma);

  bool coprime() const;
  Cocycle2 cocycle() const { return standard_cyclic_cocycle(sigma, gamma); }
};

/// Raised when the wrap-around link of the beta chain does not close up.
class InconsistentSystem : public DomainError {
 public:
  using DomainError::DomainError;
};

struct BetaSolution {
  std::vector<Scalar> beta;
  Scalar k;
  Scalar residual;  // product of the chain around the cycle, must be 1
  long m = 0;       // occurrences of alpha(sigma, sigma^{s-1}) in the chain numerators
};

/// Theta_1: [a_0 : ... ] -> [a_0 ... a_{ell-1} : a_1 ... a_ell : ...], the
/// circulant exponent matrix with ell consecutive ones per row.
MonomialMap build_theta1(const GaloisGenerator& sigma, long ell);

/// Theta_2: the diagonal scaling by beta.
MonomialMap build_theta2(const GaloisGenerator& sigma, const std::vector<Scalar>& beta);

/// Theta = Theta_2 o Theta_1.
MonomialMap build_theta(const GaloisGenerator& sigma, long ell, const std::vector<Scalar>& beta);

/// Walks the quotient chain with k = 1 and beta_0 = 1:
///   beta_{j+1} = beta_j * prod_{t=1}^{ell-1} alpha_{1,j+t} / (k * alpha_{1,j}^{ell-1})
/// The last link closes the cycle back to beta_0 and gives the residual.
BetaSolution solve_beta(const ThetaSpec& spec);
/// Same chain for an arbitrary sigma-fixed cocycle table.
BetaSolution solve_beta(const Cocycle2& alpha, long ell);

struct DiagramVerdict {
  bool commutes = false;
  std::optional<Scalar> lambda;
  std::vector<Scalar> ratios;  // (Theta o phi_1)_i / (psi_1 o Theta)_i
  std::optional<std::size_t> first_mismatch;
};

/// Compares Theta o phi_1 with psi_1 o Theta, strict projective equality.
DiagramVerdict verify_diagram(const ThetaSpec& spec, const BetaSolution& beta);
DiagramVerdict verify_diagram(const Cocycle2& alpha, long ell, const std::vector<Scalar>& beta);

/// Inverse of Theta_1 on the chart a_0 = 1 from the telescoping relation
/// a_{i+ell} = a_i z_{i+1} / z_i, stepping i by ell from a_0 = 1. Rows are
/// shifted by e_0 to make the map homogeneous of degree 1.
MonomialMap invert_theta1_explicit(const GaloisGenerator& sigma, long ell);

/// Exponent e with value = gamma^e, searched over |e| <= bound (smallest |e|,
/// nonnegative first). Reads the exponent directly for a symbolic gamma symbol.
std::optional<long> gamma_exponent(const Scalar& value, const Scalar& gamma, long bound);

struct StageRecord {
  std::string name;
  bool pass = false;
  double millis = 0.0;
  std::string detail;
};

struct RoquetteCertificate {
  ThetaSpec spec;
  BetaSolution beta;
  DiagramVerdict diagram;
  LatticeCertificate lattice;
  MonomialMap theta1_inverse;
  bool inverse_cross_check = false;
  std::vector<StageRecord> stages;
};

struct PipelineResult {
  bool ok = false;
  std::vector<StageRecord> stages;
  std::string failed_stage;  // empty on success
  std::string failure;       // first witness / reason
  std::optional<BetaSolution> beta;
  std::optional<DiagramVerdict> diagram;
  std::optional<LatticeCertificate> lattice;
  std::optional<RoquetteCertificate> certificate;  // only when every stage passed
};

/// cocycle -> cocycle check -> phi_1, psi_1 -> descent checks -> beta ->
/// diagram -> lattice certificate -> explicit inverse -> inverse cross-check.
/// Stops at the first failing stage.
PipelineResult run_pipeline(const ThetaSpec& spec);

}  // namespace descent
