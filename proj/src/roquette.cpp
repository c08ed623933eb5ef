#include "descent/roquette.hpp"

#include <chrono>
#include <functional>

namespace descent {

namespace {

void check_ell(std::size_t s, long ell) {
  if (ell < 1 || ell >= static_cast<long>(s)) {
    throw UsageError("ell must satisfy 1 <= ell < s (ell = " + std::to_string(ell) + ", s = " + std::to_string(s) +
                     ")");
  }
}

}  // namespace

ThetaSpec ThetaSpec::symbolic(unsigned s, long ell) {
  check_ell(s, ell);
  return ThetaSpec{s, ell, GaloisGenerator::symbolic(s), SymbolicScalar::rational_symbol("gamma")};
}

ThetaSpec ThetaSpec::cyclotomic(unsigned conductor, long generator, long ell, const Rational& gamma) {
  auto sigma = GaloisGenerator::cyclotomic(conductor, generator);
  check_ell(sigma.order(), ell);
  if (gamma.is_zero()) throw DomainError("gamma must be nonzero");
  return ThetaSpec{sigma.order(), ell, sigma, sigma.from_rational(gamma)};
}

bool ThetaSpec::coprime() const { return gcd_long(ell, s) == 1; }

MonomialMap build_theta1(const GaloisGenerator& sigma, long ell) {
  std::size_t s = sigma.order();
  check_ell(s, ell);
  IntMatrix e(s, std::vector<std::int64_t>(s, 0));
  for (std::size_t i = 0; i < s; ++i) {
    for (long t = 0; t < ell; ++t) e[i][(i + static_cast<std::size_t>(t)) % s] = 1;
  }
  return MonomialMap(sigma, std::move(e), std::vector<Scalar>(s, sigma.one()), 0);
}

MonomialMap build_theta2(const GaloisGenerator& sigma, const std::vector<Scalar>& beta) {
  for (const auto& b : beta) {
    sigma.check(b);
    if (b.is_zero()) throw DomainError("beta scalars must be nonzero");
  }
  return MonomialMap::diagonal(sigma, beta);
}

MonomialMap build_theta(const GaloisGenerator& sigma, long ell, const std::vector<Scalar>& beta) {
  return compose(build_theta2(sigma, beta), build_theta1(sigma, ell));
}

BetaSolution solve_beta(const Cocycle2& alpha, long ell) {
  std::size_t s = alpha.order();
  check_ell(s, ell);
  const auto& sigma = alpha.sigma();
  if (!alpha.is_rational()) throw Unsupported("the beta chain needs a sigma-fixed cocycle");

  Scalar k = sigma.one();
  std::vector<Scalar> beta;
  beta.reserve(s);
  beta.push_back(sigma.one());
  long m = 0;
  // Link j: beta_j prod_{t=1}^{ell-1} alpha_{1,j+t} / (beta_{j+1} alpha_{1,j}^{ell-1}) = k.
  auto link = [&](std::size_t j) {
    Scalar numer = sigma.one();
    for (long t = 1; t < ell; ++t) {
      std::size_t idx = (j + static_cast<std::size_t>(t)) % s;
      if (idx == s - 1) ++m;
      numer *= alpha(1, static_cast<long>(idx));
    }
    return numer / (k * alpha(1, static_cast<long>(j)).pow(ell - 1));
  };
  for (std::size_t j = 0; j + 1 < s; ++j) beta.push_back(beta[j] * link(j));
  Scalar closing = beta[s - 1] * link(s - 1);
  Scalar residual = closing / beta[0];
  if (!residual.is_one()) {
    throw InconsistentSystem("beta chain does not close: residual " + residual.to_string());
  }
  return BetaSolution{std::move(beta), k, residual, m};
}

BetaSolution solve_beta(const ThetaSpec& spec) { return solve_beta(spec.cocycle(), spec.ell); }

DiagramVerdict verify_diagram(const Cocycle2& alpha, long ell, const std::vector<Scalar>& beta) {
  const auto& sigma = alpha.sigma();
  auto theta = build_theta(sigma, ell, beta);
  auto phi = galois_generator_map(alpha);
  auto psi = galois_generator_map(alpha, ell);
  auto left = compose(theta, phi);
  auto right = compose(psi, theta);

  DiagramVerdict verdict;
  auto cmp = projectively_equal(left, right, ProjectiveMode::strict);
  verdict.commutes = cmp.equal;
  verdict.lambda = cmp.lambda;
  verdict.first_mismatch = cmp.first_mismatch;
  if (left.exponents() == right.exponents()) {
    for (std::size_t i = 0; i < left.dimension(); ++i) {
      verdict.ratios.push_back(left.coefficients()[i] / right.coefficients()[i]);
    }
  }
  return verdict;
}

DiagramVerdict verify_diagram(const ThetaSpec& spec, const BetaSolution& beta) {
  return verify_diagram(spec.cocycle(), spec.ell, beta.beta);
}

MonomialMap invert_theta1_explicit(const GaloisGenerator& sigma, long ell) {
  std::size_t s = sigma.order();
  check_ell(s, ell);
  if (gcd_long(ell, static_cast<long>(s)) != 1) {
    throw DomainError("Theta_1 is not birational when gcd(ell, s) != 1");
  }
  // rows[j]: exponents of a_j in z_0 .. z_{s-1}
  IntMatrix rows(s, std::vector<std::int64_t>(s, 0));
  std::size_t i = 0;
  for (std::size_t step = 0; step + 1 < s; ++step) {
    std::size_t next = (i + static_cast<std::size_t>(ell)) % s;
    rows[next] = rows[i];
    rows[next][(i + 1) % s] += 1;
    rows[next][i] -= 1;
    i = next;
  }
  for (auto& row : rows) row[0] += 1;
  return MonomialMap(sigma, std::move(rows), std::vector<Scalar>(s, sigma.one()), 0);
}

std::optional<long> gamma_exponent(const Scalar& value, const Scalar& gamma, long bound) {
  if (gamma.is_symbolic() && value.is_symbolic()) {
    const auto& g = gamma.symbolic();
    const auto& v = value.symbolic();
    if (g.sign() == 1 && g.exponents().size() == 1 && g.exponents().begin()->second == 1) {
      const Symbol& sym = g.exponents().begin()->first;
      long e = v.exponent_of(sym);
      if (v == g.pow(e)) return e;
      return std::nullopt;
    }
  }
  for (long mag = 0; mag <= bound; ++mag) {
    if (gamma.pow(mag) == value) return mag;
    if (mag > 0 && gamma.pow(-mag) == value) return -mag;
  }
  return std::nullopt;
}

PipelineResult run_pipeline(const ThetaSpec& spec) {
  PipelineResult result;
  using clock = std::chrono::steady_clock;

  // Runs one stage; returns false (and records the failure) when it fails.
  auto stage = [&](const std::string& name, const std::function<std::string()>& body) {
    auto start = clock::now();
    std::string failure;
    try {
      failure = body();
    } catch (const std::exception& e) {
      failure = e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();
    bool pass = failure.empty();
    result.stages.push_back(StageRecord{name, pass, ms, failure});
    if (!pass) {
      result.failed_stage = name;
      result.failure = failure;
    }
    return pass;
  };

  std::optional<Cocycle2> alpha;
  std::optional<MonomialMap> phi;
  std::optional<MonomialMap> psi;
  std::optional<MonomialMap> explicit_inverse;
  bool cross_check = false;

  bool ok = stage("standard_cyclic_cocycle", [&] {
    alpha = spec.cocycle();
    return std::string();
  });
  ok = ok && stage("check_2cocycle", [&] {
    auto check = check_2cocycle(*alpha);
    if (check.ok) return std::string();
    const auto& w = *check.witness;
    return "cocycle condition fails at (sigma^" + std::to_string(w.g) + ", sigma^" + std::to_string(w.h) +
           ", sigma^" + std::to_string(w.f) + ")";
  });
  ok = ok && stage("galois_generator_map", [&] {
    phi = galois_generator_map(*alpha);
    psi = galois_generator_map(*alpha, spec.ell);
    return std::string();
  });
  ok = ok && stage("descent_cocycle_check", [&] {
    auto dphi = descent_cocycle_check(*phi);
    if (!dphi.ok) return "phi_1: " + dphi.reason;
    auto dpsi = descent_cocycle_check(*psi);
    if (!dpsi.ok) return "psi_1: " + dpsi.reason;
    if (!(*dphi.lambda == spec.gamma)) return "phi_1 composite scalar is " + dphi.lambda->to_string();
    if (!(*dpsi.lambda == spec.gamma.pow(spec.ell))) return "psi_1 composite scalar is " + dpsi.lambda->to_string();
    return std::string();
  });
  ok = ok && stage("solve_beta", [&] {
    result.beta = solve_beta(*alpha, spec.ell);
    const auto& b = *result.beta;
    if (!b.beta[0].is_one()) return std::string("beta_0 != 1");
    if (!b.k.is_one()) return std::string("k != 1");
    if (b.m != spec.ell - 1) return "m = " + std::to_string(b.m) + " but ell - 1 = " + std::to_string(spec.ell - 1);
    return std::string();
  });
  ok = ok && stage("verify_diagram", [&] {
    result.diagram = verify_diagram(*alpha, spec.ell, result.beta->beta);
    const auto& d = *result.diagram;
    if (d.commutes) return std::string();
    return "coordinate " + std::to_string(d.first_mismatch.value_or(0)) + " ratio differs from lambda";
  });
  ok = ok && stage("lattice_certificate", [&] {
    result.lattice = lattice_certificate(build_theta1(spec.sigma, spec.ell));
    if (result.lattice->birational) return std::string();
    return "not birational: det = " + result.lattice->determinant.get_str();
  });
  ok = ok && stage("invert_theta1_explicit", [&] {
    explicit_inverse = invert_theta1_explicit(spec.sigma, spec.ell);
    return std::string();
  });
  ok = ok && stage("inverse_cross_check", [&] {
    auto theta1 = build_theta1(spec.sigma, spec.ell);
    auto lattice_inverse = invert_on_torus(theta1, *result.lattice);
    auto id = MonomialMap::identity(spec.sigma);
    if (!projectively_equal(*explicit_inverse, lattice_inverse, ProjectiveMode::torus).equal) {
      return std::string("explicit and lattice inverses differ");
    }
    if (!projectively_equal(compose(*explicit_inverse, theta1), id, ProjectiveMode::torus).equal) {
      return std::string("explicit inverse o Theta_1 is not the identity");
    }
    if (!projectively_equal(compose(theta1, *explicit_inverse), id, ProjectiveMode::torus).equal) {
      return std::string("Theta_1 o explicit inverse is not the identity");
    }
    cross_check = true;
    return std::string();
  });

  result.ok = ok;
  if (ok) {
    result.certificate = RoquetteCertificate{spec,          *result.beta, *result.diagram, *result.lattice,
                                             *explicit_inverse, cross_check, result.stages};
  }
  return result;
}

}  // namespace descent
