// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "descent/cli.hpp"
#include "descent/crossed_product.hpp"
#include "descent/roquette.hpp"
#include "support.hpp"

using namespace descent;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Scalar gamma_symbol() { return SymbolicScalar::rational_symbol("gamma"); }

std::string triple_text(const std::optional<GroupTriple>& t) {
  if (!t) return "none";
  return "(" + std::to_string(t->g) + "," + std::to_string(t->h) + "," + std::to_string(t->f) + ")";
}

Outcome cocycle_suite() {
  Outcome o;
  std::size_t triples = 0;
  for (unsigned s = 2; s <= 12; ++s) {
    auto alpha = standard_cyclic_cocycle(GaloisGenerator::symbolic(s), gamma_symbol());
    if (!check_2cocycle(alpha).ok) o.fail("s = " + std::to_string(s) + " fails");
    triples += static_cast<std::size_t>(s) * s * s;
  }
  if (o.pass) o.detail = std::to_string(triples) + " triples, s = 2..12";
  return o;
}

Outcome associativity_matches_cocycle() {
  Outcome o;
  std::ifstream in(std::string(DESCENT_TEST_DATA_DIR) + "/associativity_tables.json");
  if (!in) {
    o.fail("table file missing");
    return o;
  }
  Json doc = Json::parse(in);
  std::size_t valid = 0, corrupted = 0;
  for (const auto& entry : doc.at("tables")) {
    auto alpha = cli::cocycle_from_json(entry);
    auto cocycle = check_2cocycle(alpha);
    auto assoc = associativity_check(alpha);
    std::optional<GroupTriple> assoc_witness;
    if (assoc.witness) assoc_witness = assoc.witness->group();
    std::string label = entry.value("label", std::string("?"));
    if (cocycle.ok != assoc.ok) {
      o.fail(label + ": cocycle " + (cocycle.ok ? "ok" : "fails") + ", associativity " + (assoc.ok ? "ok" : "fails"));
    } else if (!(cocycle.witness == assoc_witness)) {
      o.fail(label + ": witnesses " + triple_text(cocycle.witness) + " vs " + triple_text(assoc_witness));
    }
    (cocycle.ok ? valid : corrupted) += 1;
  }
  if (valid + corrupted != 20) o.fail("expected 20 tables");
  if (valid == 0 || corrupted == 0) o.fail("need both valid and corrupted tables");
  if (o.pass) o.detail = std::to_string(valid) + " valid, " + std::to_string(corrupted) + " corrupted, witnesses agree";
  return o;
}

Outcome quaternion_instance() {
  Outcome o;
  auto sigma = GaloisGenerator::cyclotomic(4, 3);
  auto alpha = standard_cyclic_cocycle(sigma, sigma.from_rational(Rational(-1)));
  auto field = sigma.field();
  auto i = CyclotomicElement::zeta(field);
  auto minus_one = crossed_scalar(alpha, CyclotomicElement::from_rational(field, Rational(-1)));
  auto u = crossed_basis(alpha, 1, 0);
  auto z = crossed_scalar(alpha, i);
  if (!(crossed_multiply(u, u, alpha) == minus_one)) o.fail("u^2 != -1");
  if (!(crossed_multiply(z, z, alpha) == minus_one)) o.fail("zeta^2 != -1");
  if (!(crossed_multiply(u, z, alpha) == crossed_zero(alpha) - crossed_multiply(z, u, alpha))) o.fail("u zeta != -zeta u");
  std::size_t center = center_dimension(alpha);
  if (center != 1) o.fail("center dimension " + std::to_string(center));
  auto split = splitting_check(alpha);
  if (!split.multiplicative) o.fail("splitting map not multiplicative");
  if (split.rank != 4) o.fail("splitting rank " + std::to_string(split.rank));
  if (o.pass) o.detail = "u^2 = -1, u zeta = -zeta u, center 1, rank 4";
  return o;
}

Outcome descent_order() {
  Outcome o;
  std::size_t checked = 0;
  for (unsigned s = 2; s <= 12; ++s) {
    auto alpha = standard_cyclic_cocycle(GaloisGenerator::symbolic(s), gamma_symbol());
    auto phi = descent_cocycle_check(galois_generator_map(alpha));
    if (!phi.ok || !(*phi.lambda == gamma_symbol())) o.fail("phi_1, s = " + std::to_string(s));
    for (long ell = 1; ell < static_cast<long>(s); ++ell) {
      if (gcd_long(ell, s) != 1) continue;
      auto psi = descent_cocycle_check(galois_generator_map(alpha, ell));
      if (!psi.ok || !(*psi.lambda == gamma_symbol().pow(ell))) {
        o.fail("psi_1, s = " + std::to_string(s) + ", ell = " + std::to_string(ell));
      }
      ++checked;
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " (s, ell) pairs, scalars gamma and gamma^ell";
  return o;
}

Outcome theorem_sweep() {
  Outcome o;
  std::size_t pairs = 0;
  for (unsigned s = 2; s <= 20; ++s) {
    for (long ell = 1; ell < static_cast<long>(s); ++ell) {
      if (gcd_long(ell, s) != 1) continue;
      std::string tag = "s = " + std::to_string(s) + ", ell = " + std::to_string(ell);
      auto spec = ThetaSpec::symbolic(s, ell);
      auto result = run_pipeline(spec);
      if (!result.ok) {
        o.fail(tag + ": failed at " + result.failed_stage);
        continue;
      }
      const auto& b = *result.beta;
      if (!b.beta[0].is_one() || !b.k.is_one() || b.m != ell - 1 || !b.residual.is_one()) o.fail(tag + ": beta chain");
      const auto& d = *result.diagram;
      if (!d.commutes || !d.lambda) o.fail(tag + ": diagram");
      ++pairs;
    }
  }
  auto anchor = solve_beta(ThetaSpec::symbolic(3, 2));
  Scalar one = SymbolicScalar::one();
  if (!(anchor.beta == std::vector<Scalar>{one, one, gamma_symbol()})) o.fail("s = 3, ell = 2 anchor");
  if (o.pass) o.detail = std::to_string(pairs) + " coprime pairs, m = ell - 1, beta(3,2) = (1, 1, gamma)";
  return o;
}

Outcome oracle_agreement() {
  Outcome o;
  std::size_t pairs = 0;
  for (unsigned s = 2; s <= 12; ++s) {
    for (long ell = 1; ell < static_cast<long>(s); ++ell) {
      std::string tag = "s = " + std::to_string(s) + ", ell = " + std::to_string(ell);
      auto oracle = descent::testing::beta_ratio_oracle(s, ell);
      if (!oracle.points_cancel || !oracle.consistent) {
        o.fail(tag + ": oracle system inconsistent");
        continue;
      }
      auto sol = solve_beta(ThetaSpec::symbolic(s, ell));
      for (std::size_t i = 0; i < s; ++i) {
        auto e = gamma_exponent(sol.beta[i], gamma_symbol(), 0);
        if (!e || mpq_class(*e) != oracle.gamma_exponents[i]) o.fail(tag + ": beta_" + std::to_string(i));
      }
      ++pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(pairs) + " (s, ell) pairs agree";
  return o;
}

Outcome birationality() {
  Outcome o;
  std::size_t pairs = 0, coprime = 0;
  for (unsigned s = 2; s <= 20; ++s) {
    auto sigma = GaloisGenerator::symbolic(s);
    for (long ell = 1; ell < static_cast<long>(s); ++ell) {
      std::string tag = "s = " + std::to_string(s) + ", ell = " + std::to_string(ell);
      auto theta1 = build_theta1(sigma, ell);
      auto cert = lattice_certificate(theta1);
      bool unit = cert.determinant == 1 || cert.determinant == -1;
      bool is_coprime = gcd_long(ell, s) == 1;
      if (unit != is_coprime || cert.birational != is_coprime) o.fail(tag + ": det " + cert.determinant.get_str());
      if (mpq_class(cert.determinant) != descent::testing::oracle_determinant(cert.reduced)) o.fail(tag + ": det oracle");
      ++pairs;
      if (!is_coprime) continue;
      auto lattice_inverse = invert_on_torus(theta1, cert);
      auto explicit_inverse = invert_theta1_explicit(sigma, ell);
      if (!projectively_equal(explicit_inverse, lattice_inverse, ProjectiveMode::torus).equal) {
        o.fail(tag + ": explicit and lattice inverses differ");
      }
      ++coprime;
    }
  }
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs, " + std::to_string(coprime) + " coprime inverses match";
  }
  return o;
}

Outcome cyclotomic_spot_check() {
  Outcome o;
  std::mt19937_64 rng(descent::testing::kSeed);
  std::size_t points = 0;
  for (long ell : {1L, 3L}) {
    auto spec = ThetaSpec::cyclotomic(5, 2, ell, Rational(2));
    if (spec.s != 4) o.fail("s != 4");
    auto alpha = spec.cocycle();
    auto theta = build_theta(spec.sigma, ell, solve_beta(spec).beta);
    auto left_map = compose(theta, galois_generator_map(alpha));
    auto right_map = compose(galois_generator_map(alpha, ell), theta);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Scalar> p;
      for (unsigned j = 0; j < spec.s; ++j) p.emplace_back(descent::testing::random_nonzero_cyclotomic(rng, 5));
      auto left = evaluate(left_map, p).value;
      auto right = evaluate(right_map, p).value;
      if (!left || !right || !projective_ratio(*left, *right)) o.fail("ell = " + std::to_string(ell) + ", point " +
                                                                      std::to_string(trial));
      ++points;
    }
  }
  if (o.pass) o.detail = std::to_string(points) + " random points over Q(zeta_5), ell in {1, 3}";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<Outcome()> run;
    double limit_seconds;  // 0 = no bound
  };
  const Criterion criteria[] = {
      {1, "cocycle suite", cocycle_suite, 5.0},
      {2, "associativity iff cocycle", associativity_matches_cocycle, 0.0},
      {3, "quaternion crossed product", quaternion_instance, 0.0},
      {4, "descent order", descent_order, 0.0},
      {5, "theorem sweep", theorem_sweep, 60.0},
      {6, "oracle agreement", oracle_agreement, 0.0},
      {7, "birationality criterion", birationality, 0.0},
      {8, "cyclotomic spot check", cyclotomic_spot_check, 0.0},
  };

  bool all = true;
  for (const auto& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      std::ostringstream why;
      why << "took " << seconds << " s, limit " << c.limit_seconds << " s";
      o.fail(why.str());
    }
    std::ostringstream line;
    line.precision(3);
    line << std::fixed << "criterion " << c.id << " " << (o.pass ? "PASS" : "FAIL") << " " << c.name << ": "
         << o.detail << " [" << seconds << " s]";
    std::cout << line.str() << std::endl;
    all = all && o.pass;
  }
  std::cout << (all ? "all criteria passed" : "some criteria failed") << std::endl;
  return all ? 0 : 1;
}
