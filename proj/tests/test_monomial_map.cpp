#include "doctest.h"

#include "descent/monomial_map.hpp"
#include "descent/roquette.hpp"
#include "support.hpp"

using namespace descent;

namespace {

Scalar gamma_symbol() { return SymbolicScalar::rational_symbol("gamma"); }
Scalar sym_one() { return SymbolicScalar::one(); }

std::vector<Scalar> field_point(unsigned s) {
  std::vector<Scalar> p;
  for (unsigned j = 0; j < s; ++j) p.emplace_back(SymbolicScalar::field_symbol("p" + std::to_string(j), 0));
  return p;
}

MonomialMap random_map(std::mt19937_64& rng, const GaloisGenerator& sigma) {
  std::size_t s = sigma.order();
  std::uniform_int_distribution<std::int64_t> entry(0, 2);
  std::uniform_int_distribution<long> tw(0, static_cast<long>(s) - 1);
  IntMatrix e(s, std::vector<std::int64_t>(s, 0));
  std::int64_t d = 3;
  for (auto& row : e) {
    std::int64_t left = d;
    for (std::size_t j = 0; j + 1 < s; ++j) {
      std::int64_t v = std::min(left, entry(rng));
      row[j] = v;
      left -= v;
    }
    row[s - 1] = left;
  }
  std::vector<Scalar> c;
  for (std::size_t i = 0; i < s; ++i) c.emplace_back(descent::testing::random_symbolic(rng, static_cast<long>(s)));
  return MonomialMap(sigma, e, c, tw(rng));
}

}  // namespace

TEST_CASE("phi_1 for s = 3") {
  auto sigma = GaloisGenerator::symbolic(3);
  auto alpha = standard_cyclic_cocycle(sigma, gamma_symbol());
  auto phi = galois_generator_map(alpha);
  CHECK(phi.exponents() == IntMatrix{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
  CHECK(phi.coefficients() == std::vector<Scalar>{sym_one(), sym_one(), gamma_symbol()});
  CHECK(phi.twist() == 1);
  CHECK(phi.to_string() == "[x1@1, x2@1, gamma*x0@1]");

  auto value = evaluate(phi, field_point(3)).value;
  REQUIRE(value);
  CHECK((*value)[0] == Scalar(SymbolicScalar::field_symbol("p1", 1)));
  CHECK((*value)[2] == gamma_symbol() * Scalar(SymbolicScalar::field_symbol("p0", 1)));
}

TEST_CASE("psi_1 is the generator map of alpha^ell") {
  auto sigma = GaloisGenerator::symbolic(3);
  auto alpha = standard_cyclic_cocycle(sigma, gamma_symbol());
  auto psi = galois_generator_map(alpha, 2);
  CHECK(psi.coefficients() == std::vector<Scalar>{sym_one(), sym_one(), gamma_symbol().pow(2)});
  CHECK(psi == galois_generator_map(cocycle_power(alpha, 2)));
}

TEST_CASE("compose and power") {
  auto sigma = GaloisGenerator::symbolic(3);
  auto alpha = standard_cyclic_cocycle(sigma, gamma_symbol());
  auto phi = galois_generator_map(alpha);
  auto id = MonomialMap::identity(sigma);
  CHECK(compose(phi, id) == phi);
  CHECK(compose(id, phi) == phi);
  CHECK(power(phi, 0) == id);

  auto cube = power(phi, 3);
  CHECK(cube.exponents() == identity_matrix(3));
  CHECK(cube.twist() == 0);
  for (const auto& c : cube.coefficients()) CHECK(c == gamma_symbol());

  for (unsigned s = 2; s <= 8; ++s) {
    auto a = standard_cyclic_cocycle(GaloisGenerator::symbolic(s), gamma_symbol());
    auto phi1 = galois_generator_map(a);
    for (unsigned i = 0; i < s; ++i) CHECK(power(phi1, i) == galois_power_map(a, i));
  }
}

TEST_CASE("compose agrees with evaluation and is associative") {
  std::mt19937_64 rng(descent::testing::kSeed + 10);
  for (unsigned s : {2u, 3u, 4u, 5u}) {
    auto sigma = GaloisGenerator::symbolic(s);
    auto p = field_point(s);
    for (int trial = 0; trial < 25; ++trial) {
      auto t = random_map(rng, sigma);
      auto u = random_map(rng, sigma);
      auto v = random_map(rng, sigma);
      CHECK(compose(compose(t, u), v) == compose(t, compose(u, v)));
      auto direct = evaluate(compose(t, u), p).value;
      auto inner = evaluate(u, p).value;
      REQUIRE(inner);
      auto nested = evaluate(t, *inner).value;
      REQUIRE(direct);
      REQUIRE(nested);
      CHECK(*direct == *nested);
    }
  }
}

TEST_CASE("evaluation on cyclotomic points") {
  auto sigma = GaloisGenerator::cyclotomic(5, 2);
  auto alpha = standard_cyclic_cocycle(sigma, sigma.from_rational(Rational(2)));
  auto phi = galois_generator_map(alpha);
  std::mt19937_64 rng(descent::testing::kSeed + 11);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Scalar> p;
    for (int j = 0; j < 4; ++j) p.emplace_back(descent::testing::random_nonzero_cyclotomic(rng, 5));
    auto four = evaluate(power(phi, 4), p).value;
    REQUIRE(four);
    auto lambda = projective_ratio(*four, p);
    REQUIRE(lambda);
    CHECK(*lambda == sigma.from_rational(Rational(2)));
  }

  // Negative exponents are undefined at zero coordinates.
  IntMatrix e{{2, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  MonomialMap t(sigma, e, std::vector<Scalar>(4, sigma.one()), 0);
  std::vector<Scalar> z(4, sigma.one());
  z[1] = sigma.from_rational(Rational(0));
  CHECK(evaluate(t, z).outside_torus());
  z[1] = sigma.one();
  CHECK_FALSE(evaluate(t, z).outside_torus());
}

TEST_CASE("projectively_equal") {
  auto sigma = GaloisGenerator::symbolic(3);
  auto alpha = standard_cyclic_cocycle(sigma, gamma_symbol());
  auto phi = galois_generator_map(alpha);
  auto g = gamma_symbol();
  auto cube = power(phi, 3);
  auto cmp = projectively_equal(cube, MonomialMap::identity(sigma));
  CHECK(cmp.equal);
  REQUIRE(cmp.lambda);
  CHECK(*cmp.lambda == g);

  auto d = MonomialMap::diagonal(sigma, {sym_one(), g, sym_one()});
  auto bad = projectively_equal(d, MonomialMap::identity(sigma));
  CHECK_FALSE(bad.equal);
  CHECK(bad.first_mismatch == 1u);

  // Torus mode tolerates a common monomial factor.
  MonomialMap shifted(sigma, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}}, std::vector<Scalar>(3, sym_one()), 0);
  CHECK_FALSE(projectively_equal(shifted, MonomialMap::identity(sigma)).equal);
  auto torus = projectively_equal(shifted, MonomialMap::identity(sigma), ProjectiveMode::torus);
  CHECK(torus.equal);
  CHECK(torus.shift == std::vector<std::int64_t>{1, 0, 0});

  CHECK_FALSE(projectively_equal(phi, MonomialMap::identity(sigma)).equal);
}

TEST_CASE("descent_cocycle_check") {
  for (unsigned s = 1; s <= 12; ++s) {
    auto alpha = standard_cyclic_cocycle(GaloisGenerator::symbolic(s), gamma_symbol());
    auto phi = galois_generator_map(alpha);
    auto r = descent_cocycle_check(phi);
    CHECK(r.ok);
    REQUIRE(r.lambda);
    CHECK(*r.lambda == (s == 1 ? sym_one() : gamma_symbol()));
    for (long ell = 1; ell < static_cast<long>(s); ++ell) {
      auto psi = descent_cocycle_check(galois_generator_map(alpha, ell));
      CHECK(psi.ok);
      CHECK(*psi.lambda == gamma_symbol().pow(ell));
    }
  }

  // A single F-rational coefficient always closes up.
  Scalar delta = SymbolicScalar::rational_symbol("delta");
  for (unsigned s : {2u, 3u}) {
    auto sigma = GaloisGenerator::symbolic(s);
    std::vector<Scalar> c(s, sym_one());
    c[0] = delta;
    IntMatrix shift(s, std::vector<std::int64_t>(s, 0));
    for (unsigned j = 0; j < s; ++j) shift[j][(j + 1) % s] = 1;
    CHECK(descent_cocycle_check(MonomialMap(sigma, shift, c, 1)).ok);
  }

  // A K-valued coefficient does not: the s-fold composite mixes its conjugates.
  {
    auto sigma = GaloisGenerator::symbolic(3);
    std::vector<Scalar> c(3, sym_one());
    c[0] = SymbolicScalar::field_symbol("delta", 0);
    IntMatrix shift{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
    CHECK_FALSE(descent_cocycle_check(MonomialMap(sigma, shift, c, 1)).ok);
  }
  {
    auto sigma = GaloisGenerator::cyclotomic(5, 2);
    std::vector<Scalar> c(4, sigma.one());
    c[0] = CyclotomicElement::zeta(CyclotomicField::get(5));
    IntMatrix shift(4, std::vector<std::int64_t>(4, 0));
    for (unsigned j = 0; j < 4; ++j) shift[j][(j + 1) % 4] = 1;
    CHECK_FALSE(descent_cocycle_check(MonomialMap(sigma, shift, c, 1)).ok);
  }

  CHECK_THROWS_AS(descent_cocycle_check(MonomialMap::identity(GaloisGenerator::symbolic(3))), UsageError);
}

TEST_CASE("lattice_certificate") {
  auto s3 = GaloisGenerator::symbolic(3);
  auto cert = lattice_certificate(build_theta1(s3, 2));
  CHECK(cert.reduced == IntMatrix{{0, 1}, {-1, 1}});
  CHECK(cert.determinant == 1);
  CHECK(cert.birational);
  REQUIRE(cert.inverse);
  CHECK(multiply(cert.reduced, *cert.inverse) == identity_matrix(2));

  auto s4 = GaloisGenerator::symbolic(4);
  auto bad = lattice_certificate(build_theta1(s4, 2));
  CHECK(bad.determinant == 0);
  CHECK_FALSE(bad.birational);
  CHECK_FALSE(bad.inverse);
  CHECK_THROWS_AS(invert_on_torus(build_theta1(s4, 2), bad), DomainError);

  auto id = lattice_certificate(MonomialMap::identity(s4));
  CHECK(id.determinant == 1);
  CHECK(id.reduced == identity_matrix(3));
}

TEST_CASE("Theta_1 is birational iff gcd(ell, s) = 1, s <= 20") {
  for (unsigned s = 2; s <= 20; ++s) {
    auto sigma = GaloisGenerator::symbolic(s);
    for (long ell = 1; ell < static_cast<long>(s); ++ell) {
      auto cert = lattice_certificate(build_theta1(sigma, ell));
      mpq_class oracle = descent::testing::oracle_determinant(cert.reduced);
      CHECK(mpq_class(cert.determinant) == oracle);
      bool unit = (oracle == 1 || oracle == -1);
      CHECK(cert.birational == unit);
      CHECK(unit == (gcd_long(ell, s) == 1));
    }
  }
}

TEST_CASE("invert_on_torus") {
  auto sigma = GaloisGenerator::symbolic(5);
  auto id = MonomialMap::identity(sigma);
  auto inv_id = invert_on_torus(id, lattice_certificate(id));
  CHECK(projectively_equal(inv_id, id, ProjectiveMode::torus).equal);

  for (long ell : {1L, 2L, 3L, 4L}) {
    auto t = build_theta1(sigma, ell);
    auto u = invert_on_torus(t, lattice_certificate(t));
    CHECK(projectively_equal(compose(u, t), id, ProjectiveMode::torus).equal);
    CHECK(projectively_equal(compose(t, u), id, ProjectiveMode::torus).equal);
  }

  std::vector<Scalar> beta;
  std::vector<Scalar> beta_inv;
  for (long i = 0; i < 5; ++i) {
    beta.push_back(gamma_symbol().pow(i));
    beta_inv.push_back(gamma_symbol().pow(-i));
  }
  auto diag = MonomialMap::diagonal(sigma, beta);
  auto inv = invert_on_torus(diag, lattice_certificate(diag));
  CHECK(projectively_equal(inv, MonomialMap::diagonal(sigma, beta_inv), ProjectiveMode::torus).equal);

  // Twisted maps invert with the opposite twist.
  auto alpha = standard_cyclic_cocycle(sigma, gamma_symbol());
  auto phi = galois_generator_map(alpha);
  auto phi_inv = invert_on_torus(phi, lattice_certificate(phi));
  CHECK(phi_inv.twist() == 4);
  CHECK(projectively_equal(compose(phi_inv, phi), id, ProjectiveMode::torus).equal);
}

TEST_CASE("MonomialMap validation") {
  auto sigma = GaloisGenerator::symbolic(3);
  std::vector<Scalar> ones(3, sym_one());
  CHECK_THROWS_AS(MonomialMap(sigma, {{1, 0}, {0, 1}}, ones, 0), UsageError);
  CHECK_THROWS_AS(MonomialMap(sigma, {{1, 0, 0}, {0, 2, 0}, {0, 0, 1}}, ones, 0), UsageError);
  CHECK_THROWS_AS(MonomialMap(sigma, {{1, -1, 0}, {0, 0, 0}, {0, 0, 0}}, ones, 0), UsageError);
  auto cyc = GaloisGenerator::cyclotomic(4, 3);
  CHECK_THROWS_AS(MonomialMap(cyc, {{1, 0}, {0, 1}}, {cyc.one(), cyc.from_rational(Rational(0))}, 0), DomainError);
  CHECK(MonomialMap(sigma, identity_matrix(3), ones, 7).twist() == 1);
}
