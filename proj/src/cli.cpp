#include "descent/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"

#include "descent/crossed_product.hpp"
#include "descent/sweep.hpp"

namespace descent::cli {

namespace {

bool gamma_is_symbolic(const RunConfig& config) { return !config.gamma || *config.gamma == "symbolic"; }

// sigma for the requested backend. For the cyclotomic backend the default
// generator is the smallest primitive root; `full_group` additionally demands
// that sigma generate all of Gal(Q(zeta_n)/Q).
GaloisGenerator make_generator(const RunConfig& config, bool full_group) {
  if (config.backend == "symbolic") {
    if (!config.s) throw UsageError("--s is required for the symbolic backend");
    if (*config.s == 0) throw UsageError("--s must be positive");
    return GaloisGenerator::symbolic(*config.s);
  }
  if (config.backend != "cyclotomic") throw UsageError("unknown backend '" + config.backend + "'");
  if (!config.conductor || *config.conductor == 0) throw UsageError("--conductor is required for the cyclotomic backend");
  unsigned n = *config.conductor;
  if (full_group && !has_primitive_root(n)) {
    throw UsageError("(Z/" + std::to_string(n) + ")^x is not cyclic");
  }
  long g = config.generator ? *config.generator : static_cast<long>(smallest_primitive_root(n));
  auto sigma = GaloisGenerator::cyclotomic(n, g);
  if (full_group && sigma.order() != euler_phi(n)) {
    throw UsageError("generator " + std::to_string(g) + " does not generate (Z/" + std::to_string(n) + ")^x");
  }
  if (config.s && *config.s != sigma.order()) {
    throw UsageError("--s " + std::to_string(*config.s) + " differs from the generator order " +
                     std::to_string(sigma.order()));
  }
  return sigma;
}

Scalar make_gamma(const RunConfig& config, const GaloisGenerator& sigma) {
  if (sigma.backend() == Backend::symbolic) {
    if (gamma_is_symbolic(config)) return SymbolicScalar::rational_symbol("gamma");
    Rational r = Rational::parse(*config.gamma);
    if (r != Rational(1) && r != Rational(-1)) {
      throw UsageError("the symbolic backend takes --gamma symbolic, 1 or -1");
    }
    return sigma.from_rational(r);
  }
  if (gamma_is_symbolic(config)) throw UsageError("the cyclotomic backend needs a rational --gamma");
  Rational r = Rational::parse(*config.gamma);
  if (r.is_zero()) throw UsageError("--gamma must be nonzero");
  return sigma.from_rational(r);
}

std::string triple_string(const GroupTriple& t) {
  return "(sigma^" + std::to_string(t.g) + ", sigma^" + std::to_string(t.h) + ", sigma^" + std::to_string(t.f) + ")";
}

Scalar entry_from_json(const Json& entry, const GaloisGenerator& sigma) {
  if (sigma.backend() == Backend::symbolic) {
    if (entry.is_number_integer()) return sigma.from_rational(Rational(entry.get<long>()));
    return SymbolicScalar::parse(entry.get<std::string>());
  }
  auto field = sigma.field();
  auto rational = [](const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    return Rational::parse(v.get<std::string>());
  };
  if (entry.is_array()) {
    std::vector<Rational> coords;
    for (const auto& v : entry) coords.push_back(rational(v));
    return CyclotomicElement(field, std::move(coords));
  }
  return CyclotomicElement::from_rational(field, rational(entry));
}

}  // namespace

Cocycle2 cocycle_from_json(const Json& doc) {
  try {
    RunConfig config;
    config.backend = doc.value("backend", std::string("symbolic"));
    if (doc.contains("s")) config.s = doc.at("s").get<unsigned>();
    if (doc.contains("conductor")) config.conductor = doc.at("conductor").get<unsigned>();
    if (doc.contains("generator")) config.generator = doc.at("generator").get<long>();
    if (!config.s && config.backend == "symbolic") config.s = static_cast<unsigned>(doc.at("table").size());
    auto sigma = make_generator(config, false);
    std::vector<std::vector<Scalar>> table;
    for (const auto& row : doc.at("table")) {
      std::vector<Scalar> r;
      for (const auto& entry : row) r.push_back(entry_from_json(entry, sigma));
      table.push_back(std::move(r));
    }
    return Cocycle2(sigma, std::move(table));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed table document: ") + e.what());
  }
}

int cmd_verify_cocycle(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::optional<Cocycle2> alpha;
    if (!config.table.empty()) {
      std::ifstream in(config.table);
      if (!in) throw UsageError("cannot read table file '" + config.table + "'");
      Json doc;
      try {
        doc = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("table file is not valid JSON: ") + e.what());
      }
      alpha = cocycle_from_json(doc);
      out << "cocycle table: " << config.table << "\n";
    } else {
      auto sigma = make_generator(config, false);
      alpha = standard_cyclic_cocycle(sigma, make_gamma(config, sigma));
      out << "standard cyclic cocycle, gamma = " << make_gamma(config, sigma) << "\n";
    }
    unsigned s = alpha->order();
    out << "group: " << alpha->sigma().describe() << "\n";
    auto check = check_2cocycle(*alpha, true);
    out << "triples checked: " << s * s * s << "\n";
    out << "normalized: " << (is_normalized(*alpha) ? "yes" : "no") << "\n";
    if (check.ok) {
      out << "result: pass\n";
      return kExitPass;
    }
    const auto& w = *check.witness;
    out << "result: fail\n";
    out << "witness (g, h, f): " << triple_string(w) << "\n";
    out << "  f(alpha(g,h)) alpha(gh,f) = " << alpha->sigma().apply((*alpha)(w.g, w.h), w.f) * (*alpha)(w.g + w.h, w.f)
        << "\n";
    out << "  alpha(g,hf) alpha(h,f)    = " << (*alpha)(w.g, w.h + w.f) * (*alpha)(w.h, w.f) << "\n";
    out << "violating triples: " << check.violations.size() << "\n";
    return kExitFail;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

int cmd_roquette(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<ThetaSpec> spec;
  try {
    auto sigma = make_generator(config, false);
    unsigned s = sigma.order();
    if (s < 2) throw UsageError("the construction needs s >= 2");
    if (config.ell < 1 || config.ell >= static_cast<long>(s)) throw UsageError("--ell must satisfy 1 <= ell < s");
    spec = ThetaSpec{s, config.ell, sigma, make_gamma(config, sigma)};
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  auto result = run_pipeline(*spec);
  Json doc = pipeline_to_json(*spec, result);
  out << "s = " << spec->s << ", ell = " << spec->ell << ", " << spec->sigma.describe() << ", gamma = " << spec->gamma
      << "\n";
  for (const auto& st : result.stages) {
    out << "  " << (st.pass ? "pass " : "FAIL ") << st.name;
    if (!st.pass) out << ": " << st.detail;
    out << "\n";
  }
  if (result.beta) {
    out << "beta = (";
    for (std::size_t i = 0; i < result.beta->beta.size(); ++i) out << (i ? ", " : "") << result.beta->beta[i];
    out << "), k = " << result.beta->k << ", m = " << result.beta->m << "\n";
  }
  if (result.lattice) out << "chart determinant = " << result.lattice->determinant.get_str() << "\n";
  out << (result.ok ? "certified" : "failed at " + result.failed_stage) << "\n";

  if (!config.out.empty()) {
    std::ofstream file(config.out);
    if (!file) {
      err << "error: cannot write '" << config.out << "'\n";
      return kExitFail;
    }
    file << doc.dump(2) << "\n";
    out << "certificate written to " << config.out << "\n";
  } else {
    out << doc.dump(2) << "\n";
  }
  return result.ok ? kExitPass : kExitFail;
}

int cmd_sweep(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.max_s < 2) {
    err << "usage error: --max-s must be at least 2\n";
    return kExitUsage;
  }
  auto rows = run_sweep(config.max_s, config.include_noncoprime);
  out << format_sweep(rows);
  bool passed = sweep_passed(rows);
  out << rows.size() << " rows, " << (passed ? "all as expected" : "unexpected verdicts present") << "\n";
  return passed ? kExitPass : kExitFail;
}

int cmd_crossed(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::optional<Cocycle2> alpha;
  try {
    RunConfig c = config;
    c.backend = "cyclotomic";
    if (!c.gamma) c.gamma = "-1";
    auto sigma = make_generator(c, true);
    alpha = standard_cyclic_cocycle(sigma, make_gamma(c, sigma));
  } catch (const std::exception& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }
  const auto& sigma = alpha->sigma();
  unsigned s = alpha->order();
  auto gamma = *standard_form_parameter(*alpha);
  out << "K = Q(zeta_" << sigma.automorphism()->conductor() << "), sigma: zeta -> zeta^"
      << sigma.automorphism()->exponent() << ", s = " << s << ", gamma = " << gamma << "\n";
  out << "dim_Q = " << algebra_dimension(*alpha) << "\n";

  bool cocycle = check_2cocycle(*alpha).ok;
  bool associative = associativity_check(*alpha).ok;
  std::size_t center = center_dimension(*alpha);
  auto split = splitting_check(*alpha);

  // u^s = gamma and zeta u = u sigma(zeta)
  auto field = sigma.field();
  auto u = crossed_basis(*alpha, 1 % s, 0);
  auto zeta = crossed_scalar(*alpha, CyclotomicElement::zeta(field));
  auto u_power = crossed_one(*alpha);
  for (unsigned i = 0; i < s; ++i) u_power = crossed_multiply(u_power, u, *alpha);
  bool u_relation = u_power == crossed_scalar(*alpha, gamma.cyclotomic());
  bool twist_relation = crossed_multiply(zeta, u, *alpha) ==
                        crossed_multiply(u, crossed_scalar(*alpha, CyclotomicElement::zeta(field).apply(
                                                                       *sigma.automorphism())),
                                         *alpha);

  out << "cocycle condition: " << (cocycle ? "pass" : "fail") << "\n";
  out << "associative (basis triples): " << (associative ? "pass" : "fail") << "\n";
  out << "u^s = gamma: " << (u_relation ? "pass" : "fail") << "\n";
  out << "zeta u = u sigma(zeta): " << (twist_relation ? "pass" : "fail") << "\n";
  out << "center dimension: " << center << "\n";
  out << "splitting multiplicative: " << (split.multiplicative ? "pass" : "fail") << "\n";
  out << "splitting rank: " << split.rank << " / " << split.expected_rank << "\n";
  bool ok = cocycle && associative && u_relation && twist_relation && center == 1 && split.ok();
  out << "result: " << (ok ? "pass" : "fail") << "\n";
  return ok ? kExitPass : kExitFail;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cyclic algebras, Galois descent on projective space and explicit birational maps"};
  app.require_subcommand(1);
  RunConfig config;
  unsigned s_value = 0;

  auto add_backend = [&](CLI::App* cmd) {
    cmd->add_option("--backend", config.backend, "symbolic | cyclotomic")->check(CLI::IsMember({"symbolic", "cyclotomic"}));
    cmd->add_option("--conductor", config.conductor, "n for K = Q(zeta_n)");
    cmd->add_option("--generator", config.generator, "g for sigma: zeta -> zeta^g");
  };

  auto* verify = app.add_subcommand("verify-cocycle", "check the 2-cocycle condition exhaustively");
  auto* verify_s = verify->add_option("--s", s_value, "group order");
  verify->add_option("--gamma", config.gamma, "rational literal or 'symbolic'");
  verify->add_option("--table", config.table, "JSON table file");
  add_backend(verify);

  auto* roquette = app.add_subcommand("roquette", "build and certify the birational map for (s, ell)");
  auto* roquette_s = roquette->add_option("--s", s_value, "degree of the algebra");
  roquette->add_option("--ell", config.ell, "tensor power, 1 <= ell < s");
  roquette->add_option("--gamma", config.gamma, "rational literal or 'symbolic'");
  roquette->add_option("--out", config.out, "certificate output path");
  add_backend(roquette);

  auto* sweep = app.add_subcommand("sweep", "run the construction for all 2 <= s <= max-s");
  sweep->add_option("--max-s", config.max_s, "largest s");
  sweep->add_flag("--include-noncoprime", config.include_noncoprime, "also run ell with gcd(ell, s) != 1");

  auto* crossed = app.add_subcommand("crossed", "crossed-product checks over Q(zeta_n)");
  crossed->add_option("--conductor", config.conductor, "n for K = Q(zeta_n)")->required();
  crossed->add_option("--generator", config.generator, "g for sigma: zeta -> zeta^g");
  crossed->add_option("--gamma", config.gamma, "rational gamma (default -1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  if (verify->parsed()) {
    if (verify_s->count() > 0) config.s = s_value;
    return cmd_verify_cocycle(config, out, err);
  }
  if (roquette->parsed()) {
    if (roquette_s->count() > 0) config.s = s_value;
    return cmd_roquette(config, out, err);
  }
  if (sweep->parsed()) return cmd_sweep(config, out, err);
  return cmd_crossed(config, out, err);
}

}  // namespace descent::cli
