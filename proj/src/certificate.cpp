#include "descent/certificate.hpp"

namespace descent {

namespace {

Json int_matrix(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) out.push_back(row);
  return out;
}

Json lattice_json(const LatticeCertificate& cert) {
  Json j;
  if (cert.determinant.fits_slong_p()) {
    j["det"] = cert.determinant.get_si();
  } else {
    j["det"] = cert.determinant.get_str();
  }
  j["verdict"] = cert.birational;
  j["reduced"] = int_matrix(cert.reduced);
  return j;
}

void beta_json(Json& doc, const ThetaSpec& spec, const BetaSolution& beta) {
  Json exps = Json::array();
  Json values = Json::array();
  long bound = static_cast<long>(spec.s) * spec.ell + 1;
  for (const auto& b : beta.beta) {
    auto e = gamma_exponent(b, spec.gamma, bound);
    if (e) {
      exps.push_back(*e);
    } else {
      exps.push_back(nullptr);
    }
    values.push_back(b.to_string());
  }
  doc["beta"] = exps;
  doc["beta_values"] = values;
  doc["k"] = beta.k.to_string();
  doc["m"] = beta.m;
}

Json stages_json(const std::vector<StageRecord>& stages) {
  Json out = Json::array();
  for (const auto& st : stages) {
    Json j{{"name", st.name}, {"pass", st.pass}, {"millis", st.millis}};
    if (!st.detail.empty()) j["detail"] = st.detail;
    out.push_back(j);
  }
  return out;
}

Json without_timings(Json doc) {
  if (doc.contains("stages")) {
    for (auto& st : doc["stages"]) st.erase("millis");
  }
  return doc;
}

// First path at which two documents differ, empty when equal.
std::string first_difference(const Json& a, const Json& b, const std::string& path) {
  if (a.type() != b.type() && !(a.is_number() && b.is_number())) return path.empty() ? "/" : path;
  if (a.is_object()) {
    for (const auto& [key, value] : a.items()) {
      if (!b.contains(key)) return path + "/" + key;
      auto d = first_difference(value, b.at(key), path + "/" + key);
      if (!d.empty()) return d;
    }
    for (const auto& [key, value] : b.items()) {
      if (!a.contains(key)) return path + "/" + key;
    }
    return {};
  }
  if (a.is_array()) {
    if (a.size() != b.size()) return path;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto d = first_difference(a[i], b[i], path + "/" + std::to_string(i));
      if (!d.empty()) return d;
    }
    return {};
  }
  return a == b ? std::string() : (path.empty() ? "/" : path);
}

}  // namespace

Json spec_to_json(const ThetaSpec& spec) {
  Json j;
  j["s"] = spec.s;
  j["ell"] = spec.ell;
  j["backend"] = to_string(spec.sigma.backend());
  if (spec.sigma.backend() == Backend::cyclotomic) {
    j["gamma"] = spec.gamma.cyclotomic().coefficients()[0].to_string();
    j["conductor"] = spec.sigma.automorphism()->conductor();
    j["generator"] = spec.sigma.automorphism()->exponent();
  } else {
    j["gamma"] = "symbolic";
  }
  return j;
}

ThetaSpec spec_from_json(const Json& j) {
  try {
    auto s = j.at("s").get<unsigned>();
    auto ell = j.at("ell").get<long>();
    auto backend = j.at("backend").get<std::string>();
    if (backend == "symbolic") return ThetaSpec::symbolic(s, ell);
    if (backend == "cyclotomic") {
      auto spec = ThetaSpec::cyclotomic(j.at("conductor").get<unsigned>(), j.at("generator").get<long>(), ell,
                                        Rational::parse(j.at("gamma").get<std::string>()));
      if (spec.s != s) throw UsageError("spec s does not match the generator order");
      return spec;
    }
    throw UsageError("unknown backend '" + backend + "'");
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("malformed spec: ") + e.what());
  }
}

Json pipeline_to_json(const ThetaSpec& spec, const PipelineResult& result) {
  Json doc;
  doc["status"] = result.ok ? "certified" : "failed";
  doc["spec"] = spec_to_json(spec);
  if (!result.ok) {
    doc["failed_stage"] = result.failed_stage;
    doc["failure"] = result.failure;
  }
  if (result.beta) beta_json(doc, spec, *result.beta);
  if (result.diagram) {
    doc["diagram"] = {{"verdict", result.diagram->commutes},
                      {"lambda", result.diagram->lambda ? Json(result.diagram->lambda->to_string()) : Json(nullptr)}};
  }
  if (result.lattice) doc["lattice"] = lattice_json(*result.lattice);
  if (result.certificate) {
    doc["theta1_inverse"] = int_matrix(result.certificate->theta1_inverse.exponents());
    doc["inverse_cross_check"] = result.certificate->inverse_cross_check;
  } else {
    doc["inverse_cross_check"] = false;
  }
  doc["stages"] = stages_json(result.stages);
  return doc;
}

ReplayResult revalidate_certificate(const Json& document) {
  ReplayResult out;
  ThetaSpec spec = spec_from_json(document.at("spec"));
  Json replay = pipeline_to_json(spec, run_pipeline(spec));
  out.difference = first_difference(without_timings(document), without_timings(replay), "");
  out.identical = out.difference.empty();
  return out;
}

}  // namespace descent
