#include "descent/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

namespace descent {

namespace {

SweepRow run_row(unsigned s, long ell) {
  auto spec = ThetaSpec::symbolic(s, ell);
  auto result = run_pipeline(spec);
  SweepRow row;
  row.s = s;
  row.ell = ell;
  row.coprime = spec.coprime();
  row.ok = result.ok;
  if (result.beta) {
    for (const auto& b : result.beta->beta) {
      row.beta_exponents.push_back(gamma_exponent(b, spec.gamma, static_cast<long>(s) * ell + 1));
    }
  }
  if (result.ok) {
    row.verdict = "pass";
  } else if (result.failed_stage == "lattice_certificate") {
    row.verdict = "not-birational";
  } else {
    row.verdict = "fail:" + result.failed_stage;
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(unsigned max_s, bool include_noncoprime, unsigned workers) {
  std::vector<std::pair<unsigned, long>> jobs;
  for (unsigned s = 2; s <= max_s; ++s) {
    for (long ell = 1; ell < static_cast<long>(s); ++ell) {
      if (include_noncoprime || gcd_long(ell, s) == 1) jobs.emplace_back(s, ell);
    }
  }
  std::vector<SweepRow> rows(jobs.size());
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(jobs.size(), 1));

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) rows[i] = run_row(jobs[i].first, jobs[i].second);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return rows;
}

std::string format_sweep(const std::vector<SweepRow>& rows) {
  std::ostringstream os;
  os << "   s  ell  beta (exponents of gamma)                     verdict\n";
  for (const auto& row : rows) {
    std::ostringstream beta;
    beta << "(";
    for (std::size_t i = 0; i < row.beta_exponents.size(); ++i) {
      if (i > 0) beta << ",";
      if (row.beta_exponents[i]) {
        beta << *row.beta_exponents[i];
      } else {
        beta << "?";
      }
    }
    beta << ")";
    std::string b = beta.str();
    if (b.size() < 45) b.resize(45, ' ');
    os.width(4);
    os << row.s;
    os.width(5);
    os << row.ell << "  " << b << " " << row.verdict << "\n";
  }
  return os.str();
}

bool sweep_passed(const std::vector<SweepRow>& rows) {
  return std::all_of(rows.begin(), rows.end(), [](const SweepRow& r) {
    return r.coprime ? r.ok : r.verdict == "not-birational";
  });
}

}  // namespace descent
