#include "descent/cohomology.hpp"

namespace descent {

Cocycle2::Cocycle2(GaloisGenerator sigma, std::vector<std::vector<Scalar>> table)
    : sigma_(std::move(sigma)), table_(std::move(table)) {
  unsigned s = sigma_.order();
  if (table_.size() != s) {
    throw UsageError("cocycle table has " + std::to_string(table_.size()) + " rows, group order is " +
                     std::to_string(s));
  }
  for (const auto& row : table_) {
    if (row.size() != s) throw UsageError("cocycle table is not square");
    for (const auto& entry : row) {
      sigma_.check(entry);
      if (entry.is_zero()) throw DomainError("cocycle values must be units");
      if (rational_ && !sigma_.fixes(entry)) rational_ = false;
    }
  }
}

const Scalar& Cocycle2::operator()(long i, long j) const {
  long s = order();
  return table_[static_cast<std::size_t>(((i % s) + s) % s)][static_cast<std::size_t>(((j % s) + s) % s)];
}

Cocycle2 standard_cyclic_cocycle(const GaloisGenerator& sigma, const Scalar& gamma) {
  sigma.check(gamma);
  if (gamma.is_zero()) throw DomainError("gamma must be nonzero");
  unsigned s = sigma.order();
  Scalar one = sigma.one();
  std::vector<std::vector<Scalar>> table(s, std::vector<Scalar>(s, one));
  for (unsigned i = 0; i < s; ++i) {
    for (unsigned j = 0; j < s; ++j) {
      if (i + j >= s) table[i][j] = gamma;
    }
  }
  return Cocycle2(sigma, std::move(table));
}

CocycleCheck check_2cocycle(const Cocycle2& alpha, bool collect_all) {
  CocycleCheck result;
  unsigned s = alpha.order();
  const auto& sigma = alpha.sigma();
  for (unsigned g = 0; g < s; ++g) {
    for (unsigned h = 0; h < s; ++h) {
      for (unsigned f = 0; f < s; ++f) {
        Scalar lhs = sigma.apply(alpha(g, h), f) * alpha(g + h, f);
        Scalar rhs = alpha(g, h + f) * alpha(h, f);
        if (lhs == rhs) continue;
        if (result.ok) {
          result.ok = false;
          result.witness = GroupTriple{g, h, f};
          if (!collect_all) return result;
        }
        result.violations.push_back(GroupTriple{g, h, f});
      }
    }
  }
  return result;
}

Cocycle2 cocycle_power(const Cocycle2& alpha, long ell) {
  auto table = alpha.table();
  for (auto& row : table) {
    for (auto& entry : row) entry = entry.pow(ell);
  }
  return Cocycle2(alpha.sigma(), std::move(table));
}

Cocycle2 cocycle_product(const Cocycle2& a, const Cocycle2& b) {
  if (!(a.sigma() == b.sigma())) throw UsageError("cocycles over different groups");
  auto table = a.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    for (std::size_t j = 0; j < table.size(); ++j) table[i][j] *= b.table()[i][j];
  }
  return Cocycle2(a.sigma(), std::move(table));
}

bool is_normalized(const Cocycle2& alpha) {
  for (unsigned g = 0; g < alpha.order(); ++g) {
    if (!alpha(0, g).is_one() || !alpha(g, 0).is_one()) return false;
  }
  return true;
}

std::optional<Scalar> standard_form_parameter(const Cocycle2& alpha) {
  unsigned s = alpha.order();
  Scalar gamma = s == 1 ? alpha.sigma().one() : alpha(s - 1, 1);
  if (gamma.is_zero()) return std::nullopt;
  if (!(standard_cyclic_cocycle(alpha.sigma(), gamma) == alpha)) return std::nullopt;
  return gamma;
}

Cocycle2 coboundary(const GaloisGenerator& sigma, const std::vector<Scalar>& cochain) {
  unsigned s = sigma.order();
  if (cochain.size() != s) throw UsageError("cochain length must equal the group order");
  std::vector<std::vector<Scalar>> table(s, std::vector<Scalar>(s, sigma.one()));
  for (unsigned g = 0; g < s; ++g) {
    for (unsigned h = 0; h < s; ++h) {
      table[g][h] = sigma.apply(cochain[g], h) * cochain[h] / cochain[(g + h) % s];
    }
  }
  return Cocycle2(sigma, std::move(table));
}

}  // namespace descent
