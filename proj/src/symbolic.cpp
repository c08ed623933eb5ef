#include "descent/symbolic.hpp"

#include <cctype>
#include <sstream>

#include "descent/errors.hpp"

namespace descent {

namespace {

long parse_long(std::string_view text, std::string_view context) {
  if (text.empty()) throw UsageError("missing integer in '" + std::string(context) + "'");
  std::size_t i = text[0] == '-' ? 1 : 0;
  if (i == text.size()) throw UsageError("missing integer in '" + std::string(context) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw UsageError("malformed integer in '" + std::string(context) + "'");
    }
  }
  return std::stol(std::string(text));
}

}  // namespace

SymbolicScalar SymbolicScalar::minus_one() {
  SymbolicScalar s;
  s.sign_ = -1;
  return s;
}

SymbolicScalar SymbolicScalar::rational_symbol(std::string name, long exponent) {
  SymbolicScalar s;
  s.add(Symbol{std::move(name), true, 0}, exponent);
  return s;
}

SymbolicScalar SymbolicScalar::field_symbol(std::string name, long tag, long exponent) {
  SymbolicScalar s;
  s.add(Symbol{std::move(name), false, tag}, exponent);
  return s;
}

void SymbolicScalar::add(const Symbol& sym, long exponent) {
  if (exponent == 0) return;
  auto [it, inserted] = exponents_.emplace(sym, exponent);
  if (!inserted) {
    it->second += exponent;
    if (it->second == 0) exponents_.erase(it);
  }
}

long SymbolicScalar::exponent_of(const Symbol& sym) const {
  auto it = exponents_.find(sym);
  return it == exponents_.end() ? 0 : it->second;
}

long SymbolicScalar::rational_exponent(const std::string& name) const { return exponent_of(Symbol{name, true, 0}); }

bool SymbolicScalar::is_rational() const {
  for (const auto& [sym, e] : exponents_) {
    if (!sym.rational) return false;
  }
  return true;
}

SymbolicScalar SymbolicScalar::inverse() const {
  SymbolicScalar out(*this);
  for (auto& [sym, e] : out.exponents_) e = -e;
  return out;
}

SymbolicScalar SymbolicScalar::pow(long exponent) const {
  SymbolicScalar out;
  if (exponent == 0) return out;
  out.sign_ = (sign_ < 0 && (exponent % 2 != 0)) ? -1 : 1;
  for (const auto& [sym, e] : exponents_) out.exponents_.emplace(sym, e * exponent);
  return out;
}

SymbolicScalar SymbolicScalar::apply_sigma(long power, long order) const {
  if (order <= 0) throw UsageError("sigma order must be positive");
  SymbolicScalar out;
  out.sign_ = sign_;
  for (const auto& [sym, e] : exponents_) {
    Symbol moved = sym;
    if (!sym.rational) moved.tag = (((sym.tag + power) % order) + order) % order;
    out.add(moved, e);
  }
  return out;
}

SymbolicScalar& SymbolicScalar::operator*=(const SymbolicScalar& rhs) {
  sign_ *= rhs.sign_;
  for (const auto& [sym, e] : rhs.exponents_) add(sym, e);
  return *this;
}

SymbolicScalar SymbolicScalar::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw UsageError("empty symbolic scalar");
  SymbolicScalar out;
  if (s[0] == '-' || s[0] == '+') {
    if (s[0] == '-') out.sign_ = -1;
    s.erase(0, 1);
  }
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('*', pos);
    std::string_view factor(s.data() + pos, (end == std::string::npos ? s.size() : end) - pos);
    if (factor.empty()) throw UsageError("empty factor in '" + std::string(text) + "'");
    std::size_t caret = factor.find('^');
    std::string_view base = factor.substr(0, caret);
    long exponent = caret == std::string_view::npos ? 1 : parse_long(factor.substr(caret + 1), text);
    if (base == "1") {
      // unit factor
    } else {
      std::size_t at = base.find('@');
      std::string name(base.substr(0, at));
      if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
        throw UsageError("malformed symbol name in '" + std::string(text) + "'");
      }
      if (at == std::string_view::npos) {
        out.add(Symbol{name, true, 0}, exponent);
      } else {
        out.add(Symbol{name, false, parse_long(base.substr(at + 1), text)}, exponent);
      }
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string SymbolicScalar::to_string() const {
  std::ostringstream os;
  if (sign_ < 0) os << "-";
  if (exponents_.empty()) {
    os << "1";
    return os.str();
  }
  bool first = true;
  for (const auto& [sym, e] : exponents_) {
    if (!first) os << "*";
    first = false;
    os << sym.name;
    if (!sym.rational) os << "@" << sym.tag;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace descent
