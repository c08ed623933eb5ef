#pragma once

#include <compare>
#include <map>
#include <ostream>
#include <string>
#include <string_view>

namespace descent {

/// A formal unit. Symbols declared rational live in the base field and are
/// fixed by the Galois generator; all others carry a power-of-sigma tag.
struct Symbol {
  std::string name;
  bool rational = false;
  long tag = 0;

  friend auto operator<=>(const Symbol&, const Symbol&) = default;
  friend bool operator==(const Symbol&, const Symbol&) = default;
};

/// Signed Laurent monomial over named symbols. Multiplicative only.
class SymbolicScalar {
 public:
  SymbolicScalar() = default;

  static SymbolicScalar one() { return {}; }
  static SymbolicScalar minus_one();
  /// A base-field unit such as gamma or beta_i.
  static SymbolicScalar rational_symbol(std::string name, long exponent = 1);
  /// A field unit sigma^tag(name), e.g. a point coordinate.
  static SymbolicScalar field_symbol(std::string name, long tag = 0, long exponent = 1);

  /// Parses "1", "-1", "gamma^2*a@1^-1", ... Names with an "@tag" suffix are
  /// field symbols; others are rational symbols.
  static SymbolicScalar parse(std::string_view text);

  int sign() const { return sign_; }
  const std::map<Symbol, long>& exponents() const { return exponents_; }
  long exponent_of(const Symbol& sym) const;
  /// Exponent of the rational symbol `name` (0 if absent).
  long rational_exponent(const std::string& name) const;

  bool is_one() const { return sign_ == 1 && exponents_.empty(); }
  /// True when every symbol is declared rational (sigma-fixed).
  bool is_rational() const;

  SymbolicScalar inverse() const;
  SymbolicScalar pow(long exponent) const;
  /// sigma^power acting with sigma of order `order` (tags taken mod order).
  SymbolicScalar apply_sigma(long power, long order) const;

  SymbolicScalar& operator*=(const SymbolicScalar& rhs);
  friend SymbolicScalar operator*(SymbolicScalar a, const SymbolicScalar& b) { return a *= b; }

  friend bool operator==(const SymbolicScalar&, const SymbolicScalar&) = default;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const SymbolicScalar& s) { return os << s.to_string(); }

 private:
  void add(const Symbol& sym, long exponent);

  int sign_ = 1;
  std::map<Symbol, long> exponents_;
};

}  // namespace descent
