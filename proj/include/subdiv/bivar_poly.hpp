#pragma once

#include <map>
#include <string>
#include <utility>

#include "subdiv/rational.hpp"

namespace subdiv {

/// Exact polynomial in the two tension parameters (alpha, beta).
/// Terms are keyed by (degree in alpha, degree in beta); zero coefficients
/// are never stored.
class BivarPoly {
 public:
  using Exponents = std::pair<int, int>;
  using Terms = std::map<Exponents, Rational>;

  BivarPoly() = default;
  BivarPoly(const Rational& constant);  // NOLINT: implicit by design of the algebra
  BivarPoly(int constant) : BivarPoly(Rational(constant)) {}

  static BivarPoly alpha();
  static BivarPoly beta();
  static BivarPoly monomial(int alpha_degree, int beta_degree, const Rational& coeff);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int alpha_degree, int beta_degree) const;
  int total_degree() const;
  bool depends_on_alpha() const;
  bool depends_on_beta() const;

  Rational evaluate(const Rational& alpha, const Rational& beta) const;
  /// Substitutes one parameter, keeping the other symbolic.
  BivarPoly substitute_alpha(const Rational& alpha) const;
  BivarPoly substitute_beta(const Rational& beta) const;

  BivarPoly& operator+=(const BivarPoly& rhs);
  BivarPoly& operator-=(const BivarPoly& rhs);
  BivarPoly& operator*=(const Rational& scale);
  friend BivarPoly operator+(BivarPoly lhs, const BivarPoly& rhs) { return lhs += rhs; }
  friend BivarPoly operator-(BivarPoly lhs, const BivarPoly& rhs) { return lhs -= rhs; }
  friend BivarPoly operator*(BivarPoly lhs, const Rational& rhs) { return lhs *= rhs; }
  friend BivarPoly operator*(const Rational& lhs, BivarPoly rhs) { return rhs *= lhs; }
  friend BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs);
  BivarPoly operator-() const;

  friend bool operator==(const BivarPoly& lhs, const BivarPoly& rhs) { return lhs.terms_ == rhs.terms_; }

  /// Smallest positive integer L such that L * (every coefficient) is integral.
  mpz_class denominator_lcm() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

struct SymbolNames {
  std::string alpha = "α";
  std::string beta = "β";
  std::string minus = "−";

  static SymbolNames unicode() { return {}; }
  static SymbolNames ascii() { return {"alpha", "beta", "-"}; }
};

/// Renders constant term first, then alpha, beta, alpha*beta, ... e.g. "2−4α".
std::string to_string(const BivarPoly& poly, const SymbolNames& names = SymbolNames::unicode());

}  // namespace subdiv
