#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subdiv/rational.hpp"
#include "subdiv/stencil.hpp"

namespace subdiv {

/// Exact Laurent polynomial sum_i c_i z^i with rational coefficients.
/// Stored trimmed: the lowest and highest stored coefficients are nonzero.
class LaurentSymbol {
 public:
  LaurentSymbol() = default;
  LaurentSymbol(int lowest, std::vector<Rational> coefficients);
  explicit LaurentSymbol(const Stencil<Rational>& stencil)
      : LaurentSymbol(stencil.first(), stencil.values()) {}

  static LaurentSymbol monomial(int exponent, const Rational& coeff);
  /// (1 + z)
  static LaurentSymbol one_plus_z();

  bool is_zero() const { return coeffs_.empty(); }
  int lowest() const { return lowest_; }
  int highest() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
  /// highest - lowest + 1, or 0 for the zero symbol.
  int span() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int exponent) const;

  Rational evaluate(const Rational& z) const;
  /// m-th derivative in z evaluated at z (z != 0 when negative exponents exist).
  Rational derivative_at(int m, const Rational& z) const;

  /// a(1/z)
  LaurentSymbol reflected() const;
  /// a(z^factor)
  LaurentSymbol upsampled(int factor) const;
  /// z^by * a(z)
  LaurentSymbol shifted(int by) const;

  /// Exact synthetic division by (1 + z); empty when the remainder is nonzero.
  std::optional<LaurentSymbol> divide_by_one_plus_z() const;
  /// Largest k with (1+z)^k | a(z). The zero symbol reports 0.
  int one_plus_z_multiplicity() const;

  LaurentSymbol& operator+=(const LaurentSymbol& rhs);
  LaurentSymbol& operator*=(const Rational& scale);
  friend LaurentSymbol operator+(LaurentSymbol lhs, const LaurentSymbol& rhs) { return lhs += rhs; }
  friend LaurentSymbol operator*(LaurentSymbol lhs, const Rational& rhs) { return lhs *= rhs; }
  friend LaurentSymbol operator*(const LaurentSymbol& lhs, const LaurentSymbol& rhs);
  friend bool operator==(const LaurentSymbol& a, const LaurentSymbol& b) {
    return a.lowest_ == b.lowest_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  int lowest_ = 0;
  std::vector<Rational> coeffs_;
};

/// "1/8*z^-2 + 1/2*z^-1 + ..." for diagnostics.
std::string to_string(const LaurentSymbol& symbol);

}  // namespace subdiv
