#include "subdiv/laurent.hpp"

#include <algorithm>

namespace subdiv {

LaurentSymbol::LaurentSymbol(int lowest, std::vector<Rational> coefficients)
    : lowest_(lowest), coeffs_(std::move(coefficients)) {
  trim();
}

void LaurentSymbol::trim() {
  auto lo = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c != 0; });
  if (lo == coeffs_.end()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  auto hi = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const Rational& c) { return c != 0; }).base();
  lowest_ += static_cast<int>(lo - coeffs_.begin());
  coeffs_.erase(hi, coeffs_.end());
  coeffs_.erase(coeffs_.begin(), lo);
}

LaurentSymbol LaurentSymbol::monomial(int exponent, const Rational& coeff) {
  return LaurentSymbol(exponent, {coeff});
}

LaurentSymbol LaurentSymbol::one_plus_z() {
  return LaurentSymbol(0, {Rational(1), Rational(1)});
}

Rational LaurentSymbol::coefficient(int exponent) const {
  if (is_zero() || exponent < lowest_ || exponent > highest()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(exponent - lowest_)];
}

namespace {

Rational int_power(const Rational& z, int e) {
  Rational base = e < 0 ? Rational(1 / z) : z;
  Rational r(1);
  for (int i = 0, n = e < 0 ? -e : e; i < n; ++i) r *= base;
  return r;
}

}  // namespace

Rational LaurentSymbol::evaluate(const Rational& z) const {
  return derivative_at(0, z);
}

Rational LaurentSymbol::derivative_at(int m, const Rational& z) const {
  Rational sum(0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const int e = lowest_ + static_cast<int>(k);
    // d^m/dz^m z^e = e (e-1) ... (e-m+1) z^(e-m)
    mpz_class falling = 1;
    for (int t = 0; t < m; ++t) falling *= (e - t);
    if (falling == 0) continue;
    sum += coeffs_[k] * Rational(falling) * int_power(z, e - m);
  }
  return sum;
}

LaurentSymbol LaurentSymbol::reflected() const {
  if (is_zero()) return {};
  std::vector<Rational> r(coeffs_.rbegin(), coeffs_.rend());
  return LaurentSymbol(-highest(), std::move(r));
}

LaurentSymbol LaurentSymbol::upsampled(int factor) const {
  if (is_zero()) return {};
  std::vector<Rational> r(static_cast<std::size_t>((span() - 1) * factor + 1));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) r[k * static_cast<std::size_t>(factor)] = coeffs_[k];
  return LaurentSymbol(lowest_ * factor, std::move(r));
}

LaurentSymbol LaurentSymbol::shifted(int by) const {
  LaurentSymbol r = *this;
  if (!r.is_zero()) r.lowest_ += by;
  return r;
}

std::optional<LaurentSymbol> LaurentSymbol::divide_by_one_plus_z() const {
  if (is_zero()) return LaurentSymbol{};
  if (coeffs_.size() < 2) return std::nullopt;
  // c_k = q_k + q_{k-1}, solved from the low end; the top coefficient is the check.
  std::vector<Rational> q(coeffs_.size() - 1);
  Rational carry(0);
  for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
    q[k] = coeffs_[k] - carry;
    carry = q[k];
  }
  if (coeffs_.back() != carry) return std::nullopt;
  return LaurentSymbol(lowest_, std::move(q));
}

int LaurentSymbol::one_plus_z_multiplicity() const {
  if (is_zero()) return 0;
  int k = 0;
  LaurentSymbol current = *this;
  while (auto next = current.divide_by_one_plus_z()) {
    ++k;
    current = std::move(*next);
  }
  return k;
}

LaurentSymbol& LaurentSymbol::operator+=(const LaurentSymbol& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(lowest_, rhs.lowest_);
  const int hi = std::max(highest(), rhs.highest());
  std::vector<Rational> r(static_cast<std::size_t>(hi - lo + 1));
  for (int e = lo; e <= hi; ++e) r[static_cast<std::size_t>(e - lo)] = coefficient(e) + rhs.coefficient(e);
  *this = LaurentSymbol(lo, std::move(r));
  return *this;
}

LaurentSymbol& LaurentSymbol::operator*=(const Rational& scale) {
  for (auto& c : coeffs_) c *= scale;
  trim();
  return *this;
}

LaurentSymbol operator*(const LaurentSymbol& lhs, const LaurentSymbol& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> r(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      if (rhs.coeffs_[j] == 0) continue;
      r[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return LaurentSymbol(lhs.lowest_ + rhs.lowest_, std::move(r));
}

std::string to_string(const LaurentSymbol& symbol) {
  if (symbol.is_zero()) return "0";
  std::string out;
  for (int e = symbol.lowest(); e <= symbol.highest(); ++e) {
    const Rational c = symbol.coefficient(e);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    out += to_string(abs(c));
    if (e != 0) out += "*z^" + std::to_string(e);
  }
  return out;
}

}  // namespace subdiv
