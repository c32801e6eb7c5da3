#include "subdiv/bivar_poly.hpp"

#include <algorithm>
#include <vector>

namespace subdiv {

BivarPoly::BivarPoly(const Rational& constant) {
  add_term({0, 0}, constant);
}

BivarPoly BivarPoly::alpha() {
  return monomial(1, 0, Rational(1));
}

BivarPoly BivarPoly::beta() {
  return monomial(0, 1, Rational(1));
}

BivarPoly BivarPoly::monomial(int alpha_degree, int beta_degree, const Rational& coeff) {
  BivarPoly p;
  p.add_term({alpha_degree, beta_degree}, coeff);
  return p;
}

void BivarPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational BivarPoly::coefficient(int alpha_degree, int beta_degree) const {
  auto it = terms_.find({alpha_degree, beta_degree});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivarPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.first + e.second);
  return d;
}

bool BivarPoly::depends_on_alpha() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.first > 0; });
}

bool BivarPoly::depends_on_beta() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.second > 0; });
}

namespace {

Rational power(const Rational& base, int exponent) {
  Rational r(1);
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

}  // namespace

Rational BivarPoly::evaluate(const Rational& alpha, const Rational& beta) const {
  Rational sum(0);
  for (const auto& [e, c] : terms_) sum += c * power(alpha, e.first) * power(beta, e.second);
  return sum;
}

BivarPoly BivarPoly::substitute_alpha(const Rational& alpha) const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) out.add_term({0, e.second}, c * power(alpha, e.first));
  return out;
}

BivarPoly BivarPoly::substitute_beta(const Rational& beta) const {
  BivarPoly out;
  for (const auto& [e, c] : terms_) out.add_term({e.first, 0}, c * power(beta, e.second));
  return out;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

BivarPoly& BivarPoly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scale;
  return *this;
}

BivarPoly operator*(const BivarPoly& lhs, const BivarPoly& rhs) {
  BivarPoly out;
  for (const auto& [el, cl] : lhs.terms_) {
    for (const auto& [er, cr] : rhs.terms_) {
      out.add_term({el.first + er.first, el.second + er.second}, cl * cr);
    }
  }
  return out;
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

mpz_class BivarPoly::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::string to_string(const BivarPoly& poly, const SymbolNames& names) {
  if (poly.is_zero()) return "0";

  // constant, alpha, beta, alpha*beta, then anything of higher degree
  std::vector<std::pair<BivarPoly::Exponents, Rational>> terms(poly.terms().begin(), poly.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    auto key = [](const BivarPoly::Exponents& e) {
      return std::make_pair(e.first + e.second, std::make_pair(e.second, e.first));
    };
    return key(a.first) < key(b.first);
  });

  const bool ascii = names.minus == "-";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    Rational magnitude = negative ? Rational(-c) : c;

    std::string symbols;
    for (int i = 0; i < e.first; ++i) symbols += (symbols.empty() || !ascii ? "" : "*") + names.alpha;
    for (int i = 0; i < e.second; ++i) symbols += (symbols.empty() || !ascii ? "" : "*") + names.beta;

    std::string body;
    if (symbols.empty()) {
      body = to_string(magnitude);
    } else if (magnitude == 1) {
      body = symbols;
    } else if (magnitude.get_den() == 1) {
      body = to_string(magnitude) + (ascii ? "*" : "") + symbols;
    } else {
      body = "(" + to_string(magnitude) + ")" + (ascii ? "*" : "") + symbols;
    }

    if (first) {
      out += (negative ? names.minus : "") + body;
    } else {
      out += (negative ? names.minus : std::string("+")) + body;
    }
    first = false;
  }
  return out;
}

}  // namespace subdiv
