#include "subdiv/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "subdiv/error.hpp"

namespace subdiv {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::parameter: return "parameter";
    case ErrorKind::normalization: return "normalization";
    case ErrorKind::classification: return "classification";
    case ErrorKind::size: return "size";
    case ErrorKind::shape: return "shape";
    case ErrorKind::profile: return "profile";
    case ErrorKind::step_limit: return "step_limit";
    case ErrorKind::parse: return "parse";
    case ErrorKind::usage: return "usage";
  }
  return "unknown";
}

namespace {

[[noreturn]] void bad_number(std::string_view text) {
  throw Error(ErrorKind::parse, "not a rational number: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

Rational parse_decimal(std::string_view text, std::string_view body) {
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_text = body.substr(e + 1);
    body = body.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad_number(text);
    exponent = std::strtol(std::string(exp_text).c_str(), nullptr, 10);
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = body;
  std::string_view frac_part;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    int_part = body.substr(0, dot);
    frac_part = body.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad_number(text);
  if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class numerator(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  Rational result;
  if (exponent >= 0) {
    result = Rational(numerator * pow10(static_cast<unsigned long>(exponent)));
  } else {
    result = Rational(numerator, pow10(static_cast<unsigned long>(-exponent)));
    result.canonicalize();
  }
  return negative ? Rational(-result) : result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  if (body.empty()) bad_number(text);

  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text, body.substr(0, slash));
    Rational den = parse_decimal(text, body.substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::parse, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text, body);
}

std::string to_string(const Rational& value) {
  return value.get_str(10);
}

double to_double(const Rational& value) {
  return value.get_d();
}

Rational abs(const Rational& value) {
  return value < 0 ? Rational(-value) : value;
}

Rational ratio(long num, long den) {
  if (den == 0) throw Error(ErrorKind::domain, "zero denominator");
  Rational r{mpz_class(num), mpz_class(den)};
  r.canonicalize();
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(r);
}

}  // namespace subdiv
