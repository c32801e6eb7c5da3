#include "subdiv/report.hpp"

#include <cstdio>
#include <sstream>

#include "subdiv/error.hpp"

namespace subdiv {

namespace {

// Largest degree any supported mask can reach is bounded by its span.
int degree_cap(const LaurentSymbol& a) { return a.span() + 1; }

std::string decimal(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double(value));
  return buf;
}

std::string join(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out += ", ";
    out += items[k];
  }
  return out + "]";
}

}  // namespace

std::string pretty(const Rational& value, const SymbolNames& names) {
  std::string s = to_string(value);
  if (!s.empty() && s[0] == '-') s = names.minus + s.substr(1);
  return s;
}

MaskReport describe_mask(const MaskRequest& request) {
  if (request.n < 0) throw Error(ErrorKind::usage, "N must be non-negative");
  MaskReport report{build_mask(request.family, request.n), Rational(1), std::nullopt};
  mpz_class lcm(1);
  for (const auto& e : report.mask.entries()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.denominator_lcm().get_mpz_t());
  report.denominator = Rational(lcm);
  if (request.alpha || request.beta) {
    report.concrete = specialize_entries(report.mask, request.alpha.value_or(Rational(0)),
                                         request.beta.value_or(Rational(0)));
  }
  return report;
}

std::string mask_text(const MaskReport& report, const SymbolNames& names) {
  std::vector<std::string> items;
  if (report.concrete) {
    for (const auto& v : *report.concrete) items.push_back(pretty(v, names));
    std::vector<std::string> decimals;
    for (const auto& v : *report.concrete) decimals.push_back(decimal(v));
    return "mask: " + join(items) + "\ndecimal: " + join(decimals) + "\n";
  }
  for (const auto& e : report.mask.entries()) items.push_back(to_string(e * report.denominator, names));
  const std::string scale = report.denominator == 1 ? "" : "(1/" + to_string(report.denominator) + ")";
  return "mask: " + scale + join(items) + "\n";
}

nlohmann::json to_json(const MaskReport& report) {
  nlohmann::json j;
  j["family"] = family_name(report.mask.family());
  j["n"] = report.mask.n();
  j["half_width"] = report.mask.half_width();
  j["denominator"] = to_string(report.denominator);
  auto& sym = j["symbolic"] = nlohmann::json::array();
  auto& ascii = j["symbolic_ascii"] = nlohmann::json::array();
  for (const auto& e : report.mask.entries()) {
    sym.push_back(to_string(e));
    ascii.push_back(to_string(e, SymbolNames::ascii()));
  }
  j["text"] = mask_text(report);
  if (report.concrete) {
    auto& exact = j["entries"] = nlohmann::json::array();
    auto& dec = j["decimal"] = nlohmann::json::array();
    for (const auto& v : *report.concrete) {
      exact.push_back(to_string(v));
      dec.push_back(to_double(v));
    }
  }
  return j;
}

AnalysisReport analyze(const AnalyzeRequest& request) {
  if (request.n < 0) throw Error(ErrorKind::usage, "N must be non-negative");
  if (request.max_l < 1) throw Error(ErrorKind::usage, "max-l must be at least 1");
  if (request.max_n < 0) throw Error(ErrorKind::usage, "max-n must be non-negative");
  AnalysisReport r;
  r.request = request;
  const ParametricMask mask = build_mask(request.family, request.n);
  r.symbol = specialize(mask, request.alpha, request.beta);
  r.orientation = classify_primal_dual(r.symbol);
  r.degrees = reproduction_degree(r.symbol, degree_cap(r.symbol));
  r.support = support_width(mask);
  r.certificate = continuity_lower_bound(r.symbol, request.max_n, request.max_l, request.deadline);
  r.special_scheme = special_scheme_for(request.family, request.n);
  if (r.special_scheme) r.special_check = special_continuity_check(*r.special_scheme, request.alpha, request.beta);
  return r;
}

std::string analysis_text(const AnalysisReport& r, const SymbolNames& names) {
  std::ostringstream out;
  out << "family: " << family_name(r.request.family) << ", N = " << r.request.n << ", alpha = "
      << pretty(r.request.alpha, names) << ", beta = " << pretty(r.request.beta, names) << "\n";
  out << "orientation: " << to_string(r.orientation) << "\n";
  out << "generation degree: " << r.degrees.generation_degree << "\n";
  out << "reproduction degree: " << r.degrees.reproduction_degree << "\n";
  out << "tau: " << pretty(r.degrees.tau, names) << "\n";
  out << "support width: " << r.support << "\n";
  const auto& c = r.certificate;
  if (c.certified_order >= 0) {
    out << "certified: C^" << c.certified_order << " (smoothing factors " << c.smoothing_factors_extracted
        << ", level " << *c.contraction_level << ", norm " << pretty(*c.norm_value, names) << ")\n";
  } else {
    out << "certified: none within max-l = " << r.request.max_l << "\n";
  }
  if (c.timed_out) out << "certificate search timed out; the result above is partial\n";
  if (r.special_check) {
    out << "closed-form check " << to_string(*r.special_scheme) << ": "
        << (r.special_check->holds ? "holds" : "fails") << " (max " << pretty(r.special_check->max_value, names)
        << ", C^" << r.special_check->claimed_order << " when it holds)\n";
  }
  return out.str();
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json j;
  j["family"] = family_name(r.request.family);
  j["n"] = r.request.n;
  j["alpha"] = to_string(r.request.alpha);
  j["beta"] = to_string(r.request.beta);
  j["symbol"] = {{"lowest", r.symbol.lowest()}, {"coefficients", nlohmann::json::array()}};
  for (const auto& c : r.symbol.coefficients()) j["symbol"]["coefficients"].push_back(to_string(c));
  j["orientation"] = to_string(r.orientation);
  j["generation_degree"] = r.degrees.generation_degree;
  j["reproduction_degree"] = r.degrees.reproduction_degree;
  j["tau"] = to_string(r.degrees.tau);
  j["support_width"] = r.support;
  const auto& c = r.certificate;
  nlohmann::json cert;
  cert["order"] = c.certified_order;
  cert["smoothing_factors"] = c.smoothing_factors_extracted;
  cert["level"] = c.contraction_level ? nlohmann::json(*c.contraction_level) : nlohmann::json(nullptr);
  cert["norm"] = c.norm_value ? nlohmann::json(to_string(*c.norm_value)) : nlohmann::json(nullptr);
  cert["max_l"] = r.request.max_l;
  cert["max_n"] = r.request.max_n;
  cert["timed_out"] = c.timed_out;
  j["certificate"] = cert;
  if (r.special_check) {
    j["closed_form"] = {{"scheme", to_string(*r.special_scheme)},
                        {"holds", r.special_check->holds},
                        {"max_value", to_string(r.special_check->max_value)},
                        {"claimed_order", r.special_check->claimed_order}};
  } else {
    j["closed_form"] = nullptr;
  }
  return j;
}

}  // namespace subdiv
