#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subdiv/analysis.hpp"
#include "subdiv/bivar_poly.hpp"
#include "subdiv/mask.hpp"

namespace subdiv {

struct MaskRequest {
  Family family = Family::relaxed_2N2;
  int n = 0;
  /// When either parameter is given the mask is specialized; the other one
  /// then defaults to zero.
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
};

struct MaskReport {
  ParametricMask mask;
  /// Common denominator D such that D * a_j has integer coefficients.
  Rational denominator;
  std::optional<std::vector<Rational>> concrete;
};

MaskReport describe_mask(const MaskRequest& request);

/// "(1/2)[2α, 1, 2−4α, 1, 2α]", or "[0, −1/16, ...]" plus a decimal line for
/// a concrete mask.
std::string mask_text(const MaskReport& report, const SymbolNames& names = SymbolNames::unicode());
nlohmann::json to_json(const MaskReport& report);

struct AnalyzeRequest {
  Family family = Family::relaxed_2N2;
  int n = 0;
  Rational alpha;
  Rational beta;
  int max_l = 8;
  int max_n = 6;
  Deadline deadline;
};

struct AnalysisReport {
  AnalyzeRequest request;
  LaurentSymbol symbol;
  Orientation orientation = Orientation::neither;
  DegreeReport degrees;
  int support = 0;
  ContinuityCertificate certificate;
  std::optional<SpecialScheme> special_scheme;
  std::optional<SpecialCheck> special_check;

  bool timed_out() const { return certificate.timed_out; }
};

/// Shared by the CLI and the service so both report identical results.
AnalysisReport analyze(const AnalyzeRequest& request);

std::string analysis_text(const AnalysisReport& report, const SymbolNames& names = SymbolNames::unicode());
nlohmann::json to_json(const AnalysisReport& report);

/// Fraction with the chosen minus sign, e.g. "−1/16".
std::string pretty(const Rational& value, const SymbolNames& names = SymbolNames::unicode());

}  // namespace subdiv
