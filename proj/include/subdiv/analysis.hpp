#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "subdiv/laurent.hpp"
#include "subdiv/mask.hpp"

namespace subdiv {

enum class Orientation { primal, dual, neither };

std::string to_string(Orientation orientation);

/// primal: a(z) = a(1/z); dual: z a(z) = a(1/z).
Orientation classify_primal_dual(const LaurentSymbol& a);

/// Largest d <= min(max_d, span of a) with a(-1) = 0 and a^(m)(-1) = 0 for
/// m = 1..d; -1 when a(-1) != 0. Throws Error(normalization) unless a(1) = 2.
int generation_degree(const LaurentSymbol& a, int max_d);

struct DegreeReport {
  int generation_degree = -1;
  int reproduction_degree = -1;
  /// Parametric shift: t_i = (i + tau) / 2^k.
  Rational tau;
};

/// Generation plus reproduction with respect to the parametrization shift
/// tau = a'(1)/2, i.e. a^(m)(1) = 2 prod_{h<m} (tau - h) for m = 1..d.
DegreeReport reproduction_degree(const LaurentSymbol& a, int max_d);

/// Support width of the basic limit function: 2*xi for a xi-point relaxed
/// scheme, 2*xi - 2 for a xi-point interpolatory one.
int support_width(Family family, int n);
int support_width(const ParametricMask& mask);

/// ||c^l||_inf where c^l(z) = c(z) c(z^2) ... c(z^(2^(l-1))): the largest
/// absolute coefficient sum over the residue classes mod 2^l.
Rational contractivity_norm(const LaurentSymbol& c, int l);

struct ContinuityCertificate {
  /// -1: not even convergence certified.
  int certified_order = -1;
  int smoothing_factors_extracted = 0;
  std::optional<int> contraction_level;
  std::optional<Rational> norm_value;
  /// Set when the deadline expired before the search finished; the
  /// certificate then holds whatever was established so far.
  bool timed_out = false;
};

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

/// One-sided C^n certificate. Tries n from the number of extractable
/// smoothing factors (capped at max_n) downward; for each n tests whether the
/// difference scheme of b(z) = a(z) (2z)^n / (1+z)^n contracts within max_l
/// iterations. Failure proves nothing.
ContinuityCertificate continuity_lower_bound(const LaurentSymbol& a, int max_n = 6, int max_l = 8,
                                             Deadline deadline = std::nullopt);

/// The closed-form contractivity inequalities for the (2N+3)-point schemes
/// with N = 0, 1, 2 (C^1, C^3, C^5 respectively).
enum class SpecialScheme { S_a3, S_a5, S_a7 };

struct SpecialCheck {
  bool holds = false;
  Rational max_value;
  int claimed_order = 0;
};

std::string to_string(SpecialScheme scheme);
/// Scheme for an extended (or interpolatory) mask with N in 0..2.
std::optional<SpecialScheme> special_scheme_for(Family family, int n);
SpecialCheck special_continuity_check(SpecialScheme scheme, const Rational& alpha, const Rational& beta);

}  // namespace subdiv
