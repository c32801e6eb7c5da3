#include "subdiv/refine.hpp"

#include <cstdlib>
#include <string>

#include "subdiv/analysis.hpp"

namespace subdiv {

std::string to_string(Topology topology) {
  return topology == Topology::closed ? "closed" : "open";
}

std::string to_string(Boundary boundary) {
  return boundary == Boundary::replicate ? "replicate" : "truncate";
}

Boundary parse_boundary(const std::string& name) {
  if (name == "replicate") return Boundary::replicate;
  if (name == "truncate") return Boundary::truncate;
  throw Error(ErrorKind::usage, "unknown boundary '" + name + "' (expected replicate or truncate)");
}

SparseRule<Rational> sparse_rule(const Stencil<Rational>& rule) {
  SparseRule<Rational> out;
  bool first = true;
  for (int d = rule.first(); d <= rule.last(); ++d) {
    Rational w = rule.at(d);
    if (w == 0) continue;
    if (first) out.min_offset = d;
    out.max_offset = d;
    first = false;
    out.taps.emplace_back(d, std::move(w));
  }
  return out;
}

RefinementRules<Rational> rules_from_symbol(const LaurentSymbol& a) {
  // a_{2g} -> vertex offset -g, a_{2g+1} -> edge offset -g
  Stencil<Rational> vertex, edge;
  for (int j = a.lowest(); j <= a.highest(); ++j) {
    if (j % 2 == 0) {
      vertex[-j / 2] = a.coefficient(j);
    } else {
      edge[-(j - 1) / 2] = a.coefficient(j);
    }
  }
  if (vertex.sum() != 1 || edge.sum() != 1) {
    throw Error(ErrorKind::normalization, "vertex and edge rules must each sum to 1 (got " + to_string(vertex.sum()) +
                                              " and " + to_string(edge.sum()) + ")");
  }
  return {sparse_rule(vertex), sparse_rule(edge)};
}

int max_refinement_steps() {
  if (const char* env = std::getenv("SUBDIV_MAX_STEPS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 0 && v <= 64) return static_cast<int>(v);
  }
  return 12;
}

void check_steps(int steps) {
  if (steps < 0) throw Error(ErrorKind::domain, "steps must be non-negative");
  const int cap = max_refinement_steps();
  if (steps > cap) {
    throw Error(ErrorKind::step_limit,
                "steps = " + std::to_string(steps) + " exceeds the cap of " + std::to_string(cap) +
                    " (set SUBDIV_MAX_STEPS to raise it)");
  }
}

Rational BasisSamples::abscissa(std::size_t k) const {
  return Rational(first_index + static_cast<long>(k)) / Rational(mpz_class(1) << steps);
}

BasisSamples basic_limit_function(const LaurentSymbol& symbol, int steps) {
  if (steps < 1) throw Error(ErrorKind::domain, "basic limit function needs steps >= 1");
  check_steps(steps);
  // f^{k+1}(z) = a(z) f^k(z^2), starting from the delta f^0(z) = 1
  LaurentSymbol f = LaurentSymbol::monomial(0, Rational(1));
  for (int k = 0; k < steps; ++k) f = symbol * f.upsampled(2);
  return {steps, f.lowest(), f.coefficients()};
}

bool vanishes_outside(const BasisSamples& samples, const Rational& half_width) {
  for (std::size_t k = 0; k < samples.values.size(); ++k) {
    if (samples.values[k] == 0) continue;
    const Rational x = samples.abscissa(k);
    if (x < -half_width || x > half_width) return false;
  }
  return true;
}

BasisSamples basic_limit_function(const ParametricMask& mask, const Rational& alpha, const Rational& beta,
                                  int steps) {
  BasisSamples samples = basic_limit_function(specialize(mask, alpha, beta), steps);
  const Rational half = ratio(support_width(mask), 2);
  if (!vanishes_outside(samples, half)) {
    throw Error(ErrorKind::domain, "basic limit function does not vanish outside [-" + to_string(half) + ", " +
                                       to_string(half) + "]");
  }
  return samples;
}

}  // namespace subdiv
