#include "subdiv/mask.hpp"

#include "subdiv/error.hpp"
#include "subdiv/laurent.hpp"

namespace subdiv {

std::string family_name(Family family) {
  switch (family) {
    case Family::relaxed_2N2: return "relaxed";
    case Family::relaxed_2N3: return "extended";
    case Family::interpolatory_2N4: return "interpolatory";
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  if (name == "relaxed" || name == "relaxed_2N2") return Family::relaxed_2N2;
  if (name == "extended" || name == "relaxed_2N3") return Family::relaxed_2N3;
  if (name == "interpolatory" || name == "interpolatory_2N4") return Family::interpolatory_2N4;
  throw Error(ErrorKind::classification,
              "unknown family '" + name + "' (expected relaxed, extended or interpolatory)");
}

namespace {

int family_half_width(Family family, int n) {
  return family == Family::relaxed_2N2 ? 2 * n + 2 : 2 * n + 3;
}

// 2 c(d) - c(d-1) - c(d+1): the symmetric second difference of the
// neighbouring displacement vectors.
Rule second_difference(const Rule& c) {
  Rule out;
  for (int d = c.first() - 1; d <= c.last() + 1; ++d) {
    out[d] = c.at(d) * Rational(2) - c.at(d - 1) - c.at(d + 1);
  }
  return out.trimmed();
}

Rule substitute_alpha(const Rule& rule, const Rational& alpha) {
  Rule out;
  for (int d = rule.first(); d <= rule.last(); ++d) out[d] = rule.at(d).substitute_alpha(alpha);
  return out;
}

// Level t -> t+1 (t >= 1).
void advance(DisplacementPair& c, int t) {
  const Rational odd_factor = ratio(1, t) * (ratio(t, 4) - ratio(1, 8));
  c.even.entries = second_difference(c.even.entries);
  c.odd.entries = second_difference(c.odd.entries).scale(odd_factor);
  c.even.level = c.odd.level = t + 1;
}

}  // namespace

ParametricMask::ParametricMask(Family family, int n, Rule vertex_rule, Rule edge_rule)
    : family_(family),
      n_(n),
      half_width_(family_half_width(family, n)),
      vertex_rule_(std::move(vertex_rule)),
      edge_rule_(std::move(edge_rule)) {}

BivarPoly ParametricMask::entry(int offset) const {
  if (offset % 2 == 0) return vertex_rule_.at(-offset / 2);
  return edge_rule_.at(-(offset - 1) / 2);
}

std::vector<BivarPoly> ParametricMask::entries() const {
  std::vector<BivarPoly> out;
  out.reserve(static_cast<std::size_t>(2 * half_width_ + 1));
  for (int j = -half_width_; j <= half_width_; ++j) out.push_back(entry(j));
  return out;
}

RulePair initial_rules() {
  const BivarPoly a = BivarPoly::alpha();
  RulePair r;
  r.even = Rule(-1, {a, BivarPoly(1) - a * Rational(2), a});
  r.odd = Rule(0, {BivarPoly(ratio(1, 2)), BivarPoly(ratio(1, 2))});
  return r;
}

DisplacementPair initial_displacement_vectors() {
  DisplacementPair c;
  c.even = {Rule(-1, {BivarPoly(1), BivarPoly(-1), BivarPoly(1)}), Parity::even, 1};
  c.odd = {Rule(0, {BivarPoly(ratio(1, 2)), BivarPoly(ratio(1, 2))}), Parity::odd, 1};
  return c;
}

DisplacementPair displacement_vectors(int n) {
  if (n < 1) {
    throw Error(ErrorKind::domain, "displacement recurrence needs N >= 1 (the odd factor divides by N)");
  }
  DisplacementPair c = initial_displacement_vectors();
  for (int t = 1; t <= n; ++t) advance(c, t);
  return c;
}

ParametricMask build_relaxed_mask(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "N must be non-negative");
  RulePair rules = initial_rules();
  DisplacementPair c = initial_displacement_vectors();
  const BivarPoly a = BivarPoly::alpha();
  for (int t = 1; t <= n; ++t) {
    advance(c, t);
    // vertex points move by alpha * C_even, edge points by 1 * C_odd
    Rule even_step;
    for (int d = c.even.entries.first(); d <= c.even.entries.last(); ++d) even_step[d] = a * c.even.entries.at(d);
    rules.even += even_step;
    rules.odd += c.odd.entries;
  }
  return ParametricMask(Family::relaxed_2N2, n, rules.even.trimmed(), rules.odd.trimmed());
}

CoefficientSequence extension_weights(int n) {
  if (n < 0) throw Error(ErrorKind::domain, "N must be non-negative");
  const BivarPoly w = BivarPoly::beta() - BivarPoly::alpha() * BivarPoly::beta();  // beta (1 - alpha)
  Rule out;
  out[-(n + 1)] = w;
  for (int j = -(n + 1); j <= n; ++j) {
    Rational c = ratio(2 * j + 1, n - j + 1) * binomial(2 * n + 2, n + j + 2);
    if ((j + n + 1) % 2 != 0) c = -c;
    out[j + 1] += w * c;
  }
  out[n + 2] = w;
  return {out, Parity::odd, n + 1};
}

ParametricMask build_extended_mask(int n) {
  ParametricMask relaxed = build_relaxed_mask(n);
  Rule odd = relaxed.edge_rule();
  odd += extension_weights(n).entries;
  return ParametricMask(Family::relaxed_2N3, n, relaxed.vertex_rule(), odd.trimmed());
}

ParametricMask build_interpolatory_mask(int n) {
  ParametricMask extended = build_extended_mask(n);
  const Rational zero(0);
  return ParametricMask(Family::interpolatory_2N4, n, substitute_alpha(extended.vertex_rule(), zero).trimmed(),
                        substitute_alpha(extended.edge_rule(), zero).trimmed());
}

ParametricMask build_mask(Family family, int n) {
  switch (family) {
    case Family::relaxed_2N2: return build_relaxed_mask(n);
    case Family::relaxed_2N3: return build_extended_mask(n);
    case Family::interpolatory_2N4: return build_interpolatory_mask(n);
  }
  throw Error(ErrorKind::classification, "unknown family");
}

std::vector<Rational> specialize_entries(const ParametricMask& mask, const Rational& alpha, const Rational& beta) {
  if (mask.family() == Family::relaxed_2N2 && beta != 0) {
    throw Error(ErrorKind::parameter, "the relaxed (2N+2)-point family has no beta parameter");
  }
  if (mask.family() == Family::interpolatory_2N4 && alpha != 0) {
    throw Error(ErrorKind::parameter, "the interpolatory (2N+4)-point family has no alpha parameter");
  }
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(2 * mask.half_width() + 1));
  for (const auto& e : mask.entries()) out.push_back(e.evaluate(alpha, beta));
  return out;
}

LaurentSymbol specialize(const ParametricMask& mask, const Rational& alpha, const Rational& beta) {
  return LaurentSymbol(-mask.half_width(), specialize_entries(mask, alpha, beta));
}

}  // namespace subdiv
