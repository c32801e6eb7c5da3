#pragma once

#include <string>
#include <utility>
#include <vector>

#include "subdiv/bivar_poly.hpp"
#include "subdiv/stencil.hpp"

namespace subdiv {

class LaurentSymbol;

enum class Family {
  relaxed_2N2,        // (2N+2)-point relaxed, one tension parameter alpha
  relaxed_2N3,        // (2N+3)-point relaxed, alpha and beta
  interpolatory_2N4,  // (2N+4)-point interpolatory, beta only
};

/// "relaxed", "extended", "interpolatory".
std::string family_name(Family family);
Family parse_family(const std::string& name);

/// A refinement rule over coarse points:
///   f^{k+1}_{2i+l} = sum_d rule[d] * f^k_{i+d}.
using Rule = Stencil<BivarPoly>;

enum class Parity { even, odd };

/// Displacement vector C_{2i+l, level} as a linear functional over the
/// initial points f^0_{i+d}.
struct CoefficientSequence {
  Rule entries;
  Parity parity = Parity::even;
  int level = 1;
};

/// Symmetric mask over offsets [-half_width(), half_width()].
///
/// Offset convention: the refined point f^{k+1}_j = sum_i a_{j-2i} f^k_i, so
/// mask entry a_{2g} belongs to the vertex rule at coarse offset -g and
/// a_{2g+1} to the edge rule at coarse offset -g.
class ParametricMask {
 public:
  ParametricMask(Family family, int n, Rule vertex_rule, Rule edge_rule);

  Family family() const { return family_; }
  int n() const { return n_; }
  int half_width() const { return half_width_; }
  const Rule& vertex_rule() const { return vertex_rule_; }
  const Rule& edge_rule() const { return edge_rule_; }

  /// Mask entry a_j; zero outside the stored range.
  BivarPoly entry(int offset) const;
  /// a_{-m}, ..., a_m.
  std::vector<BivarPoly> entries() const;

 private:
  Family family_;
  int n_;
  int half_width_;
  Rule vertex_rule_;
  Rule edge_rule_;
};

struct RulePair {
  Rule even;
  Rule odd;
};

struct DisplacementPair {
  CoefficientSequence even;
  CoefficientSequence odd;
};

/// N = 0 vertex and edge rules: even {-1: a, 0: 1-2a, 1: a}, odd {0: 1/2, 1: 1/2}.
RulePair initial_rules();

/// C_{2i,1} = {-1: 1, 0: -1, 1: 1}, C_{2i+1,1} = {0: 1/2, 1: 1/2}.
DisplacementPair initial_displacement_vectors();

/// Level n+1 displacement vectors (n >= 1), built from the level-1 seeds.
DisplacementPair displacement_vectors(int n);

ParametricMask build_relaxed_mask(int n);

/// Odd-rule additive stencil turning the (2N+2)-point rule into the
/// (2N+3)-point one. Every entry is a multiple of beta*(1-alpha).
CoefficientSequence extension_weights(int n);

ParametricMask build_extended_mask(int n);
ParametricMask build_interpolatory_mask(int n);
ParametricMask build_mask(Family family, int n);

/// Concrete mask entries a_{-m..m} at (alpha, beta). Throws Error(parameter)
/// for a nonzero parameter the family does not carry.
std::vector<Rational> specialize_entries(const ParametricMask& mask, const Rational& alpha, const Rational& beta);

LaurentSymbol specialize(const ParametricMask& mask, const Rational& alpha, const Rational& beta);

}  // namespace subdiv
