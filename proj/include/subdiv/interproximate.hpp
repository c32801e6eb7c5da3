#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "subdiv/mask.hpp"
#include "subdiv/rational.hpp"
#include "subdiv/refine.hpp"

namespace subdiv {

struct TensionPair {
  Rational alpha;
  Rational beta;

  friend bool operator==(const TensionPair&, const TensionPair&) = default;
};

/// Local tension values for the (2N+3)-point family.
///
/// Vertex i's rule uses vertex_alpha[i]. Edge e joins vertices e and e+1
/// (wrapping for closed polygons) and its rule uses edge_params[e].
/// Points created by refinement take default_params, except the images of
/// interpolated vertices, which keep alpha = 0 and their flag.
struct TensionProfile {
  std::vector<Rational> vertex_alpha;
  std::vector<TensionPair> edge_params;
  std::vector<bool> interpolate;
  TensionPair default_params;

  /// Per-vertex pairs (alpha_i, beta_i): vertex i uses alpha_i, the edge
  /// starting at vertex i uses the pair, and alpha_i = 0 marks vertex i as
  /// interpolated.
  static TensionProfile from_vertex_pairs(const std::vector<TensionPair>& pairs, Topology topology,
                                          TensionPair default_params);
  /// Same (alpha, beta) everywhere; every vertex flagged when alpha = 0 and
  /// `flag_all` is set.
  static TensionProfile uniform(std::size_t vertex_count, Topology topology, TensionPair params, bool flag_all);
};

std::size_t edge_count(std::size_t vertex_count, Topology topology);

/// Throws Error(shape) on length mismatch, Error(profile) for a flagged
/// vertex with nonzero alpha.
void validate_profile(const TensionProfile& profile, std::size_t vertex_count, Topology topology);

/// Profile for the next level (vertex count 2n closed, 2n - 1 open).
TensionProfile propagate_profile(const TensionProfile& profile, Topology topology);

template <class T>
struct InterproximateResult {
  ControlPolygon<T> polygon;
  /// Flagged vertex indices at levels 0..steps.
  std::vector<std::vector<std::size_t>> flagged_per_level;
};

/// Specialized vertex/edge rules of the (2N+3)-point family, cached per
/// parameter value.
class LocalRuleCache {
 public:
  explicit LocalRuleCache(int n);

  const SparseRule<Rational>& vertex_rule(const Rational& alpha);
  const SparseRule<Rational>& edge_rule(const TensionPair& params);
  int one_sided_width() const { return width_; }

 private:
  ParametricMask mask_;
  int width_;
  std::map<Rational, SparseRule<Rational>> vertex_;
  std::map<std::pair<Rational, Rational>, SparseRule<Rational>> edge_;
};

namespace detail {

template <class T>
struct TypedRuleCache {
  LocalRuleCache& exact;
  std::map<const SparseRule<Rational>*, SparseRule<T>> converted;

  const SparseRule<T>& get(const SparseRule<Rational>& rule) {
    auto it = converted.find(&rule);
    if (it == converted.end()) it = converted.emplace(&rule, convert_rule<T>(rule)).first;
    return it->second;
  }
};

}  // namespace detail

/// Interproximate refinement with the (2N+3)-point family: flagged vertices
/// are held fixed at every level while the rest are approximated.
/// Open polygons use the replicated boundary.
template <class T>
InterproximateResult<T> refine_interproximate(const ControlPolygon<T>& polygon, const TensionProfile& profile,
                                              int n, int steps) {
  check_steps(steps);
  validate_profile(profile, polygon.points.size(), polygon.topology);

  LocalRuleCache cache(n);
  detail::TypedRuleCache<T> typed{cache, {}};

  InterproximateResult<T> result;
  result.polygon = polygon;
  TensionProfile current = profile;

  auto flagged = [](const TensionProfile& p) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < p.interpolate.size(); ++i) {
      if (p.interpolate[i]) idx.push_back(i);
    }
    return idx;
  };
  result.flagged_per_level.push_back(flagged(current));

  for (int s = 0; s < steps; ++s) {
    // resolve rules up front; the cache's map nodes keep references stable
    std::vector<const SparseRule<T>*> vertex_rules, edge_rules;
    for (const auto& a : current.vertex_alpha) vertex_rules.push_back(&typed.get(cache.vertex_rule(a)));
    for (const auto& e : current.edge_params) edge_rules.push_back(&typed.get(cache.edge_rule(e)));

    auto refined = refine_step_with<T>(
        result.polygon.points, result.polygon.topology, Boundary::replicate, cache.one_sided_width(),
        [&](std::size_t i) -> const SparseRule<T>& { return *vertex_rules[i]; },
        [&](std::size_t i) -> const SparseRule<T>& { return *edge_rules[i]; });
    result.polygon.points = std::move(refined.points);
    current = propagate_profile(current, result.polygon.topology);
    result.flagged_per_level.push_back(flagged(current));
  }
  return result;
}

}  // namespace subdiv
