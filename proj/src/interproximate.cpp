#include "subdiv/interproximate.hpp"

#include <string>

#include "subdiv/error.hpp"

namespace subdiv {

std::size_t edge_count(std::size_t vertex_count, Topology topology) {
  if (topology == Topology::closed) return vertex_count;
  return vertex_count == 0 ? 0 : vertex_count - 1;
}

TensionProfile TensionProfile::from_vertex_pairs(const std::vector<TensionPair>& pairs, Topology topology,
                                                 TensionPair default_params) {
  TensionProfile p;
  p.default_params = std::move(default_params);
  const std::size_t edges = edge_count(pairs.size(), topology);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    p.vertex_alpha.push_back(pairs[i].alpha);
    p.interpolate.push_back(pairs[i].alpha == 0);
    if (i < edges) p.edge_params.push_back(pairs[i]);
  }
  return p;
}

TensionProfile TensionProfile::uniform(std::size_t vertex_count, Topology topology, TensionPair params,
                                       bool flag_all) {
  TensionProfile p;
  p.vertex_alpha.assign(vertex_count, params.alpha);
  p.edge_params.assign(edge_count(vertex_count, topology), params);
  p.interpolate.assign(vertex_count, flag_all && params.alpha == 0);
  p.default_params = std::move(params);
  return p;
}

void validate_profile(const TensionProfile& profile, std::size_t vertex_count, Topology topology) {
  const std::size_t edges = edge_count(vertex_count, topology);
  if (profile.vertex_alpha.size() != vertex_count || profile.interpolate.size() != vertex_count) {
    throw Error(ErrorKind::shape, "profile has " + std::to_string(profile.vertex_alpha.size()) +
                                      " vertex parameters and " + std::to_string(profile.interpolate.size()) +
                                      " flags for " + std::to_string(vertex_count) + " vertices");
  }
  if (profile.edge_params.size() != edges) {
    throw Error(ErrorKind::shape, "profile has " + std::to_string(profile.edge_params.size()) +
                                      " edge parameters, polygon has " + std::to_string(edges) + " edges");
  }
  for (std::size_t i = 0; i < vertex_count; ++i) {
    if (profile.interpolate[i] && profile.vertex_alpha[i] != 0) {
      throw Error(ErrorKind::profile, "vertex " + std::to_string(i) + " is flagged for interpolation but alpha = " +
                                          to_string(profile.vertex_alpha[i]));
    }
  }
}

TensionProfile propagate_profile(const TensionProfile& profile, Topology topology) {
  const std::size_t n = profile.vertex_alpha.size();
  const std::size_t fine = topology == Topology::closed ? 2 * n : 2 * n - 1;
  TensionProfile next;
  next.default_params = profile.default_params;
  next.vertex_alpha.assign(fine, profile.default_params.alpha);
  next.interpolate.assign(fine, false);
  next.edge_params.assign(edge_count(fine, topology), profile.default_params);
  for (std::size_t i = 0; i < n; ++i) {
    if (!profile.interpolate[i]) continue;
    next.vertex_alpha[2 * i] = Rational(0);
    next.interpolate[2 * i] = true;
  }
  return next;
}

LocalRuleCache::LocalRuleCache(int n) : mask_(build_extended_mask(n)), width_(n + 2) {}

const SparseRule<Rational>& LocalRuleCache::vertex_rule(const Rational& alpha) {
  auto it = vertex_.find(alpha);
  if (it != vertex_.end()) return it->second;
  Stencil<Rational> rule;
  const Rule& poly = mask_.vertex_rule();
  for (int d = poly.first(); d <= poly.last(); ++d) rule[d] = poly.at(d).evaluate(alpha, Rational(0));
  return vertex_.emplace(alpha, sparse_rule(rule)).first->second;
}

const SparseRule<Rational>& LocalRuleCache::edge_rule(const TensionPair& params) {
  auto key = std::make_pair(params.alpha, params.beta);
  auto it = edge_.find(key);
  if (it != edge_.end()) return it->second;
  Stencil<Rational> rule;
  const Rule& poly = mask_.edge_rule();
  for (int d = poly.first(); d <= poly.last(); ++d) rule[d] = poly.at(d).evaluate(params.alpha, params.beta);
  return edge_.emplace(key, sparse_rule(rule)).first->second;
}

}  // namespace subdiv
