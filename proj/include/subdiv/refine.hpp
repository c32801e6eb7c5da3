#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "subdiv/error.hpp"
#include "subdiv/laurent.hpp"
#include "subdiv/mask.hpp"
#include "subdiv/rational.hpp"

namespace subdiv {

enum class Topology { closed, open };

/// How open polylines get neighbours past their ends.
enum class Boundary {
  replicate,  // clamp indices to the endpoints
  truncate,   // keep only points whose full stencil lies inside
};

std::string to_string(Topology topology);
std::string to_string(Boundary boundary);
Boundary parse_boundary(const std::string& name);

/// Up to three coordinates; unused trailing coordinates stay zero.
template <class T>
using Point = std::array<T, 3>;

template <class T>
struct ControlPolygon {
  int dim = 2;
  std::vector<Point<T>> points;
  Topology topology = Topology::closed;
};

/// Row-major grid. row_topology applies along each row (across columns),
/// col_topology along each column.
template <class T>
struct ControlMesh {
  int dim = 3;
  int rows = 0;
  int cols = 0;
  std::vector<Point<T>> grid;
  Topology row_topology = Topology::open;
  Topology col_topology = Topology::open;

  Point<T>& at(int r, int c) { return grid[static_cast<std::size_t>(r * cols + c)]; }
  const Point<T>& at(int r, int c) const { return grid[static_cast<std::size_t>(r * cols + c)]; }
};

/// Nonzero taps (coarse offset, weight) of one refinement rule.
template <class T>
struct SparseRule {
  std::vector<std::pair<int, T>> taps;
  int min_offset = 0;
  int max_offset = 0;
};

template <class T>
struct RefinementRules {
  SparseRule<T> vertex;  // f^{k+1}_{2i}
  SparseRule<T> edge;    // f^{k+1}_{2i+1}
};

SparseRule<Rational> sparse_rule(const Stencil<Rational>& rule);

/// Splits a(z) into vertex and edge rules. Throws Error(normalization) unless
/// both rules sum to exactly 1.
RefinementRules<Rational> rules_from_symbol(const LaurentSymbol& a);

template <class T>
SparseRule<T> convert_rule(const SparseRule<Rational>& rule) {
  SparseRule<T> out{{}, rule.min_offset, rule.max_offset};
  out.taps.reserve(rule.taps.size());
  for (const auto& [d, w] : rule.taps) {
    if constexpr (std::is_same_v<T, Rational>) {
      out.taps.emplace_back(d, w);
    } else {
      out.taps.emplace_back(d, static_cast<T>(to_double(w)));
    }
  }
  return out;
}

template <class T>
RefinementRules<T> convert_rules(const RefinementRules<Rational>& rules) {
  return {convert_rule<T>(rules.vertex), convert_rule<T>(rules.edge)};
}

/// Refinement depth cap: SUBDIV_MAX_STEPS if set, else 12.
int max_refinement_steps();
/// Throws Error(step_limit) / Error(domain) for steps outside [0, cap].
void check_steps(int steps);

template <class T>
struct RefinedSequence {
  std::vector<Point<T>> points;
  /// Fine-level index of points.front() (nonzero only for truncation).
  int first_index = 0;
};

namespace detail {

template <class T>
std::size_t resolve(long index, std::size_t n, Topology topology) {
  const long count = static_cast<long>(n);
  if (topology == Topology::closed) {
    long r = index % count;
    return static_cast<std::size_t>(r < 0 ? r + count : r);
  }
  return static_cast<std::size_t>(std::clamp(index, 0L, count - 1));
}

template <class T>
Point<T> apply_rule(std::span<const Point<T>> coarse, long i, const SparseRule<T>& rule, Topology topology) {
  Point<T> acc{};
  for (const auto& [d, w] : rule.taps) {
    const Point<T>& p = coarse[resolve<T>(i + d, coarse.size(), topology)];
    for (std::size_t c = 0; c < 3; ++c) acc[c] += w * p[c];
  }
  return acc;
}

inline void require_size(std::size_t n, Topology topology, int one_sided_width) {
  if (topology == Topology::closed && n < 3) {
    throw Error(ErrorKind::size, "closed polygons need at least 3 points, got " + std::to_string(n));
  }
  if (topology == Topology::open && n < static_cast<std::size_t>(one_sided_width) + 1) {
    throw Error(ErrorKind::size, "open polygon has " + std::to_string(n) + " points; the rules need at least " +
                                     std::to_string(one_sided_width + 1));
  }
}

}  // namespace detail

/// One refinement step with per-index rules: vertex_rule(i) for the point
/// replacing coarse vertex i, edge_rule(i) for the point on edge (i, i+1).
template <class T, class VertexRuleFn, class EdgeRuleFn>
RefinedSequence<T> refine_step_with(std::span<const Point<T>> coarse, Topology topology, Boundary boundary,
                                    int one_sided_width, VertexRuleFn&& vertex_rule, EdgeRuleFn&& edge_rule) {
  const std::size_t n = coarse.size();
  detail::require_size(n, topology, one_sided_width);

  RefinedSequence<T> out;
  if (topology == Topology::closed) {
    out.points.reserve(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      out.points.push_back(detail::apply_rule<T>(coarse, static_cast<long>(i), vertex_rule(i), topology));
      out.points.push_back(detail::apply_rule<T>(coarse, static_cast<long>(i), edge_rule(i), topology));
    }
    return out;
  }

  const long fine_count = 2 * static_cast<long>(n) - 1;
  auto compute = [&](long j) {
    const long i = j / 2;
    const auto idx = static_cast<std::size_t>(i);
    return j % 2 == 0 ? detail::apply_rule<T>(coarse, i, vertex_rule(idx), topology)
                      : detail::apply_rule<T>(coarse, i, edge_rule(idx), topology);
  };

  if (boundary == Boundary::replicate) {
    out.points.reserve(static_cast<std::size_t>(fine_count));
    for (long j = 0; j < fine_count; ++j) out.points.push_back(compute(j));
    return out;
  }

  // Longest run of fine indices whose stencils lie entirely inside [0, n).
  auto supported = [&](long j) {
    const long i = j / 2;
    const auto idx = static_cast<std::size_t>(i);
    const auto& rule = j % 2 == 0 ? vertex_rule(idx) : edge_rule(idx);
    return i + rule.min_offset >= 0 && i + rule.max_offset <= static_cast<long>(n) - 1;
  };
  long best_start = 0, best_len = 0, run_start = 0, run_len = 0;
  for (long j = 0; j < fine_count; ++j) {
    if (supported(j)) {
      if (run_len == 0) run_start = j;
      if (++run_len > best_len) {
        best_len = run_len;
        best_start = run_start;
      }
    } else {
      run_len = 0;
    }
  }
  if (best_len == 0) {
    throw Error(ErrorKind::size, "truncated refinement of " + std::to_string(n) + " points leaves nothing");
  }
  out.first_index = static_cast<int>(best_start);
  out.points.reserve(static_cast<std::size_t>(best_len));
  for (long j = best_start; j < best_start + best_len; ++j) out.points.push_back(compute(j));
  return out;
}

template <class T>
int one_sided_width(const RefinementRules<T>& rules) {
  return std::max({-rules.vertex.min_offset, rules.vertex.max_offset, -rules.edge.min_offset,
                   rules.edge.max_offset, 0});
}

template <class T>
RefinedSequence<T> refine_step(std::span<const Point<T>> coarse, const RefinementRules<T>& rules,
                               Topology topology, Boundary boundary = Boundary::replicate) {
  return refine_step_with<T>(
      coarse, topology, boundary, one_sided_width(rules),
      [&](std::size_t) -> const SparseRule<T>& { return rules.vertex; },
      [&](std::size_t) -> const SparseRule<T>& { return rules.edge; });
}

/// Applies the scheme `steps` times. Closed polygons double in size each
/// step; open ones (replicated boundary) go from n to 2n - 1.
template <class T>
ControlPolygon<T> refine_curve(const ControlPolygon<T>& polygon, const LaurentSymbol& symbol, int steps,
                               Boundary boundary = Boundary::replicate) {
  check_steps(steps);
  const RefinementRules<T> rules = convert_rules<T>(rules_from_symbol(symbol));
  ControlPolygon<T> current = polygon;
  for (int s = 0; s < steps; ++s) {
    current.points = refine_step<T>(current.points, rules, current.topology, boundary).points;
  }
  return current;
}

enum class TensorOrder { rows_first, cols_first };

namespace detail {

template <class T>
ControlMesh<T> refine_rows(const ControlMesh<T>& mesh, const RefinementRules<T>& rules, Boundary boundary) {
  ControlMesh<T> out = mesh;
  out.grid.clear();
  int new_cols = -1;
  for (int r = 0; r < mesh.rows; ++r) {
    std::span<const Point<T>> row(mesh.grid.data() + static_cast<std::size_t>(r * mesh.cols),
                                  static_cast<std::size_t>(mesh.cols));
    auto refined = refine_step<T>(row, rules, mesh.row_topology, boundary).points;
    new_cols = static_cast<int>(refined.size());
    out.grid.insert(out.grid.end(), refined.begin(), refined.end());
  }
  out.cols = new_cols;
  return out;
}

template <class T>
ControlMesh<T> transposed(const ControlMesh<T>& mesh) {
  ControlMesh<T> t;
  t.dim = mesh.dim;
  t.rows = mesh.cols;
  t.cols = mesh.rows;
  t.row_topology = mesh.col_topology;
  t.col_topology = mesh.row_topology;
  t.grid.resize(mesh.grid.size());
  for (int r = 0; r < mesh.rows; ++r) {
    for (int c = 0; c < mesh.cols; ++c) t.at(c, r) = mesh.at(r, c);
  }
  return t;
}

}  // namespace detail

/// Each step refines every row as a curve, then every column of the result
/// (or the reverse with TensorOrder::cols_first).
template <class T>
ControlMesh<T> refine_tensor_product(const ControlMesh<T>& mesh, const LaurentSymbol& symbol, int steps,
                                     Boundary boundary = Boundary::replicate,
                                     TensorOrder order = TensorOrder::rows_first) {
  check_steps(steps);
  const RefinementRules<T> rules = convert_rules<T>(rules_from_symbol(symbol));
  ControlMesh<T> current = mesh;
  for (int s = 0; s < steps; ++s) {
    if (order == TensorOrder::rows_first) {
      current = detail::refine_rows(current, rules, boundary);
      current = detail::transposed(detail::refine_rows(detail::transposed(current), rules, boundary));
    } else {
      current = detail::transposed(detail::refine_rows(detail::transposed(current), rules, boundary));
      current = detail::refine_rows(current, rules, boundary);
    }
  }
  return current;
}

/// Refined delta sequence: values[k] sits at abscissa (first_index + k) / 2^steps.
struct BasisSamples {
  int steps = 0;
  int first_index = 0;
  std::vector<Rational> values;

  Rational abscissa(std::size_t k) const;
};

/// Refines {..., 0, 1, 0, ...} exactly `steps` times (steps >= 1).
BasisSamples basic_limit_function(const LaurentSymbol& symbol, int steps);

/// Same, and asserts every sample outside [-w/2, w/2] is zero, where w is
/// the family's support width. Throws Error(domain) if one is not.
BasisSamples basic_limit_function(const ParametricMask& mask, const Rational& alpha, const Rational& beta,
                                  int steps);

/// True when every nonzero sample lies in [-half_width, half_width].
bool vanishes_outside(const BasisSamples& samples, const Rational& half_width);

}  // namespace subdiv
