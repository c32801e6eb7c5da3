// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "reference_tables.hpp"
#include "subdiv/analysis.hpp"
#include "subdiv/interproximate.hpp"
#include "subdiv/mask.hpp"
#include "subdiv/refine.hpp"

using namespace subdiv;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) notes << "; ";
      notes << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(const std::string& name, double budget_seconds, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "runtime %.3f s exceeds %.0f s", seconds, budget_seconds);
    out.require(seconds < budget_seconds, buf);
  }
  if (!out.pass) ++failures;
  std::printf("%s  %-34s %8.3f s%s%s\n", out.pass ? "PASS" : "FAIL", name.c_str(), seconds,
              out.pass ? "" : "  ", out.notes.str().c_str());
  std::fflush(stdout);
}

Rational random_rational(std::mt19937& rng, int max_num = 20, int max_den = 64) {
  std::uniform_int_distribution<int> num(-max_num, max_num), den(1, max_den);
  return ratio(num(rng), den(rng));
}

Rule rational_rule(int first, const std::vector<Rational>& v) {
  Rule r;
  for (std::size_t k = 0; k < v.size(); ++k) r[first + static_cast<int>(k)] = BivarPoly(v[k]);
  return r;
}

std::string s(int v) { return std::to_string(v); }

void mask_table(Outcome& out) {
  const auto rows = reference::relaxed_rows();
  for (int n = 0; n <= 5; ++n) {
    const ParametricMask mask = build_relaxed_mask(n);
    const auto& row = rows[static_cast<std::size_t>(n)];
    bool ok = row.entries.size() == static_cast<std::size_t>(2 * mask.half_width() + 1);
    for (int j = -mask.half_width(); ok && j <= mask.half_width(); ++j) {
      ok = mask.entry(j) == reference::row_entry(row, static_cast<std::size_t>(j + mask.half_width()));
    }
    out.require(ok, "row N=" + s(n) + " differs");
  }
}

void worked_example(Outcome& out) {
  const BivarPoly a = BivarPoly::alpha();
  const DisplacementPair c = displacement_vectors(1);
  out.require(c.even.entries == rational_rule(-2, {-1, 3, -4, 3, -1}), "even displacement sequence");
  out.require(c.odd.entries == rational_rule(-1, {ratio(-1, 16), ratio(1, 16), ratio(1, 16), ratio(-1, 16)}),
              "odd displacement sequence");
  const ParametricMask m = build_relaxed_mask(1);
  const Rule vertex(-2, {-a, a * Rational(4), BivarPoly(1) - a * Rational(6), a * Rational(4), -a});
  out.require(m.vertex_rule() == vertex, "vertex rule");
  out.require(m.edge_rule() == rational_rule(-1, {ratio(-1, 16), ratio(9, 16), ratio(9, 16), ratio(-1, 16)}),
              "edge rule");
}

void extension(Outcome& out) {
  const auto masks = reference::extended_masks();
  for (int n = 0; n <= 2; ++n) {
    out.require(build_extended_mask(n).entries() == masks[static_cast<std::size_t>(n)],
                "extended mask N=" + s(n) + " differs");
  }
  Rule expected;
  const auto w = reference::weights_n1();
  for (std::size_t k = 0; k < w.size(); ++k) expected[static_cast<int>(k) - 2] = reference::w() * Rational(w[k]);
  out.require(extension_weights(1).entries == expected, "weights for N=1 differ");
}

void degree_tables(Outcome& out) {
  constexpr int kCap = 40;
  std::mt19937 rng(20240611);
  for (int n = 0; n <= 5; ++n) {
    for (int k = 0; k < 5; ++k) {
      const Rational alpha = random_rational(rng);
      const DegreeReport r = reproduction_degree(specialize(build_relaxed_mask(n), alpha, 0), kCap);
      out.require(r.generation_degree == 2 * n + 1 && r.reproduction_degree == 2 * n + 1,
                  "(a) N=" + s(n) + " alpha=" + to_string(alpha) + " gives " + s(r.generation_degree) + "/" +
                      s(r.reproduction_degree));
    }
    const DegreeReport sp =
        reproduction_degree(specialize(build_relaxed_mask(n), reference::special_alpha()[static_cast<std::size_t>(n)], 0), kCap);
    out.require(sp.generation_degree == 2 * n + 3 && sp.reproduction_degree == 2 * n + 1,
                "(b) N=" + s(n) + " gives " + s(sp.generation_degree) + "/" + s(sp.reproduction_degree));
  }
  for (int n = 0; n <= 2; ++n) {
    const auto idx = static_cast<std::size_t>(n);
    const int rd_beta =
        reproduction_degree(specialize(build_extended_mask(n), 0, reference::special_beta()[idx]), kCap).reproduction_degree;
    out.require(rd_beta == 2 * n + 3, "(c) alpha=0 N=" + s(n) + " reproduces " + s(rd_beta));
    const Rational alpha = reference::listed_alpha_at_zero_beta()[idx];
    const int rd_alpha = reproduction_degree(specialize(build_extended_mask(n), alpha, 0), kCap).reproduction_degree;
    out.require(rd_alpha == 2 * n + 3, "(c) beta=0 alpha=" + to_string(alpha) + " reproduces " + s(rd_alpha) +
                                           ", table lists " + s(2 * n + 3));
    const int generic =
        reproduction_degree(specialize(build_interpolatory_mask(n), 0, ratio(1, 97)), kCap).reproduction_degree;
    const int tuned =
        reproduction_degree(specialize(build_interpolatory_mask(n), 0, reference::special_beta()[idx]), kCap).reproduction_degree;
    out.require(generic == 2 * n + 1 && tuned == 2 * n + 3,
                "(d) N=" + s(n) + " gives " + s(generic) + " and " + s(tuned));
  }
}

void continuity(Outcome& out) {
  struct Case {
    const char* label;
    LaurentSymbol symbol;
    int order;
  };
  const Rational a_ext = ratio(3, 16);
  const Rational b_ext = -ratio(1, 16) * (8 * a_ext - 1) / (a_ext - 1);
  const std::vector<Case> cases{
      {"relaxed N=0 alpha=1/8", specialize(build_relaxed_mask(0), ratio(1, 8), 0), 2},
      {"relaxed N=1 alpha=1/32", specialize(build_relaxed_mask(1), ratio(1, 32), 0), 2},
      {"relaxed N=0 alpha=0", specialize(build_relaxed_mask(0), 0, 0), 0},
      {"extended N=0 alpha=3/16", specialize(build_extended_mask(0), a_ext, b_ext), 4},
  };
  for (const auto& c : cases) {
    const ContinuityCertificate cert = continuity_lower_bound(c.symbol, 6, 8);
    const bool ok = cert.certified_order >= c.order && cert.contraction_level && *cert.contraction_level <= 8 &&
                    cert.norm_value && *cert.norm_value < 1;
    out.require(ok, std::string(c.label) + " certified C^" + s(cert.certified_order));
  }
}

void closed_form(Outcome& out) {
  const SpecialCheck good = special_continuity_check(SpecialScheme::S_a3, ratio(1, 8), 0);
  out.require(good.holds && good.max_value == ratio(1, 2), "S_a3(1/8, 0) max " + to_string(good.max_value));
  const SpecialCheck bad = special_continuity_check(SpecialScheme::S_a3, 0, 0);
  out.require(!bad.holds && bad.max_value == 1, "S_a3(0, 0) max " + to_string(bad.max_value));
}

void support(Outcome& out) {
  const int relaxed[] = {4, 8, 12, 16, 20, 24};
  const int extended[] = {6, 10, 14};
  for (int n = 0; n <= 5; ++n) {
    out.require(support_width(Family::relaxed_2N2, n) == relaxed[n], "relaxed width N=" + s(n));
    const auto samples = basic_limit_function(build_relaxed_mask(n), ratio(1, 64), 0, 6);
    out.require(vanishes_outside(samples, ratio(relaxed[n], 2)), "relaxed basis N=" + s(n));
  }
  for (int n = 0; n <= 2; ++n) {
    out.require(support_width(Family::relaxed_2N3, n) == extended[n], "extended width N=" + s(n));
    const auto samples = basic_limit_function(build_extended_mask(n), ratio(1, 64), ratio(1, 50), 6);
    out.require(vanishes_outside(samples, ratio(extended[n], 2)), "extended basis N=" + s(n));
  }
}

void engine_reproduction(Outcome& out) {
  std::mt19937 rng(77);
  for (int n = 0; n <= 2; ++n) {
    const LaurentSymbol a = specialize(build_relaxed_mask(n), random_rational(rng), 0);
    const auto rules = rules_from_symbol(a);
    for (int k = 0; k < 10; ++k) {
      std::vector<Rational> coeffs;
      for (int e = 0; e <= 2 * n + 1; ++e) coeffs.push_back(random_rational(rng));
      coeffs.back() += coeffs.back() == 0 ? 1 : 0;
      auto p = [&](const Rational& x) {
        Rational acc;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
      };
      std::vector<Point<Rational>> samples;
      for (int i = 0; i < 20; ++i) samples.push_back({p(Rational(i)), Rational(0), Rational(0)});
      const auto fine = refine_step<Rational>(samples, rules, Topology::open, Boundary::truncate);
      bool ok = !fine.points.empty();
      for (std::size_t j = 0; ok && j < fine.points.size(); ++j) {
        ok = fine.points[j][0] == p(ratio(fine.first_index + static_cast<long>(j), 2));
      }
      out.require(ok, "N=" + s(n) + " polynomial " + s(k));
    }
  }
}

void interproximate(Outcome& out) {
  struct FlagSet {
    std::vector<std::size_t> flagged;
    TensionPair on, off;
  };
  const std::vector<FlagSet> sets{
      {{6, 7, 8}, {0, ratio(1, 64)}, {ratio(1, 10), ratio(-49, 1152)}},
      {{1, 2, 3}, {0, ratio(-2, 125)}, {ratio(1, 14), ratio(-43, 1664)}},
      {{0, 1, 3, 4}, {0, ratio(1, 30)}, {ratio(1, 11), ratio(-1, 30)}},
  };
  ControlPolygon<double> poly{2, {}, Topology::closed};
  for (const auto& [x, y] : reference::letter_polygon()) poly.points.push_back({double(x), double(y), 0.0});
  for (std::size_t k = 0; k < sets.size(); ++k) {
    std::vector<TensionPair> pairs(poly.points.size(), sets[k].off);
    for (auto i : sets[k].flagged) pairs[i] = sets[k].on;
    const auto profile = TensionProfile::from_vertex_pairs(pairs, Topology::closed, sets[k].off);
    for (int level = 1; level <= 5; ++level) {
      const auto r = refine_interproximate(poly, profile, 1, level);
      for (auto i : sets[k].flagged) {
        const auto& q = r.polygon.points[i << level];
        out.require(q == poly.points[i], "set " + s(int(k)) + " vertex " + s(int(i)) + " moved at level " + s(level));
      }
    }
  }
}

void tensor(Outcome& out) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> rows(3, 6), cols(3, 7), flip(0, 1);
  const LaurentSymbol a = specialize(build_relaxed_mask(1), ratio(1, 40), 0);
  for (int k = 0; k < 20; ++k) {
    ControlMesh<Rational> m;
    m.rows = rows(rng);
    m.cols = cols(rng);
    m.row_topology = flip(rng) ? Topology::closed : Topology::open;
    m.col_topology = flip(rng) ? Topology::closed : Topology::open;
    // open directions need the one-sided width + 1 points
    if (m.row_topology == Topology::open) m.cols = std::max(m.cols, 4);
    if (m.col_topology == Topology::open) m.rows = std::max(m.rows, 4);
    for (int i = 0; i < m.rows * m.cols; ++i) m.grid.push_back({random_rational(rng), random_rational(rng), random_rational(rng)});
    const auto rc = refine_tensor_product(m, a, 1, Boundary::replicate, TensorOrder::rows_first);
    const auto cr = refine_tensor_product(m, a, 1, Boundary::replicate, TensorOrder::cols_first);
    out.require(rc.rows == cr.rows && rc.cols == cr.cols && rc.grid == cr.grid,
                "mesh " + s(k) + " (" + s(m.rows) + "x" + s(m.cols) + ")");
  }
}

}  // namespace

int main() {
  criterion("mask table equality", 1, mask_table);
  criterion("worked example oracle", 0, worked_example);
  criterion("extension equality", 0, extension);
  criterion("degree tables", 10, degree_tables);
  criterion("continuity certificates", 30, continuity);
  criterion("closed-form continuity evaluator", 0, closed_form);
  criterion("support", 0, support);
  criterion("engine reproduction property", 0, engine_reproduction);
  criterion("interproximate fixed point", 0, interproximate);
  criterion("tensor-product commutativity", 0, tensor);
  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
