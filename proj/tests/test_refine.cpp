#include <cstdlib>
#include <random>
#include <vector>

#include "doctest.h"
#include "subdiv/analysis.hpp"
#include "subdiv/error.hpp"
#include "subdiv/mask.hpp"
#include "subdiv/refine.hpp"
#include "test_support.hpp"

using namespace subdiv;

namespace {

using P = Point<Rational>;

P pt(const Rational& x, const Rational& y, const Rational& z = Rational(0)) { return {x, y, z}; }

LaurentSymbol four_point() { return specialize(build_relaxed_mask(1), Rational(0), Rational(0)); }
LaurentSymbol cubic_bspline() { return specialize(build_relaxed_mask(0), ratio(1, 8), Rational(0)); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::usage;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ControlMesh<Rational> random_mesh(std::mt19937& rng) {
  std::uniform_int_distribution<int> rows(3, 6), cols(3, 7), flip(0, 1);
  ControlMesh<Rational> m;
  m.rows = rows(rng);
  m.cols = cols(rng);
  m.row_topology = flip(rng) ? Topology::closed : Topology::open;
  m.col_topology = flip(rng) ? Topology::closed : Topology::open;
  for (int k = 0; k < m.rows * m.cols; ++k) {
    m.grid.push_back(pt(testing::random_rational(rng), testing::random_rational(rng), testing::random_rational(rng)));
  }
  return m;
}

}  // namespace

TEST_SUITE("refine") {
  TEST_CASE("four-point scheme on a square") {
    ControlPolygon<Rational> square{2, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, Topology::closed};
    const auto once = refine_curve(square, four_point(), 1);
    REQUIRE(once.points.size() == 8);
    CHECK(once.points[0] == pt(0, 0));
    CHECK(once.points[1] == pt(ratio(1, 2), ratio(-1, 8)));
    CHECK(once.points[3] == pt(ratio(9, 8), ratio(1, 2)));
    CHECK(once.points[7] == pt(ratio(-1, 8), ratio(1, 2)));
  }

  TEST_CASE("interpolatory schemes keep every coarse vertex") {
    std::mt19937 rng(1);
    for (int n = 0; n <= 2; ++n) {
      const LaurentSymbol a = specialize(build_interpolatory_mask(n), Rational(0), ratio(1, 50));
      ControlPolygon<Rational> poly;
      for (int k = 0; k < 9; ++k) poly.points.push_back(pt(testing::random_rational(rng), testing::random_rational(rng)));
      const auto fine = refine_curve(poly, a, 1);
      for (std::size_t i = 0; i < poly.points.size(); ++i) CHECK(fine.points[2 * i] == poly.points[i]);
    }
  }

  TEST_CASE("one step maps samples of a degree 2N+1 polynomial to samples at half spacing") {
    std::mt19937 rng(21);
    for (int n = 0; n <= 2; ++n) {
      const Rational alpha = testing::random_rational(rng);
      const LaurentSymbol a = specialize(build_relaxed_mask(n), alpha, Rational(0));
      for (int k = 0; k < 10; ++k) {
        std::vector<Rational> c;
        for (int e = 0; e <= 2 * n + 1; ++e) c.push_back(testing::random_rational(rng));
        ControlPolygon<Rational> poly{1, {}, Topology::open};
        for (int i = 0; i < 16; ++i) poly.points.push_back(pt(eval_poly(c, Rational(i)), 0));
        const auto fine = refine_step<Rational>(poly.points, rules_from_symbol(a), Topology::open, Boundary::truncate);
        REQUIRE(!fine.points.empty());
        for (std::size_t j = 0; j < fine.points.size(); ++j) {
          CHECK(fine.points[j][0] == eval_poly(c, ratio(fine.first_index + static_cast<long>(j), 2)));
        }
      }
    }
  }

  TEST_CASE("collinear input stays collinear") {
    ControlPolygon<Rational> line{2, {}, Topology::open};
    for (int i = 0; i < 8; ++i) line.points.push_back(pt(i, 2 * i + 1));
    const auto fine = refine_curve(line, specialize(build_extended_mask(1), ratio(1, 20), ratio(1, 30)), 3);
    for (const auto& p : fine.points) CHECK(p[1] == 2 * p[0] + 1);
  }

  TEST_CASE("refinement commutes with affine maps") {
    std::mt19937 rng(4);
    ControlPolygon<Rational> poly;
    for (int k = 0; k < 7; ++k) poly.points.push_back(pt(testing::random_rational(rng), testing::random_rational(rng)));
    const Rational m00 = 2, m01 = ratio(1, 3), m10 = ratio(-1, 5), m11 = 3, tx = 7, ty = ratio(-1, 2);
    auto map = [&](const P& p) { return pt(m00 * p[0] + m01 * p[1] + tx, m10 * p[0] + m11 * p[1] + ty); };
    ControlPolygon<Rational> moved = poly;
    for (auto& p : moved.points) p = map(p);
    const LaurentSymbol a = specialize(build_extended_mask(0), ratio(1, 9), ratio(1, 40));
    const auto lhs = refine_curve(moved, a, 3);
    const auto rhs = refine_curve(poly, a, 3);
    for (std::size_t k = 0; k < lhs.points.size(); ++k) CHECK(lhs.points[k] == map(rhs.points[k]));
  }

  TEST_CASE("point counts") {
    ControlPolygon<Rational> closed{2, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, Topology::closed};
    CHECK(refine_curve(closed, cubic_bspline(), 3).points.size() == 32);
    ControlPolygon<Rational> open = closed;
    open.topology = Topology::open;
    CHECK(refine_curve(open, cubic_bspline(), 1).points.size() == 7);
    CHECK(refine_curve(open, cubic_bspline(), 2).points.size() == 13);
    CHECK(refine_curve(open, cubic_bspline(), 0).points == open.points);
  }

  TEST_CASE("truncation keeps only fully supported points") {
    std::vector<P> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(pt(i, 0));
    const auto rules = rules_from_symbol(four_point());
    const auto t = refine_step<Rational>(pts, rules, Topology::open, Boundary::truncate);
    // edge rule needs i-1..i+2, so fine indices 2..8 survive
    CHECK(t.first_index == 2);
    CHECK(t.points.size() == 7);
    const auto cubic = refine_step<Rational>(pts, rules_from_symbol(cubic_bspline()), Topology::open, Boundary::truncate);
    CHECK(cubic.first_index == 1);
    CHECK(cubic.points.size() == 9);
  }

  TEST_CASE("exact and floating modes agree") {
    ControlPolygon<Rational> exact{2, {pt(0, 0), pt(3, 1), pt(4, 4), pt(1, 5), pt(-1, 2)}, Topology::closed};
    ControlPolygon<double> approx{2, {}, Topology::closed};
    for (const auto& p : exact.points) approx.points.push_back({to_double(p[0]), to_double(p[1]), 0.0});
    const LaurentSymbol a = specialize(build_relaxed_mask(2), ratio(1, 300), Rational(0));
    const auto e = refine_curve(exact, a, 4);
    const auto d = refine_curve(approx, a, 4);
    REQUIRE(e.points.size() == d.points.size());
    for (std::size_t k = 0; k < e.points.size(); ++k) {
      CHECK(d.points[k][0] == doctest::Approx(to_double(e.points[k][0])).epsilon(1e-12));
      CHECK(d.points[k][1] == doctest::Approx(to_double(e.points[k][1])).epsilon(1e-12));
    }
  }

  TEST_CASE("tensor product orders commute") {
    std::mt19937 rng(8);
    const LaurentSymbol a = specialize(build_extended_mask(0), ratio(1, 7), ratio(-1, 30));
    for (int k = 0; k < 20; ++k) {
      const auto mesh = random_mesh(rng);
      const auto rc = refine_tensor_product(mesh, a, 1, Boundary::replicate, TensorOrder::rows_first);
      const auto cr = refine_tensor_product(mesh, a, 1, Boundary::replicate, TensorOrder::cols_first);
      CHECK(rc.rows == cr.rows);
      CHECK(rc.cols == cr.cols);
      CHECK(rc.grid == cr.grid);
    }
  }

  TEST_CASE("tensor product sizes and bilinear reproduction") {
    ControlMesh<Rational> m;
    m.rows = 5;
    m.cols = 6;
    for (int r = 0; r < m.rows; ++r) {
      for (int c = 0; c < m.cols; ++c) m.grid.push_back(pt(c, r, Rational(r * c)));
    }
    const auto fine = refine_tensor_product(m, cubic_bspline(), 1);
    CHECK(fine.rows == 9);
    CHECK(fine.cols == 11);
    // interior points lie on z = x y at half spacing
    for (int r = 1; r + 1 < fine.rows; ++r) {
      for (int c = 1; c + 1 < fine.cols; ++c) {
        const P& p = fine.at(r, c);
        CHECK(p[0] == ratio(c, 2));
        CHECK(p[1] == ratio(r, 2));
        CHECK(p[2] == p[0] * p[1]);
      }
    }
    m.row_topology = Topology::closed;
    m.col_topology = Topology::closed;
    const auto torus = refine_tensor_product(m, cubic_bspline(), 2);
    CHECK(torus.rows == 20);
    CHECK(torus.cols == 24);
  }

  TEST_CASE("planar meshes stay planar") {
    std::mt19937 rng(12);
    ControlMesh<Rational> m;
    m.rows = 4;
    m.cols = 5;
    m.row_topology = Topology::closed;
    for (int k = 0; k < m.rows * m.cols; ++k) {
      const Rational x = testing::random_rational(rng), y = testing::random_rational(rng);
      m.grid.push_back(pt(x, y, 3 * x - y + 2));
    }
    const auto fine = refine_tensor_product(m, specialize(build_relaxed_mask(1), ratio(1, 40), Rational(0)), 2);
    for (const auto& p : fine.grid) CHECK(p[2] == 3 * p[0] - p[1] + 2);
  }

  TEST_CASE("basic limit function support") {
    for (int n = 0; n <= 2; ++n) {
      for (const auto& mask : {build_relaxed_mask(n), build_extended_mask(n), build_interpolatory_mask(n)}) {
        const Rational alpha = mask.family() == Family::interpolatory_2N4 ? Rational(0) : ratio(1, 33);
        const Rational beta = mask.family() == Family::relaxed_2N2 ? Rational(0) : ratio(1, 41);
        const BasisSamples s = basic_limit_function(mask, alpha, beta, 5);
        CHECK(vanishes_outside(s, ratio(support_width(mask), 2)));
        // the samples spread to within one fine spacing of the bound
        const Rational reach = s.abscissa(s.values.size() - 1);
        CHECK(reach > ratio(support_width(mask), 2) - 1);
        // partition of unity: each residue class mod 2^steps sums to 1
        std::vector<Rational> sums(32);
        for (std::size_t k = 0; k < s.values.size(); ++k) {
          long r = (s.first_index + static_cast<long>(k)) % 32;
          sums[static_cast<std::size_t>(r < 0 ? r + 32 : r)] += s.values[k];
        }
        for (const auto& v : sums) CHECK(v == 1);
      }
    }
    CHECK_FALSE(vanishes_outside(basic_limit_function(cubic_bspline(), 3), Rational(1)));
  }

  TEST_CASE("errors") {
    ControlPolygon<Rational> two{2, {pt(0, 0), pt(1, 0)}, Topology::closed};
    CHECK(kind_of([&] { refine_curve(two, cubic_bspline(), 1); }) == ErrorKind::size);
    ControlPolygon<Rational> short_open{2, {pt(0, 0), pt(1, 0), pt(2, 0)}, Topology::open};
    CHECK(kind_of([&] { refine_curve(short_open, specialize(build_relaxed_mask(2), 0, 0), 1); }) == ErrorKind::size);
    ControlPolygon<Rational> square{2, {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}, Topology::closed};
    CHECK(kind_of([&] { refine_curve(square, cubic_bspline(), 13); }) == ErrorKind::step_limit);
    CHECK(kind_of([&] { refine_curve(square, cubic_bspline(), -1); }) == ErrorKind::domain);
    CHECK(kind_of([&] { rules_from_symbol(LaurentSymbol(0, {1, 1, 1})); }) == ErrorKind::normalization);
    CHECK(kind_of([&] { basic_limit_function(cubic_bspline(), 0); }) == ErrorKind::domain);
    CHECK(kind_of([&] { parse_boundary("mirror"); }) == ErrorKind::usage);
  }

  TEST_CASE("step cap follows the environment") {
    CHECK(max_refinement_steps() == 12);
    setenv("SUBDIV_MAX_STEPS", "3", 1);
    CHECK(max_refinement_steps() == 3);
    CHECK_THROWS_AS(check_steps(4), Error);
    CHECK_NOTHROW(check_steps(3));
    setenv("SUBDIV_MAX_STEPS", "not a number", 1);
    CHECK(max_refinement_steps() == 12);
    unsetenv("SUBDIV_MAX_STEPS");
  }
}
