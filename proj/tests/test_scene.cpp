#include <string>

#include "doctest.h"
#include "subdiv/scene.hpp"

using namespace subdiv;
using nlohmann::json;

namespace {

json square_scene() {
  return json::parse(R"({
    "schema": 1,
    "scheme": {"family": "relaxed", "n": 0, "alpha": "1/8"},
    "steps": 1,
    "polygons": [{"id": "sq", "closed": true, "points": [[0, 0], [1, 0], [1, 1], [0, 1]]}]
  })");
}

std::string error_path(const json& doc, bool require_schema = true) {
  try {
    parse_scene(doc, require_schema);
  } catch (const SceneError& e) {
    return e.pointer();
  }
  return "<no error>";
}

}  // namespace

TEST_SUITE("scene") {
  TEST_CASE("parameters parse to exact rationals") {
    json doc = square_scene();
    doc["scheme"] = {{"family", "extended"}, {"n", 1}, {"alpha", "0.1"}, {"beta", "-49/1152"}};
    const Scene s = parse_scene(doc);
    CHECK(s.scheme.family == Family::relaxed_2N3);
    CHECK(s.scheme.alpha == ratio(1, 10));
    CHECK(s.scheme.beta == ratio(-49, 1152));
    CHECK(json_rational(json(0.125), "") == ratio(1, 8));
    CHECK(json_rational(json(3), "") == Rational(3));
  }

  TEST_CASE("square refines to the expected counts and values") {
    json doc = square_scene();
    doc["arithmetic"] = "exact";
    const SceneResult r = run_scene(parse_scene(doc));
    REQUIRE(r.polygons.size() == 1);
    const auto& pts = r.polygons[0].refined.points;
    REQUIRE(pts.size() == 8);
    // vertex rule (1/8, 3/4, 1/8) around (0,0) with neighbours (0,1) and (1,0)
    CHECK(pts[0][0] == 0.125);
    CHECK(pts[0][1] == 0.125);
    CHECK(pts[1][0] == 0.5);
    CHECK(pts[1][1] == 0.0);

    doc["steps"] = 5;
    CHECK(run_scene(parse_scene(doc)).polygons[0].refined.points.size() == 128);
  }

  TEST_CASE("meshes double per closed direction") {
    json doc = square_scene();
    doc.erase("polygons");
    json pts = json::array();
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) pts.push_back({c, r, (r * c) % 3});
    }
    doc["meshes"] = {{{"id", "m"}, {"rows", 4}, {"cols", 4}, {"closed_rows", true}, {"closed_cols", true}, {"points", pts}}};
    doc["steps"] = 3;
    const SceneResult r = run_scene(parse_scene(doc));
    CHECK(r.meshes[0].refined.rows == 32);
    CHECK(r.meshes[0].refined.cols == 32);
  }

  TEST_CASE("profiles in both spellings") {
    json doc = square_scene();
    doc["scheme"] = {{"family", "extended"}, {"n", 0}, {"alpha", "1/8"}};
    doc["polygons"][0]["profile"] = json::parse(
        R"({"pairs": [["0", "1/64"], ["1/10", "0"], ["1/10", "0"], ["1/10", "0"]], "default": ["1/10", "0"]})");
    Scene s = parse_scene(doc);
    REQUIRE(s.polygons[0].profile.has_value());
    CHECK(s.polygons[0].profile->interpolate == std::vector<bool>{true, false, false, false});

    doc["polygons"][0]["profile"] = json::parse(R"({
        "vertex_alpha": ["0", "1/10", "1/10", "1/10"],
        "edge_params": [["0", "1/64"], ["1/10", "0"], ["1/10", "0"], ["1/10", "0"]],
        "interpolate": [true, false, false, false],
        "default": ["1/10", "0"]})");
    s = parse_scene(doc);
    const SceneResult r = run_scene(s);
    CHECK(r.polygons[0].flagged == std::vector<std::size_t>{0});
    CHECK(r.polygons[0].refined.points[0] == r.polygons[0].input.points[0]);
  }

  TEST_CASE("validation errors point into the document") {
    json doc = square_scene();
    doc.erase("schema");
    CHECK(error_path(doc) == "/schema");
    CHECK(error_path(doc, false) == "<no error>");

    doc = square_scene();
    doc["scheme"]["alpha"] = "1/0";
    CHECK(error_path(doc) == "/scheme/alpha");

    doc = square_scene();
    doc["scheme"]["family"] = "dual";
    CHECK(error_path(doc) == "/scheme/family");

    doc = square_scene();
    doc["scheme"]["beta"] = "1/3";
    CHECK(error_path(doc) == "/scheme/beta");

    doc = square_scene();
    doc["polygons"][0]["points"][2] = {1, "x"};
    CHECK(error_path(doc) == "/polygons/0/points/2/1");

    doc = square_scene();
    doc["polygons"][0]["points"][1] = {1, 0, 0};
    CHECK(error_path(doc) == "/polygons/0/points/1");

    doc = square_scene();
    doc["exports"] = {{{"format", "svg"}, {"path", "a.svg"}, {"ids", {"sq", "nope"}}}};
    CHECK(error_path(doc) == "/exports/0/ids/1");

    doc = square_scene();
    doc["exports"] = {{{"format", "png"}, {"path", "a.png"}}};
    CHECK(error_path(doc) == "/exports/0/format");

    doc = square_scene();
    doc["exports"] = {{{"format", "svg"}, {"path", "../escape.svg"}}};
    CHECK(error_path(doc) == "/exports/0/path");

    doc = square_scene();
    doc["polygons"].push_back(doc["polygons"][0]);
    CHECK(error_path(doc) == "/polygons/1/id");

    doc = square_scene();
    doc["steps"] = 13;
    CHECK(error_path(doc) == "/steps");

    doc = square_scene();
    doc["polygons"][0]["profile"] = json::parse(R"({"pairs": [["0", "1"]], "default": ["0", "0"]})");
    CHECK(error_path(doc) == "/polygons/0/profile/pairs");

    doc["polygons"][0]["profile"] = json::parse(
        R"({"pairs": [["0", "1"], ["0", "1"], ["0", "1"], ["0", "1"]], "default": ["0", "0"]})");
    doc["polygons"][0]["profile"]["vertex_alpha"] = json::array({"1/8", "0", "0", "0"});
    doc["polygons"][0]["profile"].erase("pairs");
    doc["polygons"][0]["profile"]["edge_params"] = json::parse(R"([["0","1"],["0","1"],["0","1"],["0","1"]])");
    doc["polygons"][0]["profile"]["interpolate"] = json::array({true, true, true, true});
    CHECK(error_path(doc) == "/polygons/0/profile");

    CHECK_THROWS_AS(parse_scene_text("{not json"), SceneError);
  }

  TEST_CASE("refinement failures carry the object path") {
    json doc = square_scene();
    doc["polygons"][0]["points"] = {{0, 0}, {1, 0}};
    try {
      run_scene(parse_scene(doc));
      FAIL("expected a size error");
    } catch (const SceneError& e) {
      CHECK(e.pointer() == "/polygons/0");
    }
  }
}
