#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "subdiv/error.hpp"
#include "subdiv/interproximate.hpp"
#include "subdiv/mask.hpp"
#include "subdiv/refine.hpp"

namespace subdiv {

/// Validation failure carrying a JSON pointer into the offending document.
class SceneError : public Error {
 public:
  SceneError(std::string pointer, const std::string& message)
      : Error(ErrorKind::parse, (pointer.empty() ? std::string("/") : pointer) + ": " + message),
        pointer_(std::move(pointer)) {}
  const std::string& pointer() const { return pointer_; }

 private:
  std::string pointer_;
};

enum class Arithmetic { floating, exact };

struct SchemeSpec {
  Family family = Family::relaxed_2N2;
  int n = 0;
  Rational alpha;
  Rational beta;
};

struct ScenePolygon {
  std::string id;
  ControlPolygon<Rational> polygon;
  std::optional<TensionProfile> profile;
};

struct SceneMesh {
  std::string id;
  ControlMesh<Rational> mesh;
};

enum class ExportFormat { svg, obj };

struct ExportTarget {
  ExportFormat format = ExportFormat::svg;
  std::string path;
  /// Empty selects every object the format can hold.
  std::vector<std::string> ids;
};

struct Scene {
  int schema = 1;
  SchemeSpec scheme;
  int steps = 4;
  Boundary boundary = Boundary::replicate;
  Arithmetic arithmetic = Arithmetic::floating;
  std::vector<ScenePolygon> polygons;
  std::vector<SceneMesh> meshes;
  std::vector<ExportTarget> exports;
};

/// Parses and validates a scene document. `require_schema` is relaxed for
/// service fragments, which may omit the version field.
Scene parse_scene(const nlohmann::json& doc, bool require_schema = true);
Scene parse_scene_text(const std::string& text, bool require_schema = true);

/// Exact rational from a JSON string ("1/8", "0.125") or number.
Rational json_rational(const nlohmann::json& value, const std::string& pointer);

TensionProfile parse_profile(const nlohmann::json& value, std::size_t vertex_count, Topology topology,
                             const std::string& pointer);

struct RefinedPolygon {
  std::string id;
  ControlPolygon<double> input;
  ControlPolygon<double> refined;
  /// Input vertex indices held fixed, and where they sit in the refined polygon.
  std::vector<std::size_t> flagged;
  std::vector<std::size_t> flagged_refined;
};

struct RefinedMesh {
  std::string id;
  ControlMesh<double> input;
  ControlMesh<double> refined;
};

struct SceneResult {
  std::vector<RefinedPolygon> polygons;
  std::vector<RefinedMesh> meshes;
};

SceneResult run_scene(const Scene& scene);

nlohmann::json to_json(const SceneResult& result);

}  // namespace subdiv
