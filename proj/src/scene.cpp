#include "subdiv/scene.hpp"

#include <set>

namespace subdiv {

namespace {

using nlohmann::json;

std::string child(const std::string& pointer, const std::string& key) {
  std::string escaped;
  for (char c : key) {
    if (c == '~') {
      escaped += "~0";
    } else if (c == '/') {
      escaped += "~1";
    } else {
      escaped += c;
    }
  }
  return pointer + "/" + escaped;
}

std::string child(const std::string& pointer, std::size_t index) { return pointer + "/" + std::to_string(index); }

const json& require(const json& obj, const std::string& key, const std::string& pointer) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SceneError(child(pointer, key), "missing required field");
  return *it;
}

void require_object(const json& value, const std::string& pointer) {
  if (!value.is_object()) throw SceneError(pointer, "expected an object");
}

void require_array(const json& value, const std::string& pointer) {
  if (!value.is_array()) throw SceneError(pointer, "expected an array");
}

int json_int(const json& value, const std::string& pointer, int lo, int hi) {
  if (!value.is_number_integer()) throw SceneError(pointer, "expected an integer");
  const auto v = value.get<long long>();
  if (v < lo || v > hi) {
    throw SceneError(pointer, "value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "]");
  }
  return static_cast<int>(v);
}

bool json_bool(const json& value, const std::string& pointer) {
  if (!value.is_boolean()) throw SceneError(pointer, "expected true or false");
  return value.get<bool>();
}

std::string json_string(const json& value, const std::string& pointer) {
  if (!value.is_string()) throw SceneError(pointer, "expected a string");
  return value.get<std::string>();
}

Topology topology_of(const json& obj, const std::string& key, const std::string& pointer, Topology fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  return json_bool(*it, child(pointer, key)) ? Topology::closed : Topology::open;
}

Point<Rational> parse_point(const json& value, const std::string& pointer, int& dim) {
  require_array(value, pointer);
  const int d = static_cast<int>(value.size());
  if (d < 2 || d > 3) throw SceneError(pointer, "points need 2 or 3 coordinates");
  if (dim == 0) dim = d;
  if (d != dim) throw SceneError(pointer, "expected " + std::to_string(dim) + " coordinates like the first point");
  Point<Rational> p{};
  for (int c = 0; c < d; ++c) p[static_cast<std::size_t>(c)] = json_rational(value[static_cast<std::size_t>(c)], child(pointer, static_cast<std::size_t>(c)));
  return p;
}

TensionPair parse_pair(const json& value, const std::string& pointer) {
  require_array(value, pointer);
  if (value.size() != 2) throw SceneError(pointer, "expected [alpha, beta]");
  return {json_rational(value[0], child(pointer, 0)), json_rational(value[1], child(pointer, 1))};
}

SchemeSpec parse_scheme(const json& value, const std::string& pointer) {
  require_object(value, pointer);
  SchemeSpec s;
  try {
    s.family = parse_family(json_string(require(value, "family", pointer), child(pointer, "family")));
  } catch (const SceneError&) {
    throw;
  } catch (const Error& e) {
    throw SceneError(child(pointer, "family"), e.what());
  }
  s.n = json_int(require(value, "n", pointer), child(pointer, "n"), 0, 16);
  if (auto it = value.find("alpha"); it != value.end()) s.alpha = json_rational(*it, child(pointer, "alpha"));
  if (auto it = value.find("beta"); it != value.end()) s.beta = json_rational(*it, child(pointer, "beta"));
  if (s.family == Family::relaxed_2N2 && s.beta != 0) {
    throw SceneError(child(pointer, "beta"), "the relaxed family has no beta parameter");
  }
  if (s.family == Family::interpolatory_2N4 && s.alpha != 0) {
    throw SceneError(child(pointer, "alpha"), "the interpolatory family has no alpha parameter");
  }
  return s;
}

ScenePolygon parse_polygon(const json& value, const std::string& pointer) {
  require_object(value, pointer);
  ScenePolygon p;
  p.id = json_string(require(value, "id", pointer), child(pointer, "id"));
  p.polygon.topology = topology_of(value, "closed", pointer, Topology::closed);
  const std::string pts_ptr = child(pointer, "points");
  const json& pts = require(value, "points", pointer);
  require_array(pts, pts_ptr);
  if (pts.empty()) throw SceneError(pts_ptr, "polygon has no points");
  int dim = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) p.polygon.points.push_back(parse_point(pts[k], child(pts_ptr, k), dim));
  p.polygon.dim = dim;
  if (auto it = value.find("profile"); it != value.end() && !it->is_null()) {
    p.profile = parse_profile(*it, p.polygon.points.size(), p.polygon.topology, child(pointer, "profile"));
  }
  return p;
}

SceneMesh parse_mesh(const json& value, const std::string& pointer) {
  require_object(value, pointer);
  SceneMesh m;
  m.id = json_string(require(value, "id", pointer), child(pointer, "id"));
  m.mesh.rows = json_int(require(value, "rows", pointer), child(pointer, "rows"), 1, 4096);
  m.mesh.cols = json_int(require(value, "cols", pointer), child(pointer, "cols"), 1, 4096);
  m.mesh.row_topology = topology_of(value, "closed_rows", pointer, Topology::open);
  m.mesh.col_topology = topology_of(value, "closed_cols", pointer, Topology::open);
  const std::string pts_ptr = child(pointer, "points");
  const json& pts = require(value, "points", pointer);
  require_array(pts, pts_ptr);
  const auto expected = static_cast<std::size_t>(m.mesh.rows) * static_cast<std::size_t>(m.mesh.cols);
  if (pts.size() != expected) {
    throw SceneError(pts_ptr, "expected rows * cols = " + std::to_string(expected) + " points, got " +
                                  std::to_string(pts.size()));
  }
  int dim = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) m.mesh.grid.push_back(parse_point(pts[k], child(pts_ptr, k), dim));
  m.mesh.dim = dim;
  return m;
}

ExportTarget parse_export(const json& value, const std::string& pointer) {
  require_object(value, pointer);
  ExportTarget t;
  const std::string format = json_string(require(value, "format", pointer), child(pointer, "format"));
  if (format == "svg") {
    t.format = ExportFormat::svg;
  } else if (format == "obj") {
    t.format = ExportFormat::obj;
  } else {
    throw SceneError(child(pointer, "format"), "unknown format '" + format + "' (expected svg or obj)");
  }
  t.path = json_string(require(value, "path", pointer), child(pointer, "path"));
  if (t.path.empty() || t.path.find("..") != std::string::npos || t.path.front() == '/') {
    throw SceneError(child(pointer, "path"), "export paths must be relative and stay inside the output directory");
  }
  if (auto it = value.find("ids"); it != value.end()) {
    require_array(*it, child(pointer, "ids"));
    for (std::size_t k = 0; k < it->size(); ++k) t.ids.push_back(json_string((*it)[k], child(child(pointer, "ids"), k)));
  }
  return t;
}

template <class T>
ControlPolygon<double> to_double_polygon(const ControlPolygon<T>& p) {
  ControlPolygon<double> out{p.dim, {}, p.topology};
  out.points.reserve(p.points.size());
  for (const auto& q : p.points) {
    if constexpr (std::is_same_v<T, double>) {
      out.points.push_back(q);
    } else {
      out.points.push_back({to_double(q[0]), to_double(q[1]), to_double(q[2])});
    }
  }
  return out;
}

template <class T>
ControlMesh<double> to_double_mesh(const ControlMesh<T>& m) {
  ControlMesh<double> out;
  out.dim = m.dim;
  out.rows = m.rows;
  out.cols = m.cols;
  out.row_topology = m.row_topology;
  out.col_topology = m.col_topology;
  for (const auto& q : m.grid) {
    if constexpr (std::is_same_v<T, double>) {
      out.grid.push_back(q);
    } else {
      out.grid.push_back({to_double(q[0]), to_double(q[1]), to_double(q[2])});
    }
  }
  return out;
}

template <class T>
ControlPolygon<T> convert_polygon(const ControlPolygon<Rational>& p) {
  if constexpr (std::is_same_v<T, Rational>) {
    return p;
  } else {
    return to_double_polygon(p);
  }
}

template <class T>
ControlMesh<T> convert_mesh(const ControlMesh<Rational>& m) {
  if constexpr (std::is_same_v<T, Rational>) {
    return m;
  } else {
    return to_double_mesh(m);
  }
}

template <class T>
SceneResult run_with(const Scene& scene) {
  SceneResult result;
  const ParametricMask mask = build_mask(scene.scheme.family, scene.scheme.n);
  const LaurentSymbol symbol = specialize(mask, scene.scheme.alpha, scene.scheme.beta);
  for (std::size_t k = 0; k < scene.polygons.size(); ++k) {
    const auto& sp = scene.polygons[k];
    RefinedPolygon out;
    out.id = sp.id;
    out.input = to_double_polygon(sp.polygon);
    try {
      if (sp.profile) {
        const auto r = refine_interproximate(convert_polygon<T>(sp.polygon), *sp.profile, scene.scheme.n, scene.steps);
        out.refined = to_double_polygon(r.polygon);
        out.flagged = r.flagged_per_level.front();
        out.flagged_refined = r.flagged_per_level.back();
      } else {
        out.refined = to_double_polygon(refine_curve(convert_polygon<T>(sp.polygon), symbol, scene.steps, scene.boundary));
      }
    } catch (const SceneError&) {
      throw;
    } catch (const Error& e) {
      throw SceneError(child("/polygons", k), e.what());
    }
    result.polygons.push_back(std::move(out));
  }
  for (std::size_t k = 0; k < scene.meshes.size(); ++k) {
    const auto& sm = scene.meshes[k];
    RefinedMesh out;
    out.id = sm.id;
    out.input = to_double_mesh(sm.mesh);
    try {
      out.refined = to_double_mesh(refine_tensor_product(convert_mesh<T>(sm.mesh), symbol, scene.steps, scene.boundary));
    } catch (const Error& e) {
      throw SceneError(child("/meshes", k), e.what());
    }
    result.meshes.push_back(std::move(out));
  }
  return result;
}

json point_json(const Point<double>& p, int dim) {
  json a = json::array();
  for (int c = 0; c < dim; ++c) a.push_back(p[static_cast<std::size_t>(c)]);
  return a;
}

}  // namespace

Rational json_rational(const nlohmann::json& value, const std::string& pointer) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(mpz_class(value.dump()));
    if (value.is_number_float()) return parse_rational(value.dump());
  } catch (const Error& e) {
    throw SceneError(pointer, e.what());
  }
  throw SceneError(pointer, "expected a number or a string like \"1/8\"");
}

TensionProfile parse_profile(const nlohmann::json& value, std::size_t vertex_count, Topology topology,
                             const std::string& pointer) {
  require_object(value, pointer);
  const TensionPair defaults = parse_pair(require(value, "default", pointer), child(pointer, "default"));
  TensionProfile profile;
  if (auto it = value.find("pairs"); it != value.end()) {
    const std::string ptr = child(pointer, "pairs");
    require_array(*it, ptr);
    if (it->size() != vertex_count) {
      throw SceneError(ptr, "expected one pair per vertex (" + std::to_string(vertex_count) + "), got " +
                                std::to_string(it->size()));
    }
    std::vector<TensionPair> pairs;
    for (std::size_t k = 0; k < it->size(); ++k) pairs.push_back(parse_pair((*it)[k], child(ptr, k)));
    profile = TensionProfile::from_vertex_pairs(pairs, topology, defaults);
  } else {
    const std::string va_ptr = child(pointer, "vertex_alpha");
    const json& va = require(value, "vertex_alpha", pointer);
    require_array(va, va_ptr);
    for (std::size_t k = 0; k < va.size(); ++k) profile.vertex_alpha.push_back(json_rational(va[k], child(va_ptr, k)));
    const std::string ep_ptr = child(pointer, "edge_params");
    const json& ep = require(value, "edge_params", pointer);
    require_array(ep, ep_ptr);
    for (std::size_t k = 0; k < ep.size(); ++k) profile.edge_params.push_back(parse_pair(ep[k], child(ep_ptr, k)));
    const std::string in_ptr = child(pointer, "interpolate");
    const json& in = require(value, "interpolate", pointer);
    require_array(in, in_ptr);
    for (std::size_t k = 0; k < in.size(); ++k) profile.interpolate.push_back(json_bool(in[k], child(in_ptr, k)));
    profile.default_params = defaults;
  }
  try {
    validate_profile(profile, vertex_count, topology);
  } catch (const Error& e) {
    throw SceneError(pointer, e.what());
  }
  return profile;
}

Scene parse_scene(const nlohmann::json& doc, bool require_schema) {
  require_object(doc, "");
  Scene scene;
  if (auto it = doc.find("schema"); it != doc.end()) {
    scene.schema = json_int(*it, "/schema", 1, 1);
  } else if (require_schema) {
    throw SceneError("/schema", "missing required field (this reader understands schema 1)");
  }
  scene.scheme = parse_scheme(require(doc, "scheme", ""), "/scheme");
  if (auto it = doc.find("steps"); it != doc.end()) {
    scene.steps = json_int(*it, "/steps", 0, max_refinement_steps());
  }
  if (auto it = doc.find("boundary"); it != doc.end()) {
    try {
      scene.boundary = parse_boundary(json_string(*it, "/boundary"));
    } catch (const SceneError&) {
      throw;
    } catch (const Error& e) {
      throw SceneError("/boundary", e.what());
    }
  }
  if (auto it = doc.find("arithmetic"); it != doc.end()) {
    const std::string a = json_string(*it, "/arithmetic");
    if (a == "exact") {
      scene.arithmetic = Arithmetic::exact;
    } else if (a == "double") {
      scene.arithmetic = Arithmetic::floating;
    } else {
      throw SceneError("/arithmetic", "expected \"double\" or \"exact\"");
    }
  }

  std::set<std::string> polygon_ids, mesh_ids;
  if (auto it = doc.find("polygons"); it != doc.end()) {
    require_array(*it, "/polygons");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string ptr = child("/polygons", k);
      ScenePolygon p = parse_polygon((*it)[k], ptr);
      if (!polygon_ids.insert(p.id).second || mesh_ids.count(p.id)) throw SceneError(child(ptr, "id"), "duplicate id '" + p.id + "'");
      if (p.profile) {
        if (scene.scheme.family != Family::relaxed_2N3) {
          throw SceneError(child(ptr, "profile"), "tension profiles need the extended family");
        }
        if (scene.boundary != Boundary::replicate) {
          throw SceneError(child(ptr, "profile"), "tension profiles support only the replicate boundary");
        }
      }
      scene.polygons.push_back(std::move(p));
    }
  }
  if (auto it = doc.find("meshes"); it != doc.end()) {
    require_array(*it, "/meshes");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string ptr = child("/meshes", k);
      SceneMesh m = parse_mesh((*it)[k], ptr);
      if (!mesh_ids.insert(m.id).second || polygon_ids.count(m.id)) throw SceneError(child(ptr, "id"), "duplicate id '" + m.id + "'");
      scene.meshes.push_back(std::move(m));
    }
  }
  if (scene.polygons.empty() && scene.meshes.empty()) throw SceneError("", "scene has no polygons or meshes");

  if (auto it = doc.find("exports"); it != doc.end()) {
    require_array(*it, "/exports");
    for (std::size_t k = 0; k < it->size(); ++k) {
      const std::string ptr = child("/exports", k);
      ExportTarget t = parse_export((*it)[k], ptr);
      const auto& known = t.format == ExportFormat::svg ? polygon_ids : mesh_ids;
      for (std::size_t i = 0; i < t.ids.size(); ++i) {
        if (!known.count(t.ids[i])) {
          throw SceneError(child(child(ptr, "ids"), i),
                           "no " + std::string(t.format == ExportFormat::svg ? "polygon" : "mesh") + " with id '" +
                               t.ids[i] + "'");
        }
      }
      scene.exports.push_back(std::move(t));
    }
  }
  return scene;
}

Scene parse_scene_text(const std::string& text, bool require_schema) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SceneError("", std::string("malformed JSON: ") + e.what());
  }
  return parse_scene(doc, require_schema);
}

SceneResult run_scene(const Scene& scene) {
  return scene.arithmetic == Arithmetic::exact ? run_with<Rational>(scene) : run_with<double>(scene);
}

nlohmann::json to_json(const SceneResult& result) {
  json j;
  j["polygons"] = json::array();
  for (const auto& p : result.polygons) {
    json item;
    item["id"] = p.id;
    item["closed"] = p.refined.topology == Topology::closed;
    item["points"] = json::array();
    for (const auto& q : p.refined.points) item["points"].push_back(point_json(q, p.refined.dim));
    item["flagged"] = p.flagged;
    item["flagged_refined"] = p.flagged_refined;
    j["polygons"].push_back(std::move(item));
  }
  j["meshes"] = json::array();
  for (const auto& m : result.meshes) {
    json item;
    item["id"] = m.id;
    item["rows"] = m.refined.rows;
    item["cols"] = m.refined.cols;
    item["points"] = json::array();
    for (const auto& q : m.refined.grid) item["points"].push_back(point_json(q, m.refined.dim));
    j["meshes"].push_back(std::move(item));
  }
  return j;
}

}  // namespace subdiv
