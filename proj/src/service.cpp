#include "subdiv/service.hpp"

#include "httplib.h"
#include "subdiv/error.hpp"
#include "subdiv/interproximate.hpp"
#include "subdiv/report.hpp"
#include "subdiv/scene.hpp"

namespace subdiv {

namespace {

using nlohmann::json;

json parse_body(const std::string& body) {
  try {
    json doc = json::parse(body);
    if (!doc.is_object()) throw SceneError("", "request body must be a JSON object");
    return doc;
  } catch (const json::parse_error& e) {
    throw SceneError("", std::string("malformed JSON: ") + e.what());
  }
}

const json& field(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SceneError("/" + key, "missing required field");
  return *it;
}

int int_field(const json& doc, const std::string& key, int fallback, int lo, int hi) {
  auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  if (!it->is_number_integer()) throw SceneError("/" + key, "expected an integer");
  const auto v = it->get<long long>();
  if (v < lo || v > hi) throw SceneError("/" + key, "value out of range");
  return static_cast<int>(v);
}

Family family_field(const json& doc) {
  const json& f = field(doc, "family");
  if (!f.is_string()) throw SceneError("/family", "expected a string");
  try {
    return parse_family(f.get<std::string>());
  } catch (const Error& e) {
    throw SceneError("/family", e.what());
  }
}

std::optional<Rational> optional_rational(const json& doc, const std::string& key) {
  auto it = doc.find(key);
  if (it == doc.end() || it->is_null()) return std::nullopt;
  return json_rational(*it, "/" + key);
}

json error_body(const Error& e, const std::string& path) {
  json j{{"error", e.what()}, {"kind", to_string(e.kind())}};
  if (!path.empty() || e.kind() == ErrorKind::parse) j["path"] = path;
  return j;
}

template <class Fn>
ServiceResponse guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const SceneError& e) {
    return {400, error_body(e, e.pointer())};
  } catch (const Error& e) {
    return {400, error_body(e, "")};
  } catch (const std::exception& e) {
    return {500, json{{"error", e.what()}, {"kind", "internal"}}};
  }
}

json point_array(const std::vector<Point<double>>& pts, int dim) {
  json a = json::array();
  for (const auto& p : pts) {
    json q = json::array();
    for (int c = 0; c < dim; ++c) q.push_back(p[static_cast<std::size_t>(c)]);
    a.push_back(std::move(q));
  }
  return a;
}

}  // namespace

ServiceResponse handle_mask(const std::string& body) {
  return guarded([&] {
    const json doc = parse_body(body);
    MaskRequest req;
    req.family = family_field(doc);
    req.n = int_field(doc, "n", 0, 0, 16);
    req.alpha = optional_rational(doc, "alpha");
    req.beta = optional_rational(doc, "beta");
    return ServiceResponse{200, to_json(describe_mask(req))};
  });
}

ServiceResponse handle_analyze(const std::string& body, const ServiceOptions& options) {
  return guarded([&] {
    const json doc = parse_body(body);
    AnalyzeRequest req;
    req.family = family_field(doc);
    req.n = int_field(doc, "n", 0, 0, 16);
    req.alpha = optional_rational(doc, "alpha").value_or(Rational(0));
    req.beta = optional_rational(doc, "beta").value_or(Rational(0));
    req.max_l = int_field(doc, "max_l", 8, 1, 16);
    req.max_n = int_field(doc, "max_n", 6, 0, 16);
    req.deadline = std::chrono::steady_clock::now() + options.analysis_budget;
    const AnalysisReport report = analyze(req);
    json out = to_json(report);
    if (report.timed_out()) {
      out["error"] = "continuity search exceeded the time budget; the report is partial";
      return ServiceResponse{422, out};
    }
    return ServiceResponse{200, out};
  });
}

ServiceResponse handle_refine(const std::string& body) {
  return guarded([&] {
    const Scene scene = parse_scene(parse_body(body), false);
    return ServiceResponse{200, to_json(run_scene(scene))};
  });
}

ServiceResponse handle_interproximate(const std::string& body) {
  return guarded([&] {
    const json doc = parse_body(body);
    const int n = int_field(doc, "n", 0, 0, 16);
    const int steps = int_field(doc, "steps", 1, 0, max_refinement_steps());
    json polygon{{"id", "polygon"}, {"points", field(doc, "points")}};
    if (auto it = doc.find("closed"); it != doc.end()) polygon["closed"] = *it;
    polygon["profile"] = field(doc, "profile");
    json scene{{"scheme", {{"family", "extended"}, {"n", n}}}, {"steps", steps}, {"polygons", json::array({polygon})}};
    if (auto it = doc.find("arithmetic"); it != doc.end()) scene["arithmetic"] = *it;

    Scene parsed;
    try {
      parsed = parse_scene(scene, false);
    } catch (const SceneError& e) {
      // map pointers back onto the request layout
      std::string p = e.pointer();
      const std::string prefix = "/polygons/0";
      if (p.rfind(prefix, 0) == 0) p = p.substr(prefix.size());
      throw SceneError(p, e.what());
    }
    const SceneResult result = run_scene(parsed);
    const RefinedPolygon& r = result.polygons.front();

    // per-level indices of the flagged vertices
    json levels = json::array();
    for (int k = 0; k <= steps; ++k) {
      json idx = json::array();
      for (auto i : r.flagged) idx.push_back(i << k);
      levels.push_back(std::move(idx));
    }
    std::vector<Point<double>> flagged_points;
    for (auto i : r.flagged_refined) flagged_points.push_back(r.refined.points[i]);
    json out;
    out["closed"] = r.refined.topology == Topology::closed;
    out["points"] = point_array(r.refined.points, r.refined.dim);
    out["flagged_per_level"] = levels;
    out["flagged_points"] = point_array(flagged_points, r.refined.dim);
    return ServiceResponse{200, out};
  });
}

ServiceResponse dispatch(const std::string& route, const std::string& body, const ServiceOptions& options) {
  if (route == "/mask") return handle_mask(body);
  if (route == "/analyze") return handle_analyze(body, options);
  if (route == "/refine") return handle_refine(body);
  if (route == "/interproximate") return handle_interproximate(body);
  return {404, json{{"error", "unknown endpoint " + route}}};
}

struct Service::Impl {
  httplib::Server server;
  ServiceOptions options;
};

Service::Service(ServiceOptions options, std::string static_dir) : impl_(std::make_unique<Impl>()) {
  impl_->options = options;
  for (const char* route : {"/mask", "/analyze", "/refine", "/interproximate"}) {
    impl_->server.Post(route, [this, route](const httplib::Request& req, httplib::Response& res) {
      const ServiceResponse r = dispatch(route, req.body, impl_->options);
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json");
    });
  }
  if (!static_dir.empty()) impl_->server.set_mount_point("/", static_dir);
}

Service::~Service() = default;

int Service::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool Service::listen_after_bind() { return impl_->server.listen_after_bind(); }

void Service::stop() { impl_->server.stop(); }

}  // namespace subdiv
