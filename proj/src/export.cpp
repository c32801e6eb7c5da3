#include "subdiv/export.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace subdiv {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;
constexpr const char* kInputStroke = "#7f7f7f";
constexpr const char* kCurveStroke = "#1f4e9c";
constexpr const char* kFlagFill = "#d62728";

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Frame {
  double min_x = std::numeric_limits<double>::infinity();
  double min_y = std::numeric_limits<double>::infinity();
  double max_x = -std::numeric_limits<double>::infinity();
  double max_y = -std::numeric_limits<double>::infinity();
  double scale = 1.0;
  double width = kCanvas;
  double height = kCanvas;

  void include(double x, double y) {
    min_x = std::min(min_x, x);
    min_y = std::min(min_y, y);
    max_x = std::max(max_x, x);
    max_y = std::max(max_y, y);
  }

  void fit() {
    if (!(min_x <= max_x)) min_x = max_x = min_y = max_y = 0.0;
    const double span = std::max({max_x - min_x, max_y - min_y, 1e-12});
    scale = (kCanvas - 2 * kMargin) / span;
    width = (max_x - min_x) * scale + 2 * kMargin;
    height = (max_y - min_y) * scale + 2 * kMargin;
  }

  // y grows upward in model space
  std::string xy(double x, double y) const {
    return num(kMargin + (x - min_x) * scale) + "," + num(height - kMargin - (y - min_y) * scale);
  }
};

std::string header(const Frame& f) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         num(f.width) + "\" height=\"" + num(f.height) + "\" viewBox=\"0 0 " + num(f.width) + " " + num(f.height) +
         "\">\n<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
}

std::string path_element(const Frame& f, const std::vector<Point<double>>& pts, bool closed, const char* stroke,
                         const char* extra) {
  std::string out = closed ? "<polygon" : "<polyline";
  out += " fill=\"none\" stroke=\"";
  out += stroke;
  out += "\" stroke-width=\"1.5\"";
  out += extra;
  out += " points=\"";
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k) out += ' ';
    out += f.xy(pts[k][0], pts[k][1]);
  }
  return out + "\"/>\n";
}

}  // namespace

std::string write_svg(const std::vector<RefinedPolygon>& polygons) {
  Frame f;
  for (const auto& p : polygons) {
    for (const auto& q : p.input.points) f.include(q[0], q[1]);
    for (const auto& q : p.refined.points) f.include(q[0], q[1]);
  }
  f.fit();
  std::string out = header(f);
  for (const auto& p : polygons) {
    out += "<g id=\"" + escape(p.id) + "\">\n";
    const bool closed = p.input.topology == Topology::closed;
    out += path_element(f, p.input.points, closed, kInputStroke, " stroke-dasharray=\"6 4\"");
    out += path_element(f, p.refined.points, closed, kCurveStroke, "");
    for (auto i : p.flagged) {
      const auto& q = p.input.points[i];
      const std::string c = f.xy(q[0], q[1]);
      const auto comma = c.find(',');
      out += "<circle cx=\"" + c.substr(0, comma) + "\" cy=\"" + c.substr(comma + 1) + "\" r=\"4\" fill=\"" +
             kFlagFill + "\"/>\n";
    }
    out += "</g>\n";
  }
  return out + "</svg>\n";
}

std::string write_obj(const std::vector<RefinedMesh>& meshes) {
  std::ostringstream out;
  std::size_t base = 1;
  char buf[128];
  for (const auto& m : meshes) {
    const auto& g = m.refined;
    out << "o " << m.id << "\n";
    for (const auto& p : g.grid) {
      std::snprintf(buf, sizeof buf, "v %.10g %.10g %.10g\n", p[0], p[1], p[2]);
      out << buf;
    }
    const int row_quads = g.row_topology == Topology::closed ? g.cols : g.cols - 1;
    const int col_quads = g.col_topology == Topology::closed ? g.rows : g.rows - 1;
    auto index = [&](int r, int c) { return base + static_cast<std::size_t>((r % g.rows) * g.cols + (c % g.cols)); };
    for (int r = 0; r < col_quads; ++r) {
      for (int c = 0; c < row_quads; ++c) {
        out << "f " << index(r, c) << ' ' << index(r, c + 1) << ' ' << index(r + 1, c + 1) << ' ' << index(r + 1, c)
            << "\n";
      }
    }
    base += g.grid.size();
  }
  return out.str();
}

std::string write_basis_svg(const BasisSamples& samples, const std::string& title) {
  std::vector<Point<double>> pts;
  for (std::size_t k = 0; k < samples.values.size(); ++k) {
    pts.push_back({to_double(samples.abscissa(k)), to_double(samples.values[k]), 0.0});
  }
  Frame f;
  for (const auto& q : pts) f.include(q[0], q[1]);
  f.include(f.min_x, 0.0);
  f.fit();
  std::string out = header(f);
  out += "<title>" + escape(title) + "</title>\n";
  const std::vector<Point<double>> axis{{f.min_x, 0.0, 0.0}, {f.max_x, 0.0, 0.0}};
  out += path_element(f, axis, false, kInputStroke, " stroke-dasharray=\"6 4\"");
  out += path_element(f, pts, false, kCurveStroke, "");
  return out + "</svg>\n";
}

std::vector<WrittenFile> write_exports(const Scene& scene, const SceneResult& result, const std::string& output_dir) {
  namespace fs = std::filesystem;
  std::vector<ExportTarget> targets = scene.exports;
  if (targets.empty()) {
    if (!result.polygons.empty()) targets.push_back({ExportFormat::svg, "scene.svg", {}});
    if (!result.meshes.empty()) targets.push_back({ExportFormat::obj, "scene.obj", {}});
  }
  std::vector<WrittenFile> written;
  for (const auto& t : targets) {
    const std::set<std::string> ids(t.ids.begin(), t.ids.end());
    std::string content;
    if (t.format == ExportFormat::svg) {
      std::vector<RefinedPolygon> chosen;
      for (const auto& p : result.polygons) {
        if (ids.empty() || ids.count(p.id)) chosen.push_back(p);
      }
      content = write_svg(chosen);
    } else {
      std::vector<RefinedMesh> chosen;
      for (const auto& m : result.meshes) {
        if (ids.empty() || ids.count(m.id)) chosen.push_back(m);
      }
      content = write_obj(chosen);
    }
    const fs::path path = fs::path(output_dir) / t.path;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::usage, "cannot write " + path.string());
    file << content;
    written.push_back({path.string(), content.size()});
  }
  return written;
}

}  // namespace subdiv
