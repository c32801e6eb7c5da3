#include <csignal>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "subdiv/error.hpp"
#include "subdiv/export.hpp"
#include "subdiv/report.hpp"
#include "subdiv/scene.hpp"
#include "subdiv/service.hpp"

using namespace subdiv;

namespace {

constexpr int kUsageExit = 2;
constexpr int kFailureExit = 1;

Service* running_service = nullptr;

void on_signal(int) {
  if (running_service) running_service->stop();
}

Family family_arg(const std::string& name) {
  try {
    return parse_family(name);
  } catch (const Error& e) {
    throw Error(ErrorKind::usage, e.what());
  }
}

std::optional<Rational> rational_arg(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    throw Error(ErrorKind::usage, std::string(flag) + ": " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::usage, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric subdivision schemes: masks, analysis, refinement and export"};
  app.require_subcommand(1);

  std::string family, alpha_text, beta_text;
  int n = 0;
  bool json_out = false, ascii = false;

  auto* mask_cmd = app.add_subcommand("mask", "Print the parametric mask, or the concrete one with parameters");
  mask_cmd->add_option("family", family, "relaxed, extended or interpolatory")->required();
  mask_cmd->add_option("N", n, "family index N >= 0")->required();
  mask_cmd->add_option("--alpha", alpha_text, "tension alpha, e.g. 1/8 or 0.125");
  mask_cmd->add_option("--beta", beta_text, "tension beta");
  mask_cmd->add_flag("--json", json_out, "machine-readable output");
  mask_cmd->add_flag("--ascii", ascii, "spell out alpha and beta");

  int max_l = 8, max_n = 6, timeout_ms = 0;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report orientation, degrees, support and continuity");
  analyze_cmd->add_option("family", family)->required();
  analyze_cmd->add_option("N", n)->required();
  analyze_cmd->add_option("--alpha", alpha_text);
  analyze_cmd->add_option("--beta", beta_text);
  analyze_cmd->add_option("--max-l", max_l, "largest contraction level tried")->check(CLI::Range(1, 16));
  analyze_cmd->add_option("--max-n", max_n, "largest continuity order tried")->check(CLI::Range(0, 16));
  analyze_cmd->add_option("--timeout-ms", timeout_ms, "stop the continuity search after this long (0: no limit)");
  analyze_cmd->add_flag("--json", json_out);
  analyze_cmd->add_flag("--ascii", ascii);

  std::string scene_path, output_dir = ".", boundary_name;
  auto* refine_cmd = app.add_subcommand("refine", "Refine a scene file and write its SVG/OBJ exports");
  refine_cmd->add_option("scene", scene_path, "scene JSON file")->required()->check(CLI::ExistingFile);
  refine_cmd->add_option("--output-dir", output_dir, "directory for exported files");
  refine_cmd->add_option("--boundary", boundary_name, "override the scene boundary: replicate or truncate");
  refine_cmd->add_flag("--json", json_out, "also print refined points as JSON");

  int steps = 6;
  std::string output = "basis.svg";
  auto* basis_cmd = app.add_subcommand("basis", "Plot the basic limit function to SVG");
  basis_cmd->add_option("family", family)->required();
  basis_cmd->add_option("N", n)->required();
  basis_cmd->add_option("--alpha", alpha_text);
  basis_cmd->add_option("--beta", beta_text);
  basis_cmd->add_option("--steps", steps, "refinement depth")->check(CLI::Range(1, 64));
  basis_cmd->add_option("--output", output, "SVG file to write");

  std::string host = "127.0.0.1", static_dir;
  int port = 8080, budget_ms = 10000;
  auto* serve_cmd = app.add_subcommand("serve", "Run the local JSON-over-HTTP service");
  serve_cmd->add_option("--port", port)->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--host", host, "bind address (localhost by default)");
  serve_cmd->add_option("--static", static_dir, "directory of UI assets to serve at /")->check(CLI::ExistingDirectory);
  serve_cmd->add_option("--analysis-budget-ms", budget_ms, "time budget per /analyze request");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsageExit;
  }

  const SymbolNames names = ascii ? SymbolNames::ascii() : SymbolNames::unicode();
  try {
    if (*mask_cmd) {
      if (n < 0) throw Error(ErrorKind::usage, "N must be non-negative");
      MaskRequest req{family_arg(family), n, rational_arg(alpha_text, "--alpha"), rational_arg(beta_text, "--beta")};
      const MaskReport report = describe_mask(req);
      std::cout << (json_out ? to_json(report).dump(2) + "\n" : mask_text(report, names));
    } else if (*analyze_cmd) {
      if (n < 0) throw Error(ErrorKind::usage, "N must be non-negative");
      AnalyzeRequest req;
      req.family = family_arg(family);
      req.n = n;
      req.alpha = rational_arg(alpha_text, "--alpha").value_or(Rational(0));
      req.beta = rational_arg(beta_text, "--beta").value_or(Rational(0));
      req.max_l = max_l;
      req.max_n = max_n;
      if (timeout_ms > 0) req.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(timeout_ms);
      const AnalysisReport report = analyze(req);
      std::cout << (json_out ? to_json(report).dump(2) + "\n" : analysis_text(report, names));
    } else if (*refine_cmd) {
      Scene scene = parse_scene_text(read_file(scene_path));
      if (!boundary_name.empty()) {
        try {
          scene.boundary = parse_boundary(boundary_name);
        } catch (const Error& e) {
          throw Error(ErrorKind::usage, e.what());
        }
      }
      const SceneResult result = run_scene(scene);
      for (const auto& f : write_exports(scene, result, output_dir)) {
        std::cerr << "wrote " << f.path << " (" << f.bytes << " bytes)\n";
      }
      for (const auto& p : result.polygons) {
        std::cout << "polygon " << p.id << ": " << p.input.points.size() << " -> " << p.refined.points.size()
                  << " points\n";
      }
      for (const auto& m : result.meshes) {
        std::cout << "mesh " << m.id << ": " << m.input.rows << "x" << m.input.cols << " -> " << m.refined.rows << "x"
                  << m.refined.cols << "\n";
      }
      if (json_out) std::cout << to_json(result).dump(2) << "\n";
    } else if (*basis_cmd) {
      if (n < 0) throw Error(ErrorKind::usage, "N must be non-negative");
      const Rational alpha = rational_arg(alpha_text, "--alpha").value_or(Rational(0));
      const Rational beta = rational_arg(beta_text, "--beta").value_or(Rational(0));
      const ParametricMask mask = build_mask(family_arg(family), n);
      const BasisSamples samples = basic_limit_function(mask, alpha, beta, steps);
      const std::string title = family_name(mask.family()) + " N=" + std::to_string(n) + " alpha=" + to_string(alpha) +
                                " beta=" + to_string(beta);
      std::ofstream file(output, std::ios::binary);
      if (!file) throw Error(ErrorKind::usage, "cannot write " + output);
      file << write_basis_svg(samples, title);
      std::cout << "wrote " << output << " (" << samples.values.size() << " samples, support width "
                << support_width(mask) << ")\n";
    } else if (*serve_cmd) {
      Service service(ServiceOptions{std::chrono::milliseconds(budget_ms)}, static_dir);
      const int bound = service.bind(host, port);
      if (bound < 0) throw Error(ErrorKind::usage, "cannot bind " + host + ":" + std::to_string(port));
      std::cout << "listening on http://" << host << ":" << bound << std::endl;
      running_service = &service;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      service.listen_after_bind();
      running_service = nullptr;
    }
  } catch (const SceneError& e) {
    std::cerr << "error: " << scene_path << ": " << e.what() << "\n";
    return kFailureExit;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
    return e.kind() == ErrorKind::usage || e.kind() == ErrorKind::classification ? kUsageExit : kFailureExit;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailureExit;
  }
  return 0;
}
