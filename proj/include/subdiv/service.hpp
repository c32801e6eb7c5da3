#pragma once

#include <chrono>
#include <memory>
#include <string>

#include "json.hpp"

namespace subdiv {

struct ServiceResponse {
  int status = 200;
  nlohmann::json body;
};

struct ServiceOptions {
  /// Wall-clock budget for the continuity search of one /analyze request.
  std::chrono::milliseconds analysis_budget{10000};
};

/// Pure request handlers: JSON text in, status and JSON out. Malformed input
/// yields 400 with a JSON pointer in "path"; an analysis that runs out of
/// time yields 422 with the partial report.
ServiceResponse handle_mask(const std::string& body);
ServiceResponse handle_analyze(const std::string& body, const ServiceOptions& options = {});
ServiceResponse handle_refine(const std::string& body);
ServiceResponse handle_interproximate(const std::string& body);

/// Routes "/mask", "/analyze", "/refine", "/interproximate"; 404 otherwise.
ServiceResponse dispatch(const std::string& route, const std::string& body, const ServiceOptions& options = {});

class Service {
 public:
  explicit Service(ServiceOptions options = {}, std::string static_dir = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds to host (127.0.0.1 by default); port 0 picks a free port.
  /// Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen_after_bind();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace subdiv
