#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "coinnim/solver.hpp"

namespace coinnim {

inline constexpr std::int32_t kDefaultHeatmapCap = 32;

struct ApiResponse {
  int status = 200;
  nlohmann::json body;
};

// Request handlers. Each takes the raw request body and never throws; errors
// come back as {"error": code, "message": text, "detail": ...} with the
// matching HTTP status.
ApiResponse handle_analyze(Engine& engine, std::string_view body);
ApiResponse handle_apply_move(Engine& engine, std::string_view body);
ApiResponse handle_engine_move(Engine& engine, std::string_view body);
ApiResponse handle_heatmap(Engine& engine, std::string_view body,
                           std::int32_t cap = kDefaultHeatmapCap);

struct ServiceOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::int32_t heatmap_cap = kDefaultHeatmapCap;
  std::string cors_origin = "*";
};

/// HTTP/1.1 front end for the handlers above:
///   POST /api/analyze, /api/apply-move, /api/engine-move, /api/heatmap
class Service {
 public:
  Service(Engine& engine, ServiceOptions options);
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// Binds the listening socket and returns the bound port.
  /// Throws Error{Bind} on failure.
  int bind();
  /// Serves until stop(); bind() must have succeeded.
  void run();
  void stop();
  int port() const noexcept;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace coinnim
