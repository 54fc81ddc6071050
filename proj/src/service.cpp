#include "coinnim/service.hpp"

#include <algorithm>
#include <string>

#include <httplib.h>

#include "coinnim/closed_form.hpp"
#include "coinnim/error.hpp"
#include "coinnim/json_io.hpp"

namespace coinnim {

namespace {

using nlohmann::json;

struct HttpError {
  int status;
  std::string code;
  std::string message;
  json detail = nullptr;
};

ApiResponse error_response(int status, std::string code, std::string message,
                           json detail = nullptr) {
  return {status, {{"error", std::move(code)},
                   {"message", std::move(message)},
                   {"detail", std::move(detail)}}};
}

template <class Handler>
ApiResponse guarded(std::string_view body, Handler&& handler) {
  try {
    json request = json::parse(body);
    if (!request.is_object()) throw HttpError{400, "bad_request", "body must be a JSON object"};
    return handler(request);
  } catch (const HttpError& e) {
    return error_response(e.status, e.code, e.message, e.detail);
  } catch (const json::exception& e) {
    return error_response(400, "bad_request", e.what());
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::InvalidArgument:
        return error_response(400, "bad_request", e.what());
      case ErrorCode::MalformedPosition:
        return error_response(422, "invalid_position", e.what());
      case ErrorCode::IllegalMove:
        return error_response(409, "illegal_move", e.what());
      case ErrorCode::MemoCapExceeded:
        return error_response(503, "memo_cap", e.what());
      default:
        return error_response(500, "internal", e.what());
    }
  } catch (const std::exception& e) {
    return error_response(500, "internal", e.what());
  }
}

// Accepts {"variant", "pieces"} or {"variant", "position": {"pieces"}} where
// the nested object may carry the variant itself.
VariantPosition read_position(const json& request) {
  const json* source = &request;
  if (request.contains("position")) {
    source = &request.at("position");
    if (!source->is_object()) throw HttpError{400, "bad_request", "\"position\" must be an object"};
  }
  const json* variant = source->contains("variant") ? &source->at("variant")
                        : request.contains("variant") ? &request.at("variant")
                                                      : nullptr;
  if (!variant) throw HttpError{400, "bad_request", "missing \"variant\""};
  if (!source->contains("pieces")) throw HttpError{400, "bad_request", "missing \"pieces\""};
  VariantPosition vp{variant_from_json(*variant), pieces_from_json(source->at("pieces"))};
  if (!validate(vp.position, vp.variant)) {
    throw HttpError{422, "invalid_position",
                    "position " + to_string(vp.position) + " violates the " +
                        std::string(variant_name(vp.variant)) + " rules",
                    to_json(vp.variant, vp.position)};
  }
  return vp;
}

json closed_form_json(const Position& p, Variant v) {
  const Classification c = classify(p, v);
  if (!c.applicable) return "not applicable";
  switch (v) {
    case Variant::Rook:
      return {{"nimsum", c.nim_sum}, {"P1", c.in_p1}, {"N0", c.in_n0},
              {"E", c.in_terminal_set}, {"P", c.p_position}};
    case Variant::JumpOnly:
      return {{"nimsum", c.nim_sum}, {"P0", c.in_p0}, {"P1", c.in_p1},
              {"N0", c.in_n0}, {"P", c.p_position}};
    case Variant::Push:
      return {{"nimsum", c.nim_sum}, {"P", c.p_position}};
    case Variant::NoInteraction:
      break;
  }
  return "not applicable";
}

std::string outcome_str(Outcome o) { return std::string(1, outcome_char(o)); }

}  // namespace

ApiResponse handle_analyze(Engine& engine, std::string_view body) {
  return guarded(body, [&](const json& request) -> ApiResponse {
    const auto [variant, position] = read_position(request);
    Solver& solver = engine.solver(variant);
    const GrundyValue g = solver.grundy(position);
    const std::vector<Move> legal = legal_moves(position, variant);
    json out = {
        {"variant", variant_name(variant)},
        {"position", to_json(variant, position)},
        {"grundy", g},
        {"outcome", outcome_str(outcome_of(g))},
        {"terminal", legal.empty()},
        {"closed_form", closed_form_json(position, variant)},
        {"legal_moves", to_json(legal)},
        {"best_moves", to_json(solver.best_moves(position))},
    };
    if (auto closed = closed_form_outcome(position, variant); closed && *closed != outcome_of(g)) {
      out["warning"] = "closed-form outcome " + outcome_str(*closed) +
                       " disagrees with solver outcome " + outcome_str(outcome_of(g));
    }
    return {200, std::move(out)};
  });
}

ApiResponse handle_apply_move(Engine&, std::string_view body) {
  return guarded(body, [&](const json& request) -> ApiResponse {
    const auto [variant, position] = read_position(request);
    if (!request.contains("move")) throw HttpError{400, "bad_request", "missing \"move\""};
    const Move move = move_from_json(request.at("move"));
    const std::vector<Move> legal = legal_moves(position, variant);
    if (std::find(legal.begin(), legal.end(), move) == legal.end()) {
      throw HttpError{409, "illegal_move", "illegal move " + to_string(move),
                      {{"legal_moves", to_json(legal)}}};
    }
    const Position next = apply_move(position, move, variant);
    const bool terminal = is_terminal(next, variant);
    return {200,
            {{"variant", variant_name(variant)},
             {"move", to_json(move)},
             {"position", to_json(variant, next)},
             {"terminal", terminal},
             // Normal play: whoever must move at a terminal position loses.
             {"loser_if_terminal", terminal ? json("player_to_move") : json(nullptr)}}};
  });
}

ApiResponse handle_engine_move(Engine& engine, std::string_view body) {
  return guarded(body, [&](const json& request) -> ApiResponse {
    const auto [variant, position] = read_position(request);
    Solver& solver = engine.solver(variant);
    const std::vector<Move> legal = legal_moves(position, variant);
    if (legal.empty()) {
      throw HttpError{409, "terminal_position", "no legal move from a terminal position",
                      to_json(variant, position)};
    }
    const GrundyValue before = solver.grundy(position);
    const std::vector<Move> best = solver.best_moves(position);
    Move chosen = legal.front();
    if (!best.empty()) {
      chosen = best.front();
    } else {
      // Losing position: first move into the largest successor grundy.
      GrundyValue top = 0;
      bool first = true;
      for (const Move& m : legal) {
        const GrundyValue g = solver.grundy(apply_move(position, m, variant));
        if (first || g > top) {
          top = g;
          chosen = m;
          first = false;
        }
      }
    }
    const Position next = apply_move(position, chosen, variant);
    const GrundyValue after = solver.grundy(next);
    const bool terminal = is_terminal(next, variant);
    return {200,
            {{"variant", variant_name(variant)},
             {"move", to_json(chosen)},
             {"position", to_json(variant, next)},
             {"terminal", terminal},
             {"loser_if_terminal", terminal ? json("player_to_move") : json(nullptr)},
             {"annotation",
              {{"grundy_before", before}, {"grundy_after", after}, {"winning", !best.empty()}}}}};
  });
}

ApiResponse handle_heatmap(Engine& engine, std::string_view body, std::int32_t cap) {
  return guarded(body, [&](const json& request) -> ApiResponse {
    if (!request.contains("variant")) throw HttpError{400, "bad_request", "missing \"variant\""};
    if (!request.contains("fixed_piece")) {
      throw HttpError{400, "bad_request", "missing \"fixed_piece\""};
    }
    if (!request.contains("bound") || !request.at("bound").is_number_integer()) {
      throw HttpError{400, "bad_request", "\"bound\" must be an integer"};
    }
    const Variant variant = variant_from_json(request.at("variant"));
    const PieceState fixed = piece_from_json(request.at("fixed_piece"));
    const auto bound = request.at("bound").get<std::int64_t>();
    const std::int32_t lo = min_coordinate(variant);
    if (bound > cap) {
      throw HttpError{422, "bound_exceeded",
                      "bound " + std::to_string(bound) + " exceeds cap " + std::to_string(cap),
                      {{"cap", cap}}};
    }
    if (bound < lo) throw HttpError{422, "bound_exceeded", "bound below the board origin"};
    if ((fixed.is_dropped() && variant == Variant::Rook) ||
        (fixed.on_board() && (fixed.square().col < lo || fixed.square().row < lo))) {
      throw HttpError{422, "invalid_position", "fixed piece is not a legal piece state",
                      to_json(fixed)};
    }

    Solver& solver = engine.solver(variant);
    json cells = json::array();
    for (std::int32_t row = lo; row <= bound; ++row) {
      for (std::int32_t col = lo; col <= bound; ++col) {
        const Position p{fixed, PieceState::on(col, row)};
        if (!validate(p, variant)) continue;
        json cell = {{"col", col}, {"row", row}};
        if (auto closed = closed_form_outcome(p, variant)) {
          cell["outcome"] = outcome_str(*closed);
          cell["source"] = "closed-form";
        } else {
          cell["outcome"] = outcome_str(solver.outcome(p));
          cell["source"] = "solver-only";
        }
        cells.push_back(std::move(cell));
      }
    }
    return {200,
            {{"variant", variant_name(variant)},
             {"fixed_piece", to_json(fixed)},
             {"bound", bound},
             {"cells", std::move(cells)}}};
  });
}

struct Service::Impl {
  Impl(Engine& e, ServiceOptions o) : engine(e), options(std::move(o)) {}

  Engine& engine;
  ServiceOptions options;
  httplib::Server server;
  int port = -1;
};

Service::Service(Engine& engine, ServiceOptions options)
    : impl_(std::make_unique<Impl>(engine, std::move(options))) {
  auto& server = impl_->server;
  const std::string origin = impl_->options.cors_origin;

  // httplib's default adds SO_REUSEPORT, which lets a second server share a busy port.
  server.set_socket_options([](socket_t sock) {
    int yes = 1;
    setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, reinterpret_cast<const void*>(&yes), sizeof(yes));
  });

  auto route = [this](const char* path, auto handler) {
    impl_->server.Post(path, [this, handler](const httplib::Request& req, httplib::Response& res) {
      const ApiResponse r = handler(req.body);
      res.status = r.status;
      res.set_content(r.body.dump(), "application/json; charset=utf-8");
    });
  };
  route("/api/analyze", [this](std::string_view b) { return handle_analyze(impl_->engine, b); });
  route("/api/apply-move",
        [this](std::string_view b) { return handle_apply_move(impl_->engine, b); });
  route("/api/engine-move",
        [this](std::string_view b) { return handle_engine_move(impl_->engine, b); });
  route("/api/heatmap", [this](std::string_view b) {
    return handle_heatmap(impl_->engine, b, impl_->options.heatmap_cap);
  });

  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.status = 204;
  });
  server.set_post_routing_handler([origin](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", origin);
    res.set_header("Access-Control-Allow-Methods", "POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
  });
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return;
    const ApiResponse r = error_response(res.status, "not_found", "no such endpoint");
    res.set_content(r.body.dump(), "application/json; charset=utf-8");
  });
}

Service::~Service() { stop(); }

int Service::bind() {
  const ServiceOptions& o = impl_->options;
  if (o.port == 0) {
    impl_->port = impl_->server.bind_to_any_port(o.host);
  } else if (impl_->server.bind_to_port(o.host, o.port)) {
    impl_->port = o.port;
  } else {
    impl_->port = -1;
  }
  if (impl_->port < 0) {
    throw Error(ErrorCode::Bind, "cannot bind " + o.host + ":" + std::to_string(o.port));
  }
  return impl_->port;
}

void Service::run() {
  if (impl_->port < 0) throw Error(ErrorCode::Bind, "service is not bound");
  impl_->server.listen_after_bind();
}

void Service::stop() {
  if (impl_ && impl_->server.is_running()) impl_->server.stop();
}

int Service::port() const noexcept { return impl_->port; }

}  // namespace coinnim
