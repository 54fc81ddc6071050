#include "coinnim/coinnim.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>
#include <string>

#include "coinnim/closed_form.hpp"
#include "coinnim/error.hpp"
#include "coinnim/game.hpp"
#include "coinnim/json_io.hpp"
#include "coinnim/report.hpp"
#include "coinnim/service.hpp"
#include "coinnim/solver.hpp"
#include "coinnim/verifier.hpp"

struct coinnim_engine {
  coinnim::Engine engine;
};

struct coinnim_report {
  coinnim::DiscrepancyReport report;
};

struct coinnim_server {
  coinnim::Service service;
};

namespace {

thread_local std::string last_error;

coinnim_status fail(coinnim_status status, const std::string& message) {
  last_error = message;
  return status;
}

coinnim_status map_code(coinnim::ErrorCode code) {
  using coinnim::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument:
      return COINNIM_ERR_INVALID_ARGUMENT;
    case ErrorCode::MalformedPosition:
      return COINNIM_ERR_MALFORMED_POSITION;
    case ErrorCode::IllegalMove:
      return COINNIM_ERR_ILLEGAL_MOVE;
    case ErrorCode::NotApplicable:
      return COINNIM_ERR_NOT_APPLICABLE;
    case ErrorCode::Io:
      return COINNIM_ERR_IO;
    case ErrorCode::MemoCapExceeded:
      return COINNIM_ERR_MEMO_CAP;
    case ErrorCode::Bind:
      return COINNIM_ERR_BIND;
    case ErrorCode::Internal:
      break;
  }
  return COINNIM_ERR_INTERNAL;
}

template <class Body>
coinnim_status guarded(Body&& body) {
  try {
    body();
    return COINNIM_OK;
  } catch (const coinnim::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(COINNIM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(COINNIM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COINNIM_ERR_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw coinnim::Error(coinnim::ErrorCode::InvalidArgument, what);
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

coinnim::Variant to_variant(coinnim_variant v) {
  switch (v) {
    case COINNIM_VARIANT_PUSH:
      return coinnim::Variant::Push;
    case COINNIM_VARIANT_JUMP:
      return coinnim::Variant::JumpOnly;
    case COINNIM_VARIANT_FREE:
      return coinnim::Variant::NoInteraction;
    case COINNIM_VARIANT_ROOK:
      return coinnim::Variant::Rook;
  }
  throw coinnim::Error(coinnim::ErrorCode::InvalidArgument, "unknown variant");
}

coinnim_variant from_variant(coinnim::Variant v) {
  switch (v) {
    case coinnim::Variant::Push:
      return COINNIM_VARIANT_PUSH;
    case coinnim::Variant::JumpOnly:
      return COINNIM_VARIANT_JUMP;
    case coinnim::Variant::NoInteraction:
      return COINNIM_VARIANT_FREE;
    case coinnim::Variant::Rook:
      break;
  }
  return COINNIM_VARIANT_ROOK;
}

coinnim::PushRule to_push_rule(coinnim_push_rule r) {
  switch (r) {
    case COINNIM_PUSH_SWEEP_BOTH_OFF:
      return coinnim::PushRule::SweepBothOff;
    case COINNIM_PUSH_PUSHER_STOPS_AT_EDGE:
      return coinnim::PushRule::PusherStopsAtEdge;
  }
  throw coinnim::Error(coinnim::ErrorCode::InvalidArgument, "unknown push rule");
}

coinnim::PieceState to_piece(const coinnim_piece& p) {
  return p.dropped ? coinnim::PieceState::dropped() : coinnim::PieceState::on(p.col, p.row);
}

coinnim_piece from_piece(const coinnim::PieceState& s) {
  if (s.is_dropped()) return {0, 0, 1};
  return {s.square().col, s.square().row, 0};
}

coinnim::Position to_position(const coinnim_position& p) {
  return {to_piece(p.pieces[0]), to_piece(p.pieces[1])};
}

coinnim_position from_position(coinnim::Variant v, const coinnim::Position& p) {
  return {from_variant(v), {from_piece(p.a), from_piece(p.b)}};
}

coinnim::Move to_move(const coinnim_move& m) {
  coinnim::Move out;
  out.piece = m.piece == 0 ? coinnim::Piece::A : coinnim::Piece::B;
  out.direction = m.direction == 0 ? coinnim::Direction::Left : coinnim::Direction::Up;
  if (!m.off_board) out.destination = coinnim::Square{m.col, m.row};
  if (m.has_push) {
    out.push = coinnim::PushEffect{};
    if (!m.push_off_board) out.push->other_new = coinnim::Square{m.push_col, m.push_row};
  }
  return out;
}

coinnim_move from_move(const coinnim::Move& m) {
  coinnim_move out{};
  out.piece = m.piece == coinnim::Piece::A ? 0 : 1;
  out.direction = m.direction == coinnim::Direction::Left ? 0 : 1;
  out.off_board = m.destination ? 0 : 1;
  if (m.destination) {
    out.col = m.destination->col;
    out.row = m.destination->row;
  }
  if (m.push) {
    out.has_push = 1;
    out.push_off_board = m.push->other_new ? 0 : 1;
    if (m.push->other_new) {
      out.push_col = m.push->other_new->col;
      out.push_row = m.push->other_new->row;
    }
  }
  return out;
}

coinnim_status write_moves(const std::vector<coinnim::Move>& moves, coinnim_move* buffer,
                           size_t capacity, size_t* count) {
  *count = moves.size();
  const size_t n = std::min(capacity, moves.size());
  if (n > 0) require(buffer != nullptr, "null move buffer");
  for (size_t i = 0; i < n; ++i) buffer[i] = from_move(moves[i]);
  if (capacity < moves.size()) {
    return fail(COINNIM_ERR_BUFFER_TOO_SMALL,
                "move buffer holds " + std::to_string(capacity) + " of " +
                    std::to_string(moves.size()) + " moves");
  }
  return COINNIM_OK;
}

}  // namespace

extern "C" {

const char* coinnim_version(void) { return "1.0.0"; }

const char* coinnim_last_error(void) { return last_error.c_str(); }

void coinnim_string_free(char* s) { std::free(s); }

const char* coinnim_variant_name(coinnim_variant v) {
  switch (v) {
    case COINNIM_VARIANT_PUSH:
      return "push";
    case COINNIM_VARIANT_JUMP:
      return "jump";
    case COINNIM_VARIANT_FREE:
      return "free";
    case COINNIM_VARIANT_ROOK:
      return "rook";
  }
  return "?";
}

coinnim_status coinnim_parse_variant(const char* name, coinnim_variant* out) {
  return guarded([&] {
    require(name && out, "null argument");
    auto v = coinnim::parse_variant(name);
    if (!v) {
      throw coinnim::Error(coinnim::ErrorCode::InvalidArgument,
                           std::string("unknown variant \"") + name +
                               "\" (expected rook|push|jump|free)");
    }
    *out = from_variant(*v);
  });
}

coinnim_status coinnim_engine_create(size_t memo_cap, coinnim_engine** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    coinnim::SolverOptions options;
    options.memo_cap = memo_cap;
    *out = new coinnim_engine{coinnim::Engine(options)};
  });
}

void coinnim_engine_destroy(coinnim_engine* engine) { delete engine; }

coinnim_status coinnim_position_from_json(const char* json, coinnim_position* out) {
  return guarded([&] {
    require(json && out, "null argument");
    const auto parsed = nlohmann::json::parse(json);
    const coinnim::VariantPosition vp = coinnim::position_from_json(parsed);
    *out = from_position(vp.variant, vp.position);
  });
}

coinnim_status coinnim_position_from_json_as(const char* json, coinnim_variant variant,
                                            coinnim_position* out) {
  return guarded([&] {
    require(json && out, "null argument");
    auto parsed = nlohmann::json::parse(json);
    const coinnim::Variant v = to_variant(variant);
    if (parsed.is_object() && !parsed.contains("variant")) parsed["variant"] = coinnim::variant_name(v);
    const coinnim::VariantPosition vp = coinnim::position_from_json(parsed);
    require(vp.variant == v, "position JSON names a different variant");
    *out = from_position(vp.variant, vp.position);
  });
}

coinnim_status coinnim_position_from_shorthand(coinnim_variant variant, const char* text,
                                               coinnim_position* out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = from_position(to_variant(variant), coinnim::parse_shorthand(text));
  });
}

coinnim_status coinnim_position_to_json(const coinnim_position* pos, char** out) {
  return guarded([&] {
    require(pos && out, "null argument");
    *out = duplicate(coinnim::to_json(to_variant(pos->variant), to_position(*pos)).dump());
  });
}

int coinnim_validate(const coinnim_position* pos) {
  if (!pos) return 0;
  try {
    return coinnim::validate(to_position(*pos), to_variant(pos->variant)) ? 1 : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

coinnim_status coinnim_legal_moves(const coinnim_position* pos, coinnim_move* moves,
                                   size_t capacity, size_t* count) {
  coinnim_status status = COINNIM_OK;
  const coinnim_status thrown = guarded([&] {
    require(pos && count, "null argument");
    status = write_moves(coinnim::legal_moves(to_position(*pos), to_variant(pos->variant)),
                         moves, capacity, count);
  });
  return thrown != COINNIM_OK ? thrown : status;
}

coinnim_status coinnim_apply_move(const coinnim_position* pos, const coinnim_move* move,
                                  coinnim_position* out) {
  return guarded([&] {
    require(pos && move && out, "null argument");
    const coinnim::Variant v = to_variant(pos->variant);
    *out = from_position(v, coinnim::apply_move(to_position(*pos), to_move(*move), v));
  });
}

coinnim_status coinnim_is_terminal(const coinnim_position* pos, int* out) {
  return guarded([&] {
    require(pos && out, "null argument");
    *out = coinnim::is_terminal(to_position(*pos), to_variant(pos->variant)) ? 1 : 0;
  });
}

coinnim_status coinnim_move_to_string(const coinnim_move* move, char** out) {
  return guarded([&] {
    require(move && out, "null argument");
    *out = duplicate(coinnim::to_string(to_move(*move)));
  });
}

coinnim_status coinnim_grundy(coinnim_engine* engine, const coinnim_position* pos, uint32_t* out) {
  return guarded([&] {
    require(engine && pos && out, "null argument");
    *out = engine->engine.solver(to_variant(pos->variant)).grundy(to_position(*pos));
  });
}

coinnim_status coinnim_best_moves(coinnim_engine* engine, const coinnim_position* pos,
                                  coinnim_move* moves, size_t capacity, size_t* count) {
  coinnim_status status = COINNIM_OK;
  const coinnim_status thrown = guarded([&] {
    require(engine && pos && count, "null argument");
    status = write_moves(
        engine->engine.solver(to_variant(pos->variant)).best_moves(to_position(*pos)), moves,
        capacity, count);
  });
  return thrown != COINNIM_OK ? thrown : status;
}

coinnim_status coinnim_classify(const coinnim_position* pos, coinnim_classification* out) {
  return guarded([&] {
    require(pos && out, "null argument");
    const coinnim::Variant v = to_variant(pos->variant);
    const coinnim::Position p = to_position(*pos);
    if (!coinnim::validate(p, v)) {
      throw coinnim::Error(coinnim::ErrorCode::MalformedPosition,
                           "malformed position " + coinnim::to_string(p));
    }
    const coinnim::Classification c = coinnim::classify(p, v);
    *out = {c.applicable, c.nim_sum, c.in_p0, c.in_p1, c.in_n0, c.in_terminal_set, c.p_position};
    if (!c.applicable) {
      throw coinnim::Error(coinnim::ErrorCode::NotApplicable,
                           v == coinnim::Variant::NoInteraction
                               ? "the free variant has no P-set classifier"
                               : "classifier defined on two-on-board states only");
    }
  });
}

coinnim_status coinnim_verify(coinnim_engine* engine, const coinnim_sweep_spec* spec,
                              coinnim_report** out) {
  return guarded([&] {
    require(engine && spec && out, "null argument");
    coinnim::Engine& e = engine->engine;
    const coinnim::Variant v = to_variant(spec->variant);
    const coinnim::PushRule rule = to_push_rule(spec->push_rule);
    coinnim::DiscrepancyReport report;
    switch (spec->check) {
      case COINNIM_CHECK_VARIANT:
        report = coinnim::verify_variant(
            e, {v, spec->bound, spec->include_dropped_states != 0, rule});
        break;
      case COINNIM_CHECK_CORRESPONDENCE:
        report = coinnim::verify_correspondence(e, spec->bound);
        break;
      case COINNIM_CHECK_DROP_LOSING:
        report = coinnim::verify_drop_losing(e, spec->bound, v, rule);
        break;
      case COINNIM_CHECK_SUM:
        report = coinnim::verify_sum_theorem(e, spec->bound);
        break;
      case COINNIM_CHECK_LOCAL_LAW:
        report = coinnim::verify_local_law(spec->bound);
        break;
      default:
        require(false, "unknown check");
    }
    *out = new coinnim_report{std::move(report)};
  });
}

void coinnim_report_destroy(coinnim_report* report) { delete report; }

uint64_t coinnim_report_total(const coinnim_report* report) {
  return report ? report->report.total : 0;
}

size_t coinnim_report_mismatch_count(const coinnim_report* report) {
  return report ? report->report.mismatches.size() : 0;
}

coinnim_status coinnim_report_render(const coinnim_report* report, coinnim_format format,
                                     char** out) {
  return guarded([&] {
    require(report && out, "null argument");
    std::ostringstream s;
    switch (format) {
      case COINNIM_FORMAT_JSON:
        s << coinnim::to_json(report->report).dump(2) << '\n';
        break;
      case COINNIM_FORMAT_CSV:
        coinnim::write_csv(report->report, s);
        break;
      case COINNIM_FORMAT_TEXT:
        coinnim::write_text(report->report, s);
        break;
      default:
        require(false, "unknown format");
    }
    *out = duplicate(s.str());
  });
}

coinnim_status coinnim_calibrate_push(coinnim_engine* engine, int32_t bound,
                                      coinnim_push_rule* selected, int* found,
                                      char** summary_json) {
  return guarded([&] {
    require(engine && selected && found, "null argument");
    const coinnim::PushCalibration c = coinnim::calibrate_push(engine->engine, bound);
    *found = c.selected ? 1 : 0;
    *selected = c.selected && *c.selected == coinnim::PushRule::PusherStopsAtEdge
                    ? COINNIM_PUSH_PUSHER_STOPS_AT_EDGE
                    : COINNIM_PUSH_SWEEP_BOTH_OFF;
    if (summary_json) *summary_json = duplicate(coinnim::to_json(c).dump(2) + "\n");
  });
}

coinnim_status coinnim_export_table(coinnim_engine* engine, coinnim_variant variant,
                                    int32_t bound, char** csv) {
  return guarded([&] {
    require(engine && csv, "null argument");
    std::ostringstream s;
    coinnim::export_table(engine->engine, to_variant(variant), bound, s);
    *csv = duplicate(s.str());
  });
}

coinnim_status coinnim_server_create(coinnim_engine* engine, const coinnim_server_options* options,
                                     coinnim_server** out) {
  return guarded([&] {
    require(engine && out, "null argument");
    coinnim::ServiceOptions o;
    if (options) {
      if (options->host) o.host = options->host;
      o.port = options->port;
      if (options->heatmap_cap > 0) o.heatmap_cap = options->heatmap_cap;
      if (options->cors_origin) o.cors_origin = options->cors_origin;
    }
    require(o.port >= 0 && o.port <= 65535, "port out of range");
    auto* server = new coinnim_server{coinnim::Service(engine->engine, o)};
    try {
      server->service.bind();
    } catch (...) {
      delete server;
      throw;
    }
    *out = server;
  });
}

int32_t coinnim_server_port(const coinnim_server* server) {
  return server ? server->service.port() : -1;
}

coinnim_status coinnim_server_run(coinnim_server* server) {
  return guarded([&] {
    require(server != nullptr, "null argument");
    server->service.run();
  });
}

void coinnim_server_stop(coinnim_server* server) {
  if (server) server->service.stop();
}

void coinnim_server_destroy(coinnim_server* server) { delete server; }

}  // extern "C"
