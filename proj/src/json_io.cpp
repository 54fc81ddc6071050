#include "coinnim/json_io.hpp"

#include <charconv>
#include <limits>

#include "coinnim/error.hpp"

namespace coinnim {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); }

std::int32_t coordinate(const nlohmann::json& j, const char* key) {
  if (!j.contains(key)) bad(std::string("missing \"") + key + "\"");
  const nlohmann::json& v = j.at(key);
  if (!v.is_number_integer()) bad(std::string("\"") + key + "\" must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < std::numeric_limits<std::int32_t>::min() ||
      value > std::numeric_limits<std::int32_t>::max()) {
    bad(std::string("\"") + key + "\" out of range");
  }
  return static_cast<std::int32_t>(value);
}

Destination destination_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("destination must be an object");
  if (j.value("off_board", false)) return std::nullopt;
  return Square{coordinate(j, "col"), coordinate(j, "row")};
}

nlohmann::json destination_to_json(const Destination& d) {
  if (!d) return {{"off_board", true}};
  return {{"col", d->col}, {"row", d->row}};
}

}  // namespace

Variant variant_from_json(const nlohmann::json& j) {
  if (!j.is_string()) bad("\"variant\" must be a string");
  auto v = parse_variant(j.get<std::string>());
  if (!v) bad("unknown variant \"" + j.get<std::string>() + "\" (expected rook|push|jump|free)");
  return *v;
}

PieceState piece_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("piece must be an object");
  if (j.contains("dropped")) {
    if (!j.at("dropped").is_boolean()) bad("\"dropped\" must be a boolean");
    if (j.at("dropped").get<bool>()) return PieceState::dropped();
  }
  return PieceState::on(coordinate(j, "col"), coordinate(j, "row"));
}

Position pieces_from_json(const nlohmann::json& pieces) {
  if (!pieces.is_array() || pieces.size() != 2) bad("\"pieces\" must be an array of two pieces");
  return {piece_from_json(pieces[0]), piece_from_json(pieces[1])};
}

VariantPosition position_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("position must be an object");
  if (!j.contains("variant")) bad("missing \"variant\"");
  if (!j.contains("pieces")) bad("missing \"pieces\"");
  return {variant_from_json(j.at("variant")), pieces_from_json(j.at("pieces"))};
}

Move move_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad("move must be an object");
  Move m;
  const std::string piece = j.value("piece", "");
  if (piece == "A") {
    m.piece = Piece::A;
  } else if (piece == "B") {
    m.piece = Piece::B;
  } else {
    bad("\"piece\" must be \"A\" or \"B\"");
  }
  const std::string dir = j.value("direction", "");
  if (dir == "left") {
    m.direction = Direction::Left;
  } else if (dir == "up") {
    m.direction = Direction::Up;
  } else {
    bad("\"direction\" must be \"left\" or \"up\"");
  }
  if (!j.contains("to")) bad("missing \"to\"");
  m.destination = destination_from_json(j.at("to"));
  if (j.contains("push") && !j.at("push").is_null()) {
    m.push = PushEffect{destination_from_json(j.at("push"))};
  }
  return m;
}

nlohmann::json to_json(const PieceState& s) {
  if (s.is_dropped()) return {{"dropped", true}};
  return {{"col", s.square().col}, {"row", s.square().row}};
}

nlohmann::json to_json(Variant v, const Position& p) {
  return {{"variant", variant_name(v)}, {"pieces", {to_json(p.a), to_json(p.b)}}};
}

nlohmann::json to_json(const Move& m) {
  nlohmann::json j = {
      {"piece", m.piece == Piece::A ? "A" : "B"},
      {"direction", m.direction == Direction::Left ? "left" : "up"},
      {"to", destination_to_json(m.destination)},
  };
  if (m.push) j["push"] = destination_to_json(m.push->other_new);
  return j;
}

nlohmann::json to_json(const std::vector<Move>& moves) {
  nlohmann::json out = nlohmann::json::array();
  for (const Move& m : moves) out.push_back(to_json(m));
  return out;
}

Position parse_shorthand(std::string_view text) {
  std::vector<std::int32_t> values;
  const char* it = text.data();
  const char* end = text.data() + text.size();
  while (it < end) {
    if (*it == ',' || *it == ' ' || *it == '\t') {
      ++it;
      continue;
    }
    std::int32_t v = 0;
    auto [next, ec] = std::from_chars(it, end, v);
    if (ec != std::errc{}) bad("bad coordinate list \"" + std::string(text) + "\"");
    values.push_back(v);
    it = next;
  }
  if (values.size() != 4) {
    bad("shorthand needs four on-board coordinates w,x,y,z; use JSON for dropped pieces");
  }
  return make_position(values[0], values[1], values[2], values[3]);
}

}  // namespace coinnim
