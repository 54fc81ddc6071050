#pragma once

// Wire formats shared by the CLI, the C API, and the HTTP service.
//
//   position: {"variant":"rook|push|jump|free",
//              "pieces":[{"col":C,"row":R} | {"dropped":true}, ...two entries...]}
//   move:     {"piece":"A|B","direction":"left|up",
//              "to":{"col":C,"row":R} | {"off_board":true},
//              "push":{"col":C,"row":R} | {"off_board":true}}   (push optional)

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "coinnim/game.hpp"

namespace coinnim {

struct VariantPosition {
  Variant variant = Variant::Rook;
  Position position;
};

/// Parsing functions throw Error{InvalidArgument} on structural problems.
/// They do not check the position against the variant's rules.
Variant variant_from_json(const nlohmann::json& j);
PieceState piece_from_json(const nlohmann::json& j);
Position pieces_from_json(const nlohmann::json& pieces);
VariantPosition position_from_json(const nlohmann::json& j);
Move move_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PieceState& s);
nlohmann::json to_json(Variant v, const Position& p);
nlohmann::json to_json(const Move& m);
nlohmann::json to_json(const std::vector<Move>& moves);

/// "w,x,y,z" or two "col,row" groups separated by whitespace, all on board.
Position parse_shorthand(std::string_view text);

}  // namespace coinnim
