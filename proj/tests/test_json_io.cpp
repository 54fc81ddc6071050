#include <doctest.h>

#include "coinnim/error.hpp"
#include "coinnim/json_io.hpp"

using namespace coinnim;
using nlohmann::json;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("position JSON round-trips") {
  const json j = json::parse(R"({"variant":"jump","pieces":[{"col":3,"row":1},{"dropped":true}]})");
  const VariantPosition vp = position_from_json(j);
  CHECK(vp.variant == Variant::JumpOnly);
  CHECK(vp.position.a == PieceState::on(3, 1));
  CHECK(vp.position.b.is_dropped());
  CHECK(to_json(vp.variant, vp.position) == j);

  CHECK(piece_from_json(json::parse(R"({"dropped":false,"col":2,"row":5})")) == PieceState::on(2, 5));
}

TEST_CASE("move JSON round-trips") {
  const Move plain{Piece::B, Direction::Up, Square{4, 0}, std::nullopt};
  const Move push{Piece::A, Direction::Left, Square{1, 1}, PushEffect{std::nullopt}};
  const Move off{Piece::A, Direction::Left, std::nullopt, std::nullopt};
  for (const Move& m : {plain, push, off}) CHECK(move_from_json(to_json(m)) == m);

  CHECK(to_json(push) ==
        json::parse(R"({"piece":"A","direction":"left","to":{"col":1,"row":1},"push":{"off_board":true}})"));
  CHECK(move_from_json(json::parse(R"({"piece":"B","direction":"up","to":{"col":4,"row":0},"push":null})")) ==
        plain);
  CHECK(to_json(std::vector<Move>{}) == json::array());
}

TEST_CASE("structural errors are invalid arguments") {
  auto parse_pos = [](const char* text) { return [text] { position_from_json(json::parse(text)); }; };
  CHECK(code_of(parse_pos(R"({"pieces":[{"col":1,"row":1},{"col":2,"row":2}]})")) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of(parse_pos(R"({"variant":"queen","pieces":[{"col":1,"row":1},{"col":2,"row":2}]})")) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of(parse_pos(R"({"variant":"rook","pieces":[{"col":1,"row":1}]})")) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of(parse_pos(R"({"variant":"rook","pieces":[{"col":1.5,"row":1},{"col":2,"row":2}]})")) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of(parse_pos(R"({"variant":"rook","pieces":[{"col":1,"row":9999999999},{"col":2,"row":2}]})")) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of(parse_pos(R"([1,2,3,4])")) == ErrorCode::InvalidArgument);

  auto parse_move = [](const char* text) { return [text] { move_from_json(json::parse(text)); }; };
  CHECK(code_of(parse_move(R"({"piece":"C","direction":"up","to":{"off_board":true}})")) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of(parse_move(R"({"piece":"A","direction":"down","to":{"off_board":true}})")) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of(parse_move(R"({"piece":"A","direction":"up"})")) == ErrorCode::InvalidArgument);
}

TEST_CASE("parsing does not apply the variant rules") {
  // coincident jump coins parse fine; validate() is the rules check
  const VariantPosition vp = position_from_json(
      json::parse(R"({"variant":"jump","pieces":[{"col":2,"row":3},{"col":2,"row":3}]})"));
  CHECK_FALSE(validate(vp.position, vp.variant));
}

TEST_CASE("shorthand positions") {
  CHECK(parse_shorthand("0,0,1,1") == make_position(0, 0, 1, 1));
  CHECK(parse_shorthand("3,2 5,2") == make_position(3, 2, 5, 2));
  CHECK(parse_shorthand(" 1 1 1 2 ") == make_position(1, 1, 1, 2));
  CHECK(code_of([] { parse_shorthand("1,2,3"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_shorthand("1,2,x,4"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { parse_shorthand("1,2,3,4,5"); }) == ErrorCode::InvalidArgument);
}
