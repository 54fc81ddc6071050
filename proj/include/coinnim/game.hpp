#pragma once

// Positions and move generation for the two-piece sliding games.
//
// Four rulesets share one representation. Pieces move strictly left
// (decreasing col) or strictly up (decreasing row) any distance.
//
//   Rook           0-based board, pieces never leave it, may jump over the
//                  other piece but never land on it.
//   JumpOnly       1-based board, a coin may leave the board (it is then
//                  Dropped for good), jumping over allowed, landing on not.
//   NoInteraction  as JumpOnly but landing on the other coin is allowed too,
//                  so the coins form a disjunctive sum of two single coins.
//   Push           1-based board, no jumping; a coin that reaches the other
//                  coin drives it ahead, and pushing it past the edge drops it.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coinnim {

enum class Variant : std::uint8_t { Push, JumpOnly, NoInteraction, Rook };

inline constexpr std::array<Variant, 4> kAllVariants = {
    Variant::Push, Variant::JumpOnly, Variant::NoInteraction, Variant::Rook};

struct Capabilities {
  bool can_leave_board;
  bool can_jump_over;
  bool can_land_on;
  bool can_push;

  friend constexpr bool operator==(const Capabilities&, const Capabilities&) = default;
};

constexpr Capabilities capabilities(Variant v) noexcept {
  switch (v) {
    case Variant::Push:
      return {true, false, false, true};
    case Variant::JumpOnly:
      return {true, true, false, false};
    case Variant::NoInteraction:
      return {true, true, true, false};
    case Variant::Rook:
      return {false, true, false, false};
  }
  return {};
}

/// Smallest on-board coordinate: rooks live on 0.., coins on 1.. (leaving the
/// board is the Dropped state, never coordinate 0).
constexpr std::int32_t min_coordinate(Variant v) noexcept {
  return v == Variant::Rook ? 0 : 1;
}

/// Wire names: push, jump, free, rook.
std::string_view variant_name(Variant v) noexcept;
std::optional<Variant> parse_variant(std::string_view name) noexcept;

/// Readings of what happens when a pushing coin's own destination is off the
/// board. SweepBothOff is the documented rule; PusherStopsAtEdge exists for
/// the push calibration sweep.
enum class PushRule : std::uint8_t { SweepBothOff, PusherStopsAtEdge };

inline constexpr std::array<PushRule, 2> kAllPushRules = {PushRule::SweepBothOff,
                                                          PushRule::PusherStopsAtEdge};

std::string_view push_rule_name(PushRule r) noexcept;
std::optional<PushRule> parse_push_rule(std::string_view name) noexcept;

struct Ruleset {
  Variant variant;
  PushRule push_rule = PushRule::SweepBothOff;

  constexpr Ruleset(Variant v, PushRule r = PushRule::SweepBothOff) noexcept  // NOLINT
      : variant(v), push_rule(r) {}

  friend constexpr bool operator==(const Ruleset&, const Ruleset&) = default;
};

struct Square {
  std::int32_t col = 0;
  std::int32_t row = 0;

  friend constexpr auto operator<=>(const Square&, const Square&) = default;
};

class PieceState {
 public:
  constexpr PieceState() noexcept = default;

  static constexpr PieceState on(Square s) noexcept { return PieceState(false, s); }
  static constexpr PieceState on(std::int32_t col, std::int32_t row) noexcept {
    return on(Square{col, row});
  }
  static constexpr PieceState dropped() noexcept { return PieceState(true, {}); }

  constexpr bool on_board() const noexcept { return !dropped_; }
  constexpr bool is_dropped() const noexcept { return dropped_; }
  // Only meaningful when on_board().
  constexpr Square square() const noexcept { return square_; }

  // On-board pieces order before dropped ones.
  friend constexpr auto operator<=>(const PieceState&, const PieceState&) = default;

 private:
  constexpr PieceState(bool dropped, Square s) noexcept : dropped_(dropped), square_(s) {}

  bool dropped_ = true;
  Square square_{};
};

enum class Piece : std::uint8_t { A, B };
enum class Direction : std::uint8_t { Left, Up };

constexpr Piece other(Piece p) noexcept { return p == Piece::A ? Piece::B : Piece::A; }

struct Position {
  PieceState a;
  PieceState b;

  constexpr const PieceState& operator[](Piece p) const noexcept {
    return p == Piece::A ? a : b;
  }
  constexpr PieceState& operator[](Piece p) noexcept { return p == Piece::A ? a : b; }

  constexpr Position swapped() const noexcept { return {b, a}; }

  friend constexpr auto operator<=>(const Position&, const Position&) = default;
};

/// Both pieces on board: a at (c1, r1), b at (c2, r2).
constexpr Position make_position(std::int32_t c1, std::int32_t r1, std::int32_t c2,
                                 std::int32_t r2) noexcept {
  return {PieceState::on(c1, r1), PieceState::on(c2, r2)};
}

/// nullopt means off the board.
using Destination = std::optional<Square>;

struct PushEffect {
  Destination other_new;

  friend constexpr bool operator==(const PushEffect&, const PushEffect&) = default;
};

struct Move {
  Piece piece = Piece::A;
  Direction direction = Direction::Left;
  Destination destination;
  std::optional<PushEffect> push;

  friend constexpr bool operator==(const Move&, const Move&) = default;
};

/// Legal-move order: piece A before B, Left before Up, ascending destination,
/// off-board last.
bool move_order_less(const Move& lhs, const Move& rhs) noexcept;

/// Move with A and B exchanged.
Move relabeled(const Move& m) noexcept;

bool validate(const Position& p, Ruleset rules) noexcept;

/// Throws Error{MalformedPosition} when !validate(p, rules).
std::vector<Move> legal_moves(const Position& p, Ruleset rules);

/// Throws Error{IllegalMove} unless m is in legal_moves(p, rules).
Position apply_move(const Position& p, const Move& m, Ruleset rules);

bool is_terminal(const Position& p, Ruleset rules);

/// Successor positions in legal-move order, without per-move legality checks.
std::vector<Position> successors(const Position& p, Ruleset rules);

/// Sum of on-board coordinates; every legal move strictly decreases it.
std::int64_t progress_measure(const Position& p) noexcept;

std::string to_string(const Square& s);
std::string to_string(const PieceState& s);
std::string to_string(const Position& p);
/// e.g. "A left→(2,1)", "A left→(1,1) push→off", "B up→off".
std::string to_string(const Move& m);

}  // namespace coinnim
