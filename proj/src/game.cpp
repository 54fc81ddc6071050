#include "coinnim/game.hpp"

#include <algorithm>
#include <tuple>

#include "coinnim/error.hpp"

namespace coinnim {

std::string_view variant_name(Variant v) noexcept {
  switch (v) {
    case Variant::Push:
      return "push";
    case Variant::JumpOnly:
      return "jump";
    case Variant::NoInteraction:
      return "free";
    case Variant::Rook:
      return "rook";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) noexcept {
  for (Variant v : kAllVariants) {
    if (variant_name(v) == name) return v;
  }
  return std::nullopt;
}

std::string_view push_rule_name(PushRule r) noexcept {
  switch (r) {
    case PushRule::SweepBothOff:
      return "sweep-both-off";
    case PushRule::PusherStopsAtEdge:
      return "pusher-stops-at-edge";
  }
  return "?";
}

std::optional<PushRule> parse_push_rule(std::string_view name) noexcept {
  for (PushRule r : kAllPushRules) {
    if (push_rule_name(r) == name) return r;
  }
  return std::nullopt;
}

namespace {

constexpr std::int32_t axis_of(Square s, Direction d) noexcept {
  return d == Direction::Left ? s.col : s.row;
}

constexpr std::int32_t cross_of(Square s, Direction d) noexcept {
  return d == Direction::Left ? s.row : s.col;
}

constexpr Square with_axis(Square s, Direction d, std::int32_t v) noexcept {
  if (d == Direction::Left) return {v, s.row};
  return {s.col, v};
}

// Destination rank inside one (piece, direction) group; off-board sorts last.
std::int64_t destination_rank(const Destination& d, Direction dir) noexcept {
  return d ? axis_of(*d, dir) : INT64_MAX;
}

// Emits legal moves in canonical order. Caller guarantees validate().
template <class Emit>
void generate(const Position& p, Ruleset rules, Emit&& emit) {
  const Capabilities caps = capabilities(rules.variant);
  const std::int32_t lo = min_coordinate(rules.variant);

  for (Piece mover : {Piece::A, Piece::B}) {
    const PieceState& self = p[mover];
    if (self.is_dropped()) continue;
    const PieceState& blocker = p[other(mover)];
    const Square from = self.square();

    for (Direction dir : {Direction::Left, Direction::Up}) {
      const std::int32_t start = axis_of(from, dir);
      const bool on_path = blocker.on_board() &&
                           cross_of(blocker.square(), dir) == cross_of(from, dir) &&
                           axis_of(blocker.square(), dir) < start;
      const std::int32_t block_at = on_path ? axis_of(blocker.square(), dir) : -1;

      for (std::int32_t d = lo; d < start; ++d) {
        Move m{mover, dir, with_axis(from, dir, d), std::nullopt};
        if (on_path && d <= block_at) {
          if (caps.can_push) {
            m.push = PushEffect{d - 1 >= lo ? Destination{with_axis(from, dir, d - 1)}
                                            : Destination{}};
          } else if (d == block_at && !caps.can_land_on) {
            continue;
          }
        }
        emit(m);
      }

      if (!caps.can_leave_board) continue;
      if (on_path && caps.can_push) {
        if (rules.push_rule == PushRule::SweepBothOff) {
          emit(Move{mover, dir, std::nullopt, PushEffect{std::nullopt}});
        }
      } else {
        emit(Move{mover, dir, std::nullopt, std::nullopt});
      }
    }
  }
}

Position apply_unchecked(const Position& p, const Move& m) noexcept {
  Position next = p;
  next[m.piece] = m.destination ? PieceState::on(*m.destination) : PieceState::dropped();
  if (m.push) {
    next[other(m.piece)] =
        m.push->other_new ? PieceState::on(*m.push->other_new) : PieceState::dropped();
  }
  return next;
}

void require_valid(const Position& p, Ruleset rules) {
  if (!validate(p, rules)) {
    throw Error(ErrorCode::MalformedPosition,
                "malformed position " + to_string(p) + " for variant " +
                    std::string(variant_name(rules.variant)));
  }
}

}  // namespace

bool move_order_less(const Move& lhs, const Move& rhs) noexcept {
  return std::tuple(lhs.piece, lhs.direction, destination_rank(lhs.destination, lhs.direction)) <
         std::tuple(rhs.piece, rhs.direction, destination_rank(rhs.destination, rhs.direction));
}

Move relabeled(const Move& m) noexcept {
  Move r = m;
  r.piece = other(m.piece);
  return r;
}

bool validate(const Position& p, Ruleset rules) noexcept {
  const std::int32_t lo = min_coordinate(rules.variant);
  for (const PieceState* s : {&p.a, &p.b}) {
    if (s->is_dropped()) {
      if (rules.variant == Variant::Rook) return false;
      continue;
    }
    if (s->square().col < lo || s->square().row < lo) return false;
  }
  if (p.a.on_board() && p.b.on_board() && p.a.square() == p.b.square()) {
    return capabilities(rules.variant).can_land_on;
  }
  return true;
}

std::vector<Move> legal_moves(const Position& p, Ruleset rules) {
  require_valid(p, rules);
  std::vector<Move> moves;
  generate(p, rules, [&](const Move& m) { moves.push_back(m); });
  return moves;
}

Position apply_move(const Position& p, const Move& m, Ruleset rules) {
  const std::vector<Move> moves = legal_moves(p, rules);
  if (std::find(moves.begin(), moves.end(), m) == moves.end()) {
    throw Error(ErrorCode::IllegalMove,
                "illegal move " + to_string(m) + " from " + to_string(p));
  }
  return apply_unchecked(p, m);
}

bool is_terminal(const Position& p, Ruleset rules) {
  require_valid(p, rules);
  bool any = false;
  generate(p, rules, [&](const Move&) { any = true; });
  return !any;
}

std::vector<Position> successors(const Position& p, Ruleset rules) {
  require_valid(p, rules);
  std::vector<Position> out;
  generate(p, rules, [&](const Move& m) { out.push_back(apply_unchecked(p, m)); });
  return out;
}

std::int64_t progress_measure(const Position& p) noexcept {
  std::int64_t sum = 0;
  for (const PieceState* s : {&p.a, &p.b}) {
    if (s->on_board()) sum += std::int64_t{s->square().col} + s->square().row;
  }
  return sum;
}

std::string to_string(const Square& s) {
  return "(" + std::to_string(s.col) + "," + std::to_string(s.row) + ")";
}

std::string to_string(const PieceState& s) {
  return s.on_board() ? to_string(s.square()) : std::string("dropped");
}

std::string to_string(const Position& p) {
  return "[" + to_string(p.a) + " " + to_string(p.b) + "]";
}

std::string to_string(const Move& m) {
  std::string out = m.piece == Piece::A ? "A" : "B";
  out += m.direction == Direction::Left ? " left→" : " up→";
  out += m.destination ? to_string(*m.destination) : std::string("off");
  if (m.push) {
    out += " push→";
    out += m.push->other_new ? to_string(*m.push->other_new) : std::string("off");
  }
  return out;
}

}  // namespace coinnim
