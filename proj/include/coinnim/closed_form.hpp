#pragma once

// Constant-time membership tests for the named position sets.
//
// Coin games use 1-based tuples (w,x,y,z): one coin at column w row x, the
// other at column y row z. The rook game uses 0-based tuples (x,y,z,w): one
// rook at (x,y), the other at (z,w). Only two-on-board states are classified.

#include <cstdint>
#include <optional>

#include "coinnim/game.hpp"
#include "coinnim/solver.hpp"

namespace coinnim {

/// Throws Error{NotApplicable} if any coordinate is below 1 and
/// Error{InvalidArgument} if the two coins coincide.
class CoinTuple {
 public:
  CoinTuple(std::int32_t w, std::int32_t x, std::int32_t y, std::int32_t z);
  /// Throws Error{NotApplicable} unless both pieces are on board.
  static CoinTuple from(const Position& p);

  std::int32_t w, x, y, z;
};

/// Throws Error{InvalidArgument} on a negative coordinate or coinciding rooks.
class RookTuple {
 public:
  RookTuple(std::int32_t x, std::int32_t y, std::int32_t z, std::int32_t w);
  static RookTuple from(const Position& p);

  std::int32_t x, y, z, w;
};

/// (w-1)^(x-1)^(y-1)^(z-1)
std::int32_t shifted_nim_sum(const CoinTuple& t) noexcept;
/// x^y^z^w
std::int32_t nim_sum(const RookTuple& t) noexcept;

bool push_p_position(const CoinTuple& t) noexcept;

bool coin_in_p0(const CoinTuple& t) noexcept;
bool coin_in_p1(const CoinTuple& t) noexcept;
bool coin_in_n0(const CoinTuple& t) noexcept;
/// (P0 ∪ P1) − N0
bool coin_nopush_p_position(const CoinTuple& t) noexcept;

bool rook_in_p1(const RookTuple& t) noexcept;
bool rook_in_n0(const RookTuple& t) noexcept;
/// ({nim sum 0} ∪ P1) − N0
bool rook_p_position(const RookTuple& t) noexcept;
/// The four jammed corner positions.
bool in_terminal_set(const RookTuple& t) noexcept;

/// Per-set membership for one position, as reported by `classify`.
struct Classification {
  Variant variant = Variant::Rook;
  bool applicable = false;
  std::int32_t nim_sum = 0;  // shifted for coin games
  bool in_p0 = false;        // jump only
  bool in_p1 = false;        // jump, rook
  bool in_n0 = false;        // jump, rook
  bool in_terminal_set = false;  // rook only
  bool p_position = false;
};

/// Never throws for a valid position; applicable is false for the free
/// variant and for states with a dropped piece.
Classification classify(const Position& p, Variant v);

/// Closed-form outcome where a classifier exists.
std::optional<Outcome> closed_form_outcome(const Position& p, Variant v);

}  // namespace coinnim
