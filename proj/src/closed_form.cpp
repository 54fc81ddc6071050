#include "coinnim/closed_form.hpp"

#include <string>

#include "coinnim/error.hpp"

namespace coinnim {

namespace {

constexpr bool even(std::int32_t v) noexcept { return v % 2 == 0; }
constexpr bool odd(std::int32_t v) noexcept { return v % 2 != 0; }

}  // namespace

CoinTuple::CoinTuple(std::int32_t w_, std::int32_t x_, std::int32_t y_, std::int32_t z_)
    : w(w_), x(x_), y(y_), z(z_) {
  if (w < 1 || x < 1 || y < 1 || z < 1) {
    throw Error(ErrorCode::NotApplicable, "classifier defined on two-on-board states only");
  }
  if (w == y && x == z) {
    throw Error(ErrorCode::InvalidArgument, "coins coincide");
  }
}

CoinTuple CoinTuple::from(const Position& p) {
  if (p.a.is_dropped() || p.b.is_dropped()) {
    throw Error(ErrorCode::NotApplicable, "classifier defined on two-on-board states only");
  }
  return {p.a.square().col, p.a.square().row, p.b.square().col, p.b.square().row};
}

RookTuple::RookTuple(std::int32_t x_, std::int32_t y_, std::int32_t z_, std::int32_t w_)
    : x(x_), y(y_), z(z_), w(w_) {
  if (x < 0 || y < 0 || z < 0 || w < 0) {
    throw Error(ErrorCode::InvalidArgument, "rook coordinates must be nonnegative");
  }
  if (x == z && y == w) {
    throw Error(ErrorCode::InvalidArgument, "rooks coincide");
  }
}

RookTuple RookTuple::from(const Position& p) {
  if (p.a.is_dropped() || p.b.is_dropped()) {
    throw Error(ErrorCode::InvalidArgument, "rooks never leave the board");
  }
  return {p.a.square().col, p.a.square().row, p.b.square().col, p.b.square().row};
}

std::int32_t shifted_nim_sum(const CoinTuple& t) noexcept {
  return (t.w - 1) ^ (t.x - 1) ^ (t.y - 1) ^ (t.z - 1);
}

std::int32_t nim_sum(const RookTuple& t) noexcept { return t.x ^ t.y ^ t.z ^ t.w; }

bool push_p_position(const CoinTuple& t) noexcept { return shifted_nim_sum(t) == 0; }

bool coin_in_p0(const CoinTuple& t) noexcept { return shifted_nim_sum(t) == 0; }

// n, m, w, x range over 1, 2, 3, ...
bool coin_in_p1(const CoinTuple& t) noexcept {
  const auto [w, x, y, z] = t;
  // (w, 2n-1, w, 2n)
  if (w == y && odd(x) && z == x + 1) return true;
  // (w, 2n, w, 2n-1)
  if (w == y && even(x) && z == x - 1) return true;
  // (2n-1, x, 2n, x)
  if (x == z && odd(w) && y == w + 1) return true;
  // (2n, x, 2n-1, x)
  if (x == z && even(w) && y == w - 1) return true;
  return false;
}

bool coin_in_n0(const CoinTuple& t) noexcept {
  const auto [w, x, y, z] = t;
  // (2m, 2n, 2m-1, 2n-1)
  if (even(w) && even(x) && y == w - 1 && z == x - 1) return true;
  // (2m, 2n-1, 2m-1, 2n)
  if (even(w) && odd(x) && y == w - 1 && z == x + 1) return true;
  // (2m-1, 2n-1, 2m, 2n)
  if (odd(w) && odd(x) && y == w + 1 && z == x + 1) return true;
  // (2m-1, 2n, 2m, 2n-1)
  if (odd(w) && even(x) && y == w + 1 && z == x - 1) return true;
  return false;
}

bool coin_nopush_p_position(const CoinTuple& t) noexcept {
  return (coin_in_p0(t) || coin_in_p1(t)) && !coin_in_n0(t);
}

// n, m range over 0, 1, 2, ...
bool rook_in_p1(const RookTuple& t) noexcept {
  const auto [x, y, z, w] = t;
  // (2n, m, 2n+1, m)
  if (y == w && even(x) && z == x + 1) return true;
  // (2n+1, m, 2n, m)
  if (y == w && odd(x) && z == x - 1) return true;
  // (n, 2m+1, n, 2m)
  if (x == z && odd(y) && w == y - 1) return true;
  // (n, 2m, n, 2m+1)
  if (x == z && even(y) && w == y + 1) return true;
  return false;
}

bool rook_in_n0(const RookTuple& t) noexcept {
  const auto [x, y, z, w] = t;
  // (2n, 2m, 2n+1, 2m+1)
  if (even(x) && even(y) && z == x + 1 && w == y + 1) return true;
  // (2n+1, 2m+1, 2n, 2m)
  if (odd(x) && odd(y) && z == x - 1 && w == y - 1) return true;
  // (2n+1, 2m, 2n, 2m+1)
  if (odd(x) && even(y) && z == x - 1 && w == y + 1) return true;
  // (2n, 2m+1, 2n+1, 2m)
  if (even(x) && odd(y) && z == x + 1 && w == y - 1) return true;
  return false;
}

bool rook_p_position(const RookTuple& t) noexcept {
  return (nim_sum(t) == 0 || rook_in_p1(t)) && !rook_in_n0(t);
}

bool in_terminal_set(const RookTuple& t) noexcept {
  const auto [x, y, z, w] = t;
  return (x == 0 && y == 0 && z == 1 && w == 0) || (x == 0 && y == 0 && z == 0 && w == 1) ||
         (x == 1 && y == 0 && z == 0 && w == 0) || (x == 0 && y == 1 && z == 0 && w == 0);
}

Classification classify(const Position& p, Variant v) {
  Classification c;
  c.variant = v;
  if (v == Variant::NoInteraction || p.a.is_dropped() || p.b.is_dropped()) return c;
  if (!validate(p, v)) return c;
  c.applicable = true;
  switch (v) {
    case Variant::Rook: {
      const RookTuple t = RookTuple::from(p);
      c.nim_sum = nim_sum(t);
      c.in_p1 = rook_in_p1(t);
      c.in_n0 = rook_in_n0(t);
      c.in_terminal_set = in_terminal_set(t);
      c.p_position = rook_p_position(t);
      break;
    }
    case Variant::JumpOnly: {
      const CoinTuple t = CoinTuple::from(p);
      c.nim_sum = shifted_nim_sum(t);
      c.in_p0 = coin_in_p0(t);
      c.in_p1 = coin_in_p1(t);
      c.in_n0 = coin_in_n0(t);
      c.p_position = coin_nopush_p_position(t);
      break;
    }
    case Variant::Push: {
      const CoinTuple t = CoinTuple::from(p);
      c.nim_sum = shifted_nim_sum(t);
      c.in_p0 = c.nim_sum == 0;
      c.p_position = push_p_position(t);
      break;
    }
    case Variant::NoInteraction:
      break;
  }
  return c;
}

std::optional<Outcome> closed_form_outcome(const Position& p, Variant v) {
  const Classification c = classify(p, v);
  if (!c.applicable) return std::nullopt;
  return c.p_position ? Outcome::P : Outcome::N;
}

}  // namespace coinnim
