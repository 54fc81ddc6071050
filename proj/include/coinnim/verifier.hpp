#pragma once

// Exhaustive sweeps that hold the closed-form classifiers, the coin/rook
// correspondence, the drop lemma, and the sum theorem against the solver.

#include <array>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "coinnim/game.hpp"
#include "coinnim/solver.hpp"

namespace coinnim {

struct SweepSpec {
  Variant variant = Variant::Rook;
  // Largest coordinate, inclusive.
  std::int32_t bound = 2;
  // Coin variants only: also sweep one-coin and empty states, checked
  // against the solver's local P/N law (no closed form exists for them).
  bool include_dropped_states = false;
  PushRule push_rule = PushRule::SweepBothOff;
};

/// (col_a, row_a, col_b, row_b). A dropped coin is written as 0,0, which is
/// never an on-board coin square.
using Tuple = std::array<std::int32_t, 4>;

Tuple to_tuple(const Position& p) noexcept;

struct SweepRow {
  Tuple pos{};
  std::optional<GrundyValue> grundy;
  Outcome brute = Outcome::P;
  Outcome closed = Outcome::P;
  bool agree = true;
};

struct Mismatch {
  std::string kind;
  Tuple pos{};
  Outcome brute = Outcome::P;
  Outcome closed = Outcome::P;
  std::optional<GrundyValue> grundy;
  std::optional<GrundyValue> expected_grundy;
  std::string detail;
};

struct DiscrepancyReport {
  std::string check;
  SweepSpec spec;
  std::uint64_t total = 0;
  std::vector<SweepRow> rows;
  std::vector<Mismatch> mismatches;
  std::chrono::milliseconds elapsed{0};

  bool clean() const noexcept { return mismatches.empty(); }
};

/// Solver outcome vs. the variant's closed-form P-set for every two-on-board
/// position within the bound, in lexicographic (w,x,y,z) order. For Rook the
/// closed-form local P/N law is checked over the same window as well.
/// Throws Error{InvalidArgument} for NoInteraction or bound < 2.
DiscrepancyReport verify_variant(Engine& engine, const SweepSpec& spec);

/// JumpOnly at (w,x,y,z) against Rook at (w-1,x-1,y-1,z-1), coordinates 1..bound.
DiscrepancyReport verify_correspondence(Engine& engine, std::int32_t bound);

/// Every move from a two-on-board position that drops exactly one coin must
/// hand the opponent an N-position. `total` counts the drop moves examined.
DiscrepancyReport verify_drop_losing(Engine& engine, std::int32_t bound, Variant variant,
                                     PushRule push_rule = PushRule::SweepBothOff);

/// NoInteraction grundy equals the XOR of the single-coin grundies for every
/// pair of squares in 1..bound, stacked pairs included.
DiscrepancyReport verify_sum_theorem(Engine& engine, std::int32_t bound);

/// Rook closed form only: each P-claimed position has no P-claimed successor
/// and each N-claimed position has one.
DiscrepancyReport verify_local_law(std::int32_t bound);

struct PushCalibration {
  std::vector<DiscrepancyReport> runs;  // documented rule first
  std::optional<PushRule> selected;     // first rule with zero mismatches
};

/// Runs verify_variant(Push) under every push-rule reading.
PushCalibration calibrate_push(Engine& engine, std::int32_t bound);

}  // namespace coinnim
