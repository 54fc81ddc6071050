#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coinnim/game.hpp"

namespace coinnim {

using GrundyValue = std::uint32_t;

enum class Outcome : std::uint8_t { P, N };

/// Any mex above this means the table is corrupt; no game here gets close.
inline constexpr GrundyValue kGrundyCeiling = 1u << 16;

constexpr Outcome outcome_of(GrundyValue g) noexcept { return g == 0 ? Outcome::P : Outcome::N; }
constexpr char outcome_char(Outcome o) noexcept { return o == Outcome::P ? 'P' : 'N'; }

/// Least nonnegative integer not in `values` (duplicates allowed).
GrundyValue mex(std::span<const GrundyValue> values);

constexpr GrundyValue xor_sum(GrundyValue a, GrundyValue b) noexcept { return a ^ b; }

/// Grundy table keyed by packed position. Entries never change once written;
/// re-inserting a key is a no-op. A nonzero cap makes insertion past the cap
/// throw Error{MemoCapExceeded}.
class MemoStore {
 public:
  explicit MemoStore(std::size_t cap = 0) : cap_(cap) {}

  std::optional<GrundyValue> find(std::uint64_t key) const;
  void insert(std::uint64_t key, GrundyValue value);
  std::size_t size() const noexcept { return table_.size(); }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
  std::unordered_map<std::uint64_t, GrundyValue> table_;
};

struct SolverOptions {
  // Store positions with the piece pair sorted. Sound only because swap
  // symmetry holds; the symmetry tests run with this off.
  bool canonicalize = true;
  std::size_t memo_cap = 0;
};

/// Exact Sprague-Grundy evaluation for one ruleset. Evaluation walks the
/// move graph with an explicit stack, so depth is bounded only by memory.
/// Public members lock an internal mutex; concurrent callers serialize.
class Solver {
 public:
  explicit Solver(Ruleset rules, SolverOptions options = {});

  Ruleset rules() const noexcept { return rules_; }
  const SolverOptions& options() const noexcept { return options_; }

  GrundyValue grundy(const Position& p);
  Outcome outcome(const Position& p);
  /// Moves into grundy-0 successors, in legal-move order.
  std::vector<Move> best_moves(const Position& p);

  std::size_t memo_size() const;

  /// Packing used for memo keys; coordinates must be below 65535.
  static std::uint64_t pack(const Position& p) noexcept;

 private:
  std::uint64_t key_of(const Position& p) const noexcept;
  GrundyValue evaluate(const Position& root);

  Ruleset rules_;
  SolverOptions options_;
  mutable std::mutex mutex_;
  MemoStore memo_;
};

/// One lazily created solver per ruleset, shared by the verifier, the
/// service, and the C API.
class Engine {
 public:
  explicit Engine(SolverOptions defaults = {}) : defaults_(defaults) {}

  Solver& solver(Ruleset rules);

 private:
  static int slot(Ruleset rules) noexcept;

  SolverOptions defaults_;
  std::mutex mutex_;
  std::map<int, std::unique_ptr<Solver>> solvers_;
};

}  // namespace coinnim
