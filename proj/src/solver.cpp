#include "coinnim/solver.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "coinnim/error.hpp"

namespace coinnim {

GrundyValue mex(std::span<const GrundyValue> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (GrundyValue v : values) {
    if (v < seen.size()) seen[v] = true;
  }
  const auto first_gap = std::find(seen.begin(), seen.end(), false);
  const auto result = static_cast<GrundyValue>(first_gap - seen.begin());
  if (result > kGrundyCeiling) {
    throw Error(ErrorCode::Internal, "mex exceeded 2^16: grundy table corrupt");
  }
  return result;
}

std::optional<GrundyValue> MemoStore::find(std::uint64_t key) const {
  auto it = table_.find(key);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void MemoStore::insert(std::uint64_t key, GrundyValue value) {
  if (cap_ != 0 && table_.size() >= cap_ && !table_.contains(key)) {
    throw Error(ErrorCode::MemoCapExceeded,
                "memo cap of " + std::to_string(cap_) + " entries exceeded");
  }
  table_.emplace(key, value);
}

Solver::Solver(Ruleset rules, SolverOptions options)
    : rules_(rules), options_(options), memo_(options.memo_cap) {}

namespace {

constexpr std::int32_t kMaxPackedCoordinate = 0xFFFE;

std::uint64_t pack_piece(const PieceState& s) noexcept {
  if (s.is_dropped()) return 0xFFFFFFFFu;
  return (std::uint64_t(std::uint32_t(s.square().col)) << 16) | std::uint32_t(s.square().row);
}

void require_packable(const Position& p) {
  for (const PieceState* s : {&p.a, &p.b}) {
    if (s->on_board() &&
        (s->square().col > kMaxPackedCoordinate || s->square().row > kMaxPackedCoordinate)) {
      throw Error(ErrorCode::InvalidArgument,
                  "coordinate above " + std::to_string(kMaxPackedCoordinate) + " in " +
                      to_string(p));
    }
  }
}

}  // namespace

std::uint64_t Solver::pack(const Position& p) noexcept {
  return (pack_piece(p.a) << 32) | pack_piece(p.b);
}

std::uint64_t Solver::key_of(const Position& p) const noexcept {
  if (options_.canonicalize && p.b < p.a) return pack(p.swapped());
  return pack(p);
}

GrundyValue Solver::evaluate(const Position& root) {
  if (auto hit = memo_.find(key_of(root))) return *hit;

  struct Frame {
    Position position;
    std::vector<Position> children;
    std::size_t next = 0;
  };

  std::vector<Frame> stack;
  stack.push_back({root, successors(root, rules_)});
  std::vector<GrundyValue> child_values;

  while (!stack.empty()) {
    Frame& top = stack.back();
    bool descended = false;
    for (; top.next < top.children.size(); ++top.next) {
      const Position& child = top.children[top.next];
      if (!memo_.find(key_of(child))) {
        Frame frame{child, successors(child, rules_)};
        stack.push_back(std::move(frame));  // invalidates `top`
        descended = true;
        break;
      }
    }
    if (descended) continue;

    child_values.clear();
    for (const Position& child : top.children) child_values.push_back(*memo_.find(key_of(child)));
    memo_.insert(key_of(top.position), mex(child_values));
    stack.pop_back();
  }
  return *memo_.find(key_of(root));
}

GrundyValue Solver::grundy(const Position& p) {
  if (!validate(p, rules_)) {
    throw Error(ErrorCode::MalformedPosition, "malformed position " + to_string(p) +
                                                  " for variant " +
                                                  std::string(variant_name(rules_.variant)));
  }
  require_packable(p);
  std::lock_guard lock(mutex_);
  return evaluate(p);
}

Outcome Solver::outcome(const Position& p) { return outcome_of(grundy(p)); }

std::vector<Move> Solver::best_moves(const Position& p) {
  std::vector<Move> winning;
  for (const Move& m : legal_moves(p, rules_)) {
    if (grundy(apply_move(p, m, rules_)) == 0) winning.push_back(m);
  }
  return winning;
}

std::size_t Solver::memo_size() const {
  std::lock_guard lock(mutex_);
  return memo_.size();
}

int Engine::slot(Ruleset rules) noexcept {
  return int(rules.variant) * 4 + int(rules.push_rule);
}

Solver& Engine::solver(Ruleset rules) {
  // The push rule only changes the Push game.
  if (rules.variant != Variant::Push) rules.push_rule = PushRule::SweepBothOff;
  std::lock_guard lock(mutex_);
  auto& entry = solvers_[slot(rules)];
  if (!entry) entry = std::make_unique<Solver>(rules, defaults_);
  return *entry;
}

}  // namespace coinnim
