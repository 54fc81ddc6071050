#include "coinnim/verifier.hpp"

#include <string>

#include "coinnim/closed_form.hpp"
#include "coinnim/error.hpp"

namespace coinnim {

namespace {

using Clock = std::chrono::steady_clock;

PieceState decode_piece(std::int32_t col, std::int32_t row) noexcept {
  return col == 0 && row == 0 ? PieceState::dropped() : PieceState::on(col, row);
}

// Coin tuples over 0..bound in lexicographic order, 0,0 meaning dropped.
// Half-zero pieces are not states and are skipped.
template <class Visit>
void for_each_coin_state(std::int32_t bound, bool with_dropped, Visit&& visit) {
  const std::int32_t lo = with_dropped ? 0 : 1;
  for (std::int32_t w = lo; w <= bound; ++w)
    for (std::int32_t x = lo; x <= bound; ++x) {
      if ((w == 0) != (x == 0)) continue;
      for (std::int32_t y = lo; y <= bound; ++y)
        for (std::int32_t z = lo; z <= bound; ++z) {
          if ((y == 0) != (z == 0)) continue;
          visit(Position{decode_piece(w, x), decode_piece(y, z)});
        }
    }
}

template <class Visit>
void for_each_rook_state(std::int32_t bound, Visit&& visit) {
  for (std::int32_t x = 0; x <= bound; ++x)
    for (std::int32_t y = 0; y <= bound; ++y)
      for (std::int32_t z = 0; z <= bound; ++z)
        for (std::int32_t w = 0; w <= bound; ++w) visit(make_position(x, y, z, w));
}

template <class Visit>
void for_each_state(Variant v, std::int32_t bound, bool with_dropped, Visit&& visit) {
  if (v == Variant::Rook) {
    for_each_rook_state(bound, visit);
  } else {
    for_each_coin_state(bound, with_dropped, visit);
  }
}

void require_bound(std::int32_t bound, std::int32_t minimum) {
  if (bound < minimum) {
    throw Error(ErrorCode::InvalidArgument,
                "bound must be at least " + std::to_string(minimum));
  }
}

void record(DiscrepancyReport& report, const char* kind, const Position& p, SweepRow row,
            std::string detail = {}) {
  row.pos = to_tuple(p);
  if (!row.agree) {
    Mismatch m{kind, row.pos, row.brute, row.closed, row.grundy, std::nullopt,
               std::move(detail)};
    report.mismatches.push_back(std::move(m));
  }
  report.rows.push_back(row);
}

void finish(DiscrepancyReport& report, Clock::time_point started) {
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
}

void append_local_law(DiscrepancyReport& report, std::int32_t bound) {
  for_each_rook_state(bound, [&](const Position& p) {
    if (!validate(p, Variant::Rook)) return;
    const bool claim_p = rook_p_position(RookTuple::from(p));
    bool some_child_p = false;
    for (const Position& child : successors(p, Variant::Rook)) {
      if (rook_p_position(RookTuple::from(child))) {
        some_child_p = true;
        break;
      }
    }
    const Outcome claimed = claim_p ? Outcome::P : Outcome::N;
    const Outcome implied = some_child_p ? Outcome::N : Outcome::P;
    if (claimed != implied) {
      report.mismatches.push_back(
          {"local-law", to_tuple(p), claimed, implied, std::nullopt, std::nullopt, {}});
    }
  });
}

}  // namespace

Tuple to_tuple(const Position& p) noexcept {
  Tuple t{};
  if (p.a.on_board()) {
    t[0] = p.a.square().col;
    t[1] = p.a.square().row;
  }
  if (p.b.on_board()) {
    t[2] = p.b.square().col;
    t[3] = p.b.square().row;
  }
  return t;
}

DiscrepancyReport verify_variant(Engine& engine, const SweepSpec& spec) {
  if (spec.variant == Variant::NoInteraction) {
    throw Error(ErrorCode::InvalidArgument,
                "the free variant has no P-set classifier; use the sum-theorem sweep");
  }
  if (spec.variant == Variant::Rook && spec.include_dropped_states) {
    throw Error(ErrorCode::InvalidArgument, "rook positions never contain dropped pieces");
  }
  require_bound(spec.bound, 2);

  const auto started = Clock::now();
  const Ruleset rules(spec.variant, spec.push_rule);
  Solver& solver = engine.solver(rules);

  DiscrepancyReport report;
  report.check = "variant";
  report.spec = spec;

  for_each_state(spec.variant, spec.bound, spec.include_dropped_states, [&](const Position& p) {
    if (!validate(p, rules)) return;
    ++report.total;
    SweepRow row;
    row.grundy = solver.grundy(p);
    row.brute = outcome_of(*row.grundy);
    if (auto closed = closed_form_outcome(p, spec.variant)) {
      row.closed = *closed;
      row.agree = row.brute == row.closed;
      record(report, "outcome", p, row);
      return;
    }
    // Dropped-piece state: the only claim is the local recursion law.
    bool some_child_p = false;
    for (const Position& child : successors(p, rules)) {
      if (solver.grundy(child) == 0) {
        some_child_p = true;
        break;
      }
    }
    row.closed = some_child_p ? Outcome::N : Outcome::P;
    row.agree = row.brute == row.closed;
    record(report, "local-law", p, row);
  });

  if (spec.variant == Variant::Rook) append_local_law(report, spec.bound);
  finish(report, started);
  return report;
}

DiscrepancyReport verify_correspondence(Engine& engine, std::int32_t bound) {
  require_bound(bound, 2);
  const auto started = Clock::now();
  Solver& coins = engine.solver(Variant::JumpOnly);
  Solver& rooks = engine.solver(Variant::Rook);

  DiscrepancyReport report;
  report.check = "correspondence";
  report.spec = {Variant::JumpOnly, bound, false, PushRule::SweepBothOff};

  for_each_coin_state(bound, false, [&](const Position& p) {
    if (!validate(p, Variant::JumpOnly)) return;
    ++report.total;
    const Position shifted = make_position(p.a.square().col - 1, p.a.square().row - 1,
                                           p.b.square().col - 1, p.b.square().row - 1);
    SweepRow row;
    row.grundy = coins.grundy(p);
    row.brute = outcome_of(*row.grundy);
    row.closed = rooks.outcome(shifted);
    row.agree = row.brute == row.closed;
    record(report, "correspondence", p, row, "rook " + to_string(shifted));
  });

  finish(report, started);
  return report;
}

DiscrepancyReport verify_drop_losing(Engine& engine, std::int32_t bound, Variant variant,
                                     PushRule push_rule) {
  if (variant != Variant::JumpOnly && variant != Variant::Push) {
    throw Error(ErrorCode::InvalidArgument, "drop-losing sweep applies to jump and push only");
  }
  require_bound(bound, 2);
  const auto started = Clock::now();
  const Ruleset rules(variant, push_rule);
  Solver& solver = engine.solver(rules);

  DiscrepancyReport report;
  report.check = "drop-losing";
  report.spec = {variant, bound, false, push_rule};

  for_each_coin_state(bound, false, [&](const Position& p) {
    if (!validate(p, rules)) return;
    for (const Move& m : legal_moves(p, rules)) {
      const Position next = apply_move(p, m, rules);
      if (next.a.on_board() == next.b.on_board()) continue;
      ++report.total;
      SweepRow row;
      row.grundy = solver.grundy(next);
      row.brute = outcome_of(*row.grundy);
      row.closed = Outcome::N;
      row.agree = row.brute == Outcome::N;
      record(report, "drop-losing", p, row, to_string(m));
    }
  });

  finish(report, started);
  return report;
}

DiscrepancyReport verify_sum_theorem(Engine& engine, std::int32_t bound) {
  require_bound(bound, 1);
  const auto started = Clock::now();
  Solver& solver = engine.solver(Variant::NoInteraction);

  DiscrepancyReport report;
  report.check = "sum";
  report.spec = {Variant::NoInteraction, bound, false, PushRule::SweepBothOff};

  for_each_coin_state(bound, false, [&](const Position& p) {
    ++report.total;
    const GrundyValue alone_a = solver.grundy({p.a, PieceState::dropped()});
    const GrundyValue alone_b = solver.grundy({PieceState::dropped(), p.b});
    const GrundyValue expected = xor_sum(alone_a, alone_b);
    SweepRow row;
    row.pos = to_tuple(p);
    row.grundy = solver.grundy(p);
    row.brute = outcome_of(*row.grundy);
    row.closed = outcome_of(expected);
    row.agree = *row.grundy == expected;
    if (!row.agree) {
      report.mismatches.push_back(
          {"sum", row.pos, row.brute, row.closed, row.grundy, expected, {}});
    }
    report.rows.push_back(row);
  });

  finish(report, started);
  return report;
}

DiscrepancyReport verify_local_law(std::int32_t bound) {
  require_bound(bound, 2);
  const auto started = Clock::now();
  DiscrepancyReport report;
  report.check = "local-law";
  report.spec = {Variant::Rook, bound, false, PushRule::SweepBothOff};
  for_each_rook_state(bound, [&](const Position& p) {
    if (validate(p, Variant::Rook)) ++report.total;
  });
  append_local_law(report, bound);
  finish(report, started);
  return report;
}

PushCalibration calibrate_push(Engine& engine, std::int32_t bound) {
  PushCalibration result;
  for (PushRule rule : kAllPushRules) {
    result.runs.push_back(verify_variant(engine, {Variant::Push, bound, false, rule}));
    if (!result.selected && result.runs.back().clean()) result.selected = rule;
  }
  return result;
}

}  // namespace coinnim
