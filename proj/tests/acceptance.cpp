// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>

#include "coinnim/closed_form.hpp"
#include "coinnim/error.hpp"
#include "coinnim/verifier.hpp"
#include "oracle.hpp"

using namespace coinnim;

namespace {

// Tolerances. Every sweep must be exact; the only slack is wall-clock.
constexpr std::size_t kAllowedMismatches = 0;
constexpr double kSweepBudgetSeconds = 60.0;
constexpr int kSweepBound = 20;
constexpr int kPushBound = 12;
constexpr int kInclusionBound = 50;
constexpr int kLocalLawBound = 15;
constexpr int kLawSamples = 10000;
constexpr int kLawBound = 30;

int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("[%s] %s: %s\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

template <class Fn>
double seconds(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sweep_detail(const DiscrepancyReport& r, double secs) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "total=%llu mismatches=%zu time=%.2fs (budget %.0fs)",
                static_cast<unsigned long long>(r.total), r.mismatches.size(), secs,
                kSweepBudgetSeconds);
  return buf;
}

bool sweep_ok(const DiscrepancyReport& r, double secs) {
  return r.mismatches.size() <= kAllowedMismatches && secs <= kSweepBudgetSeconds;
}

void rook_sweep() {
  Engine engine;
  DiscrepancyReport r;
  const double secs = seconds([&] { r = verify_variant(engine, {Variant::Rook, kSweepBound}); });
  const std::uint64_t expected = 21ull * 21 * 21 * 21 - 21 * 21;
  report(sweep_ok(r, secs) && r.total == expected, "rook closed form, coordinates 0..20",
         sweep_detail(r, secs));
}

void jump_sweep() {
  Engine engine;
  DiscrepancyReport r;
  const double secs = seconds([&] { r = verify_variant(engine, {Variant::JumpOnly, kSweepBound}); });
  const std::uint64_t expected = 20ull * 20 * 20 * 20 - 20 * 20;
  report(sweep_ok(r, secs) && r.total == expected, "jump closed form, coordinates 1..20",
         sweep_detail(r, secs));
}

void correspondence() {
  Engine engine;
  DiscrepancyReport shift, drop;
  const double secs = seconds([&] {
    shift = verify_correspondence(engine, kSweepBound);
    drop = verify_drop_losing(engine, kSweepBound, Variant::JumpOnly);
  });
  report(sweep_ok(shift, secs) && sweep_ok(drop, secs) && drop.total > 0,
         "jump/rook shift correspondence and losing drops, bound 20",
         "shift: " + sweep_detail(shift, secs) + "; drops checked=" + std::to_string(drop.total) +
             " violations=" + std::to_string(drop.mismatches.size()));
}

void push_calibration() {
  Engine engine;
  PushCalibration c;
  const double secs = seconds([&] { c = calibrate_push(engine, kPushBound); });
  const DiscrepancyReport& documented = c.runs.front();
  std::string detail = sweep_detail(documented, secs) + " under " +
                       std::string(push_rule_name(documented.spec.push_rule));
  for (std::size_t i = 1; i < c.runs.size(); ++i) {
    detail += "; alternative " + std::string(push_rule_name(c.runs[i].spec.push_rule)) + " has " +
              std::to_string(c.runs[i].mismatches.size()) + " mismatches";
  }
  detail += "; selected " + (c.selected ? std::string(push_rule_name(*c.selected)) : "none");
  report(c.selected.has_value() && c.runs[0].total == 12ull * 12 * 12 * 12 - 12 * 12 &&
             sweep_ok(documented, secs),
         "push nim-sum characterization, bound 12", detail);
}

void sum_sweep() {
  Engine engine;
  DiscrepancyReport r;
  const double secs = seconds([&] { r = verify_sum_theorem(engine, kSweepBound); });
  report(sweep_ok(r, secs) && r.total == 20ull * 20 * 20 * 20,
         "free variant grundy is XOR of single coins, 1..20 with stacking", sweep_detail(r, secs));
}

void set_inclusions() {
  std::uint64_t coin_states = 0, rook_states = 0, violations = 0;
  auto expect = [&](bool ok) { violations += ok ? 0 : 1; };
  const double secs = seconds([&] {
    for (int w = 0; w <= kInclusionBound; ++w)
      for (int x = 0; x <= kInclusionBound; ++x)
        for (int y = 0; y <= kInclusionBound; ++y)
          for (int z = 0; z <= kInclusionBound; ++z) {
            if (w == y && x == z) continue;
            const RookTuple r(w, x, y, z);
            ++rook_states;
            if (rook_in_n0(r)) expect(nim_sum(r) == 0);
            if (rook_in_p1(r)) expect(nim_sum(r) == 1);
            expect(!(rook_in_p1(r) && rook_in_n0(r)));
            if (in_terminal_set(r)) {
              expect(rook_in_p1(r));
              expect(is_terminal(make_position(w, x, y, z), Variant::Rook));
            }
            if (w >= 1 && x >= 1 && y >= 1 && z >= 1) {
              const CoinTuple t(w, x, y, z);
              ++coin_states;
              if (coin_in_n0(t)) expect(coin_in_p0(t));
              if (coin_in_p1(t)) expect(shifted_nim_sum(t) == 1);
              expect(!(coin_in_p1(t) && coin_in_n0(t)));
            }
          }
    // E is exactly the four listed tuples, each terminal
    for (const auto& e : {RookTuple(0, 0, 1, 0), RookTuple(0, 0, 0, 1), RookTuple(1, 0, 0, 0),
                          RookTuple(0, 1, 0, 0)}) {
      expect(in_terminal_set(e) && rook_in_p1(e));
    }
  });
  char buf[200];
  std::snprintf(buf, sizeof buf, "rook states=%llu coin states=%llu violations=%llu time=%.2fs",
                static_cast<unsigned long long>(rook_states),
                static_cast<unsigned long long>(coin_states),
                static_cast<unsigned long long>(violations), secs);
  report(violations == 0, "set inclusions (N0, P1, E) over bound 50", buf);
}

void local_law() {
  DiscrepancyReport r;
  const double secs = seconds([&] { r = verify_local_law(kLocalLawBound); });
  report(sweep_ok(r, secs) && r.total == 16ull * 16 * 16 * 16 - 16 * 16,
         "rook closed form satisfies the local P/N law, bound 15", sweep_detail(r, secs));
}

void solver_laws() {
  std::mt19937_64 rng(20261015);
  for (Variant v : kAllVariants) {
    Solver canonical(v);
    // independent table, no canonical keys, filled in a different order
    Solver independent(v, {.canonicalize = false});
    std::uint64_t swap = 0, recompute = 0, progress = 0, moves = 0;
    const double secs = seconds([&] {
      for (int i = 0; i < kLawSamples; ++i) {
        const Position p = oracle::random_position(rng, v, kLawBound);
        const GrundyValue g = canonical.grundy(p);
        if (independent.grundy(p.swapped()) != independent.grundy(p)) ++swap;
        if (independent.grundy(p) != g) ++recompute;

        // one-step recomputation from the children, bypassing p's own memo entry
        std::vector<GrundyValue> children;
        for (const Move& m : legal_moves(p, v)) {
          const Position next = apply_move(p, m, v);
          ++moves;
          if (!(progress_measure(next) < progress_measure(p))) ++progress;
          children.push_back(independent.grundy(next));
        }
        if (mex(children) != g) ++recompute;
      }
    });
    char buf[240];
    std::snprintf(buf, sizeof buf,
                  "samples=%d moves=%llu swap=%llu recompute=%llu progress=%llu time=%.2fs",
                  kLawSamples, static_cast<unsigned long long>(moves),
                  static_cast<unsigned long long>(swap), static_cast<unsigned long long>(recompute),
                  static_cast<unsigned long long>(progress), secs);
    report(swap + recompute + progress == 0,
           std::string("solver laws, ") + std::string(variant_name(v)) + ", bound 30", buf);
  }
}

}  // namespace

int main() {
  try {
    rook_sweep();
    jump_sweep();
    correspondence();
    push_calibration();
    sum_sweep();
    set_inclusions();
    local_law();
    solver_laws();
  } catch (const std::exception& e) {
    report(false, "acceptance harness", e.what());
  }
  std::printf("%s: %d failing criteria\n", failures ? "FAILED" : "ALL PASSED", failures);
  return failures ? 1 : 0;
}
