#include <doctest.h>

#include <random>
#include <thread>

#include "coinnim/error.hpp"
#include "coinnim/solver.hpp"
#include "oracle.hpp"

using namespace coinnim;

namespace {

const Position kLoneCorner{PieceState::on(1, 1), PieceState::dropped()};

}  // namespace

TEST_CASE("mex") {
  auto m = [](std::vector<GrundyValue> v) { return mex(v); };
  CHECK(m({}) == 0);
  CHECK(m({0, 1, 2}) == 3);
  CHECK(m({1, 2, 5}) == 0);
  CHECK(m({2, 0, 0, 1, 7}) == 3);
}

TEST_CASE("xor_sum") {
  CHECK(xor_sum(0, 0) == 0);
  CHECK(xor_sum(5, 5) == 0);
  CHECK(xor_sum(1, 2) == 3);
}

TEST_CASE("grundy examples, each confirmed by the reference oracle") {
  oracle::Grundy rook(oracle::Rules::Rook);
  oracle::Grundy free_coins(oracle::Rules::Free);
  oracle::Grundy jump(oracle::Rules::Jump);

  Solver rooks(Variant::Rook);
  CHECK(rook({0, 0, 1, 0}) == 0);
  CHECK(rooks.grundy(make_position(0, 0, 1, 0)) == 0);
  CHECK(rook({0, 0, 1, 1}) == 1);
  CHECK(rooks.grundy(make_position(0, 0, 1, 1)) == 1);

  Solver frees(Variant::NoInteraction);
  CHECK(free_coins({1, 1, -1, -1}) == 1);
  CHECK(frees.grundy(kLoneCorner) == 1);
  CHECK(free_coins({1, 1, 2, 1}) == 3);
  CHECK(frees.grundy(make_position(1, 1, 2, 1)) == 3);
  CHECK(frees.grundy(make_position(1, 1, 1, 1)) == 0);

  Solver jumps(Variant::JumpOnly);
  CHECK(jump({-1, -1, 2, 2}) == 1);
  CHECK(jumps.grundy({PieceState::dropped(), PieceState::on(2, 2)}) == 1);
}

TEST_CASE("outcome examples") {
  Solver rooks(Variant::Rook);
  CHECK(rooks.outcome(make_position(0, 0, 1, 0)) == Outcome::P);
  CHECK(rooks.outcome(make_position(0, 0, 1, 1)) == Outcome::N);
  CHECK(rooks.outcome(make_position(1, 2, 3, 0)) == Outcome::P);

  Solver jumps(Variant::JumpOnly);
  CHECK(jumps.outcome(make_position(1, 1, 1, 2)) == Outcome::P);
  CHECK(jumps.outcome(make_position(2, 4, 4, 2)) == Outcome::P);
  CHECK(jumps.outcome(make_position(1, 1, 2, 2)) == Outcome::N);
}

TEST_CASE("best_moves examples") {
  Solver rooks(Variant::Rook);
  const std::vector<Move> expected = {
      Move{Piece::B, Direction::Left, Square{0, 1}, std::nullopt},
      Move{Piece::B, Direction::Up, Square{1, 0}, std::nullopt},
  };
  CHECK(rooks.best_moves(make_position(0, 0, 1, 1)) == expected);
  CHECK(rooks.best_moves(make_position(0, 0, 1, 0)).empty());

  Solver jumps(Variant::JumpOnly);
  CHECK(jumps.best_moves(make_position(1, 1, 1, 2)).empty());
}

TEST_CASE("malformed positions are errors") {
  Solver jumps(Variant::JumpOnly);
  CHECK_THROWS_AS(jumps.grundy(make_position(2, 3, 2, 3)), Error);
  Solver rooks(Variant::Rook);
  CHECK_THROWS_AS(rooks.grundy(kLoneCorner), Error);
  CHECK_THROWS_AS(rooks.grundy(make_position(70000, 0, 0, 1)), Error);
}

TEST_CASE("solver matches the reference oracle exhaustively at small bounds") {
  for (Variant v : kAllVariants) {
    Solver solver(v);
    oracle::Grundy ref(oracle::rules_for(v));
    const int lo = min_coordinate(v);
    const int bound = 6;
    for (int a = lo; a <= bound; ++a)
      for (int b = lo; b <= bound; ++b)
        for (int c = lo; c <= bound; ++c)
          for (int d = lo; d <= bound; ++d) {
            const Position p = make_position(a, b, c, d);
            if (!validate(p, v)) continue;
            REQUIRE_MESSAGE(solver.grundy(p) == GrundyValue(ref(oracle::from(p))),
                            variant_name(v), " ", to_string(p));
          }
  }
}

TEST_CASE("memo-free recursion agrees at tiny bounds") {
  for (Variant v : kAllVariants) {
    Solver solver(v, {.canonicalize = false});
    const int lo = min_coordinate(v);
    for (int a = lo; a <= 3; ++a)
      for (int b = lo; b <= 3; ++b)
        for (int c = lo; c <= 3; ++c)
          for (int d = lo; d <= 3; ++d) {
            const Position p = make_position(a, b, c, d);
            if (!validate(p, v)) continue;
            REQUIRE(solver.grundy(p) ==
                    GrundyValue(oracle::grundy_no_memo(oracle::rules_for(v), oracle::from(p))));
          }
  }
}

TEST_CASE("solver laws over random positions") {
  std::mt19937_64 rng(7);
  for (Variant v : kAllVariants) {
    Solver canonical(v);
    Solver plain(v, {.canonicalize = false});
    for (int i = 0; i < 1500; ++i) {
      const Position p = oracle::random_position(rng, v, 18);
      const GrundyValue g = canonical.grundy(p);

      // swap symmetry, checked without canonical keys
      REQUIRE(plain.grundy(p.swapped()) == plain.grundy(p));
      REQUIRE(plain.grundy(p) == g);

      // mex law and local P/N law
      std::vector<GrundyValue> children;
      bool some_child_p = false;
      for (const Position& q : successors(p, v)) {
        const GrundyValue gq = plain.grundy(q);
        children.push_back(gq);
        some_child_p = some_child_p || gq == 0;
      }
      REQUIRE(mex(children) == g);
      REQUIRE((outcome_of(g) == Outcome::N) == some_child_p);

      // winning moves exist exactly at non-terminal N-positions
      const bool terminal = is_terminal(p, v);
      REQUIRE(canonical.best_moves(p).empty() == (g == 0 || terminal));

      if (v == Variant::NoInteraction && p.a.on_board() && p.b.on_board()) {
        REQUIRE(g == xor_sum(plain.grundy({p.a, PieceState::dropped()}),
                             plain.grundy({PieceState::dropped(), p.b})));
      }
    }
  }
}

TEST_CASE("canonical memo stores fewer entries") {
  Solver canonical(Variant::JumpOnly);
  Solver plain(Variant::JumpOnly, {.canonicalize = false});
  const Position p = make_position(6, 5, 4, 6);
  CHECK(canonical.grundy(p) == plain.grundy(p));
  CHECK(canonical.memo_size() < plain.memo_size());
}

TEST_CASE("memo cap fails fast") {
  Solver capped(Variant::Rook, {.canonicalize = true, .memo_cap = 10});
  try {
    capped.grundy(make_position(8, 8, 7, 3));
    FAIL("expected MemoCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MemoCapExceeded);
  }
}

TEST_CASE("MemoStore insert is idempotent") {
  MemoStore store;
  store.insert(42, 3);
  store.insert(42, 3);
  CHECK(store.size() == 1);
  CHECK(store.find(42) == 3u);
  CHECK_FALSE(store.find(7).has_value());
}

TEST_CASE("deep positions evaluate without recursion limits") {
  Solver rooks(Variant::Rook);
  // Paths from here are ~1000 moves long; a recursive evaluator would nest that deep.
  CHECK(rooks.outcome(make_position(1000, 0, 0, 1)) == Outcome::N);
}

TEST_CASE("concurrent callers see identical values") {
  Engine engine;
  std::vector<GrundyValue> results(4);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back(
        [&, t] { results[t] = engine.solver(Variant::Push).grundy(make_position(9, 7, 5, 8)); });
  }
  for (auto& th : threads) th.join();
  for (GrundyValue g : results) CHECK(g == results[0]);
  CHECK(&engine.solver(Variant::Rook) == &engine.solver({Variant::Rook, PushRule::PusherStopsAtEdge}));
  CHECK(&engine.solver(Variant::Push) != &engine.solver({Variant::Push, PushRule::PusherStopsAtEdge}));
}
