#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pursuit/engine.hpp"
#include "pursuit/error.hpp"
#include "pursuit/io.hpp"
#include "pursuit/solver.hpp"

using namespace pursuit;

namespace {

std::vector<Vertex> pursuer_moves(const Graph& g, Vertex z, Vertex e, Variant v) {
  const auto d = all_pairs_distances(g);
  return legal_pursuer_moves(g, d, GameState{{z}, e, Turn::Pursuers}, 0, v);
}

/// Steps toward the survivor along the lowest-numbered shortest-path neighbour.
class GreedyZombie : public PursuerPolicy {
 public:
  std::string name() const override { return "greedy"; }
  std::vector<Vertex> place(const MatchContext&) override { return {0}; }
  std::vector<Vertex> move(const MatchContext& ctx, const GameState& s) override {
    return {legal_pursuer_moves(ctx.graph, ctx.dist, s, 0, ctx.variant).front()};
  }
};

/// Stays at distance two on a cycle by stepping away from the zombie.
class RunAway : public EvaderPolicy {
 public:
  std::string name() const override { return "run-away"; }
  Vertex place(const MatchContext& ctx, std::span<const Vertex> p) override { return (p[0] + 2) % ctx.graph.order(); }
  Vertex move(const MatchContext& ctx, const GameState& s) override {
    Vertex best = s.evader;
    for (Vertex w : legal_evader_moves(ctx.graph, s))
      if (ctx.dist(w, s.pursuers[0]) > ctx.dist(best, s.pursuers[0])) best = w;
    return best;
  }
};

}  // namespace

TEST_CASE("pursuer move rules") {
  CHECK(pursuer_moves(testing::path(5), 0, 4, Variant::Zombies) == std::vector<Vertex>{1});
  CHECK(pursuer_moves(testing::cycle(6), 0, 3, Variant::Zombies) == std::vector<Vertex>{1, 5});
  CHECK(pursuer_moves(testing::cycle(6), 0, 3, Variant::LazyZombies) == std::vector<Vertex>{0, 1, 5});
  CHECK(pursuer_moves(testing::cycle(6), 0, 3, Variant::Cops) == std::vector<Vertex>{0, 1, 5});
  CHECK(pursuer_moves(testing::path(5), 2, 4, Variant::Cops) == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("evader move rules") {
  const Graph k4 = testing::clique(4);
  CHECK(legal_evader_moves(k4, GameState{{1}, 0, Turn::Evader}) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(legal_evader_moves(testing::path(2), GameState{{0}, 1, Turn::Evader}) == std::vector<Vertex>{0, 1});
  CHECK(legal_evader_moves(testing::cycle(5), GameState{{0}, 2, Turn::Evader}) == std::vector<Vertex>{1, 2, 3});
  CHECK_THROWS_AS(legal_evader_moves(k4, GameState{{1}, 0, Turn::Pursuers}), Error);
}

TEST_CASE("step applies moves and detects capture") {
  const Graph c5 = testing::cycle(5);
  const auto d = all_pairs_distances(c5);
  const Vertex to_one[] = {1};
  const auto r = step(c5, d, GameState{{0}, 2, Turn::Pursuers}, to_one, Variant::Zombies);
  CHECK(r.next == GameState{{1}, 2, Turn::Evader});
  CHECK_FALSE(r.captured);

  const Vertex onto[] = {2};
  CHECK(step(c5, d, GameState{{1}, 2, Turn::Pursuers}, onto, Variant::Zombies).captured);
  const Vertex evader_onto[] = {1};
  CHECK(step(c5, d, GameState{{1}, 2, Turn::Evader}, evader_onto, Variant::Zombies).captured);

  const Vertex stay[] = {0};
  try {
    step(c5, d, GameState{{0}, 2, Turn::Pursuers}, stay, Variant::Zombies);
    FAIL("a zombie may not stay");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IllegalMove);
  }
}

TEST_CASE("a zombie on a path always catches") {
  for (int n = 2; n <= 7; ++n) {
    const Graph p = testing::path(n);
    const auto table = solve_game(p, Variant::Zombies, 1);
    OptimalEvaderPolicy evader(table);
    GreedyZombie zombie;
    const Trace t = play_match(p, all_pairs_distances(p), Variant::Zombies, 1, zombie, evader, {});
    CHECK(t.outcome == Outcome::Capture);
    CHECK(t.capture_round <= n);
  }
}

TEST_CASE("one zombie on C5 never catches a survivor keeping distance two") {
  const Graph c5 = testing::cycle(5);
  GreedyZombie zombie;
  RunAway evader;
  MatchOptions options;
  options.round_limit = 200;
  const Trace t = play_match(c5, all_pairs_distances(c5), Variant::Zombies, 1, zombie, evader, options);
  CHECK(t.outcome == Outcome::RoundLimit);
  CHECK(t.repeat_round.has_value());
  REQUIRE(t.records.size() >= 2);
  CHECK(t.records[0].mover == Turn::Pursuers);
  CHECK(t.records[0].evader == -1);
  CHECK(t.records[1].mover == Turn::Evader);
}

TEST_CASE("traces replay and round-trip through JSON lines") {
  const Graph g = testing::fan(7);
  const auto table = solve_game(g, Variant::LazyZombies, 2);
  OptimalPursuerPolicy pursuers(table);
  OptimalEvaderPolicy evader(table);
  const auto d = all_pairs_distances(g);
  const Trace t = play_match(g, d, Variant::LazyZombies, 2, pursuers, evader, {});
  CHECK_NOTHROW(replay_trace(g, d, t));
  const Trace back = io::trace_from_jsonl(io::trace_to_jsonl(t));
  CHECK(back.records == t.records);
  CHECK(back.outcome == t.outcome);
  CHECK(back.capture_round == t.capture_round);

  Trace forged = t;
  forged.records.back().positions = {0, 0};
  CHECK_THROWS_AS(replay_trace(g, d, forged), Error);
}

TEST_CASE("solver ground truths") {
  const auto k3 = solve_game(testing::clique(3), Variant::Cops, 1);
  for (Vertex p = 0; p < 3; ++p)
    for (Vertex e = 0; e < 3; ++e) CHECK(k3.pursuer_wins(GameState{{p}, e, Turn::Pursuers}));

  const auto c5 = solve_game(testing::cycle(5), Variant::Zombies, 1);
  for (Vertex e = 1; e < 5; ++e) {
    const bool far = e == 2 || e == 3;
    CHECK(c5.pursuer_wins(GameState{{0}, e, Turn::Pursuers}) == !far);
    // On its own turn the survivor can always step out to distance two.
    CHECK_FALSE(c5.pursuer_wins(GameState{{0}, e, Turn::Evader}));
  }

  const auto p4 = solve_game(testing::path(4), Variant::LazyZombies, 1);
  for (Vertex z = 0; z < 4; ++z)
    for (Vertex e = 0; e < 4; ++e)
      for (Turn t : {Turn::Pursuers, Turn::Evader}) CHECK(p4.pursuer_wins(GameState{{z}, e, t}));
}

TEST_CASE("game numbers") {
  const auto k6 = game_number(testing::clique(6), Variant::Zombies, PlacementMode::Chosen, 3);
  CHECK(k6.value == 1);
  const auto c5 = game_number(testing::cycle(5), Variant::Zombies, PlacementMode::Chosen, 3);
  CHECK(c5.value == 2);
  const auto u = game_number(testing::cycle(5), Variant::Zombies, PlacementMode::Adversarial, 3);
  CHECK_FALSE(u.value.has_value());
  REQUIRE(u.witness.size() == 3);
  CHECK(u.witness[0] == u.witness[1]);
  CHECK(u.witness[1] == u.witness[2]);
  CHECK(u.counter_evader.has_value());
}

TEST_CASE("solver matches brute-force minimax with two pursuers") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 5)(rng);
    const Graph g = oracle::random_connected_graph(n, 0.3, rng);
    for (Variant v : {Variant::Cops, Variant::Zombies, Variant::LazyZombies}) {
      const auto table = solve_game(g, v, 2);
      oracle::Minimax minimax(g, v);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a; b < n; ++b)
          for (Vertex e = 0; e < n; ++e)
            for (Turn t : {Turn::Pursuers, Turn::Evader}) {
              const GameState s{{a, b}, e, t};
              const auto want = minimax.capture_within(s, 4 * n * n);
              const auto got = table.turns_to_capture(s);
              REQUIRE(got == (want ? *want : GameTable::kSurvivorWin));
            }
    }
  }
}

TEST_CASE("optimal pursuers realise the table's capture time") {
  const Graph p4 = testing::path(4);
  const auto table = solve_game(p4, Variant::Zombies, 1);
  OptimalPursuerPolicy pursuer(table);
  OptimalEvaderPolicy evader(table);
  for (Vertex z = 0; z < 4; ++z) {
    MatchOptions options;
    options.placement = PlacementMode::Adversarial;
    options.placements = {z};
    const Trace t = play_match(p4, all_pairs_distances(p4), Variant::Zombies, 1, pursuer, evader, options);
    REQUIRE(t.outcome == Outcome::Capture);
    const Vertex e = t.records[1].evader;
    CHECK(t.capture_round == table.capture_round(GameState{{z}, e, Turn::Pursuers}, 1));
  }
}

TEST_CASE("optimal survivor evades forever on C5") {
  const Graph c5 = testing::cycle(5);
  const auto table = solve_game(c5, Variant::Zombies, 1);
  OptimalPursuerPolicy pursuer(table);
  OptimalEvaderPolicy evader(table);
  MatchOptions options;
  options.round_limit = 200;
  const Trace t = play_match(c5, all_pairs_distances(c5), Variant::Zombies, 1, pursuer, evader, options);
  CHECK(t.outcome == Outcome::RoundLimit);
  CHECK(t.repeat_round.has_value());
}

TEST_CASE("state budget") {
  SolveOptions tight;
  tight.budget = 10;
  try {
    solve_game(testing::cycle(8), Variant::Zombies, 2, tight);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::StateBudgetExceeded);
  }
  CHECK_THROWS_AS(solve_game(Graph(3, EdgeList{{0, 1}}), Variant::Cops, 1), Error);
}
