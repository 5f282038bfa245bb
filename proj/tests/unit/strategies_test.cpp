#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pursuit/constructions.hpp"
#include "pursuit/decomposition.hpp"
#include "pursuit/error.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"

using namespace pursuit;

namespace {

Trace against_optimal(const Graph& g, PursuerPolicy& pursuers, int k, std::vector<Vertex> placements = {},
                      int rounds = 1000) {
  const auto table = solve_game(g, Variant::LazyZombies, k);
  OptimalEvaderPolicy survivor(table);
  MatchOptions options;
  options.round_limit = rounds;
  if (!placements.empty()) {
    options.placement = PlacementMode::Adversarial;
    options.placements = std::move(placements);
  }
  return play_match(g, all_pairs_distances(g), Variant::LazyZombies, k, pursuers, survivor, options);
}

CutDecomposition single(const Graph& g) {
  CutDecomposition d;
  d.nodes.push_back({-1, {}});
  for (Vertex v = 0; v < g.order(); ++v) d.nodes[0].container.push_back(v);
  return d;
}

}  // namespace

TEST_CASE("two lazy zombies sweep fans in under 2n rounds") {
  for (int n = 4; n <= 12; ++n) {
    CAPTURE(n);
    const Graph f = testing::fan(n);
    OuterplanarLazyPolicy policy(f, false);
    const Trace t = against_optimal(f, policy, 2);
    REQUIRE(t.outcome == Outcome::Capture);
    CHECK(t.capture_round < 2 * n);
  }
}

TEST_CASE("two lazy zombies squeeze a cycle") {
  const Graph c8 = testing::cycle(8);
  OuterplanarLazyPolicy policy(c8, false);
  const Trace t = against_optimal(c8, policy, 2);
  CHECK(t.outcome == Outcome::Capture);
  CHECK(t.capture_round < 16);
}

TEST_CASE("sweep on random outerplanar graphs with cut vertices") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    StandardOptions options;
    options.seed = seed;
    options.chord_keep_probability = 0.3;
    const int n = 5 + static_cast<int>(seed % 7);
    const Graph g = standard_graph(StandardKind::RandomOuterplanar, n, options);
    CAPTURE(seed);
    OuterplanarLazyPolicy policy(g, false);
    const Trace t = against_optimal(g, policy, 2);
    REQUIRE(t.outcome == Outcome::Capture);
    CHECK(t.capture_round < 2 * n);
  }
  // Two triangles and a pendant path hanging off shared cut vertices.
  const Graph g = testing::make(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}});
  OuterplanarLazyPolicy policy(g, false);
  CHECK(against_optimal(g, policy, 2).outcome == Outcome::Capture);
}

TEST_CASE("any start: every placement pair on small fans") {
  for (int n = 4; n <= 8; ++n) {
    const Graph f = testing::fan(n);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b) {
        OuterplanarLazyPolicy policy(f, true);
        const Trace t = against_optimal(f, policy, 2, {a, b});
        REQUIRE(t.outcome == Outcome::Capture);
      }
  }
}

TEST_CASE("any start: both zombies on one vertex of C7") {
  const Graph c7 = testing::cycle(7);
  for (Vertex v = 0; v < 7; ++v) {
    OuterplanarLazyPolicy policy(c7, true);
    CHECK(against_optimal(c7, policy, 2, {v, v}).outcome == Outcome::Capture);
  }
}

TEST_CASE("a single lazy zombie clears a tree") {
  const Graph tree = testing::make(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  for (Vertex v = 0; v < 7; ++v) {
    OuterplanarLazyPolicy policy(tree, true);
    CHECK(against_optimal(tree, policy, 1, {v}).outcome == Outcome::Capture);
  }
}

TEST_CASE("outerplanar policy rejects other graphs") {
  CHECK_THROWS_AS(OuterplanarLazyPolicy(testing::clique(4), false), Error);
  const Graph c5 = testing::cycle(5);
  OuterplanarLazyPolicy policy(c5, false);
  try {
    against_optimal(c5, policy, 1);
    FAIL("one zombie accepted on a cycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InsufficientZombies);
  }
}

TEST_CASE("cut decomposition zombies on cliques and paths") {
  const Graph k5 = testing::clique(5);
  CutDecompositionPolicy all(k5, single(k5));
  CHECK(all.required_zombies() == 5);
  const Trace t = against_optimal(k5, all, 5);
  REQUIRE(t.outcome == Outcome::Capture);
  CHECK(t.capture_round <= 2);  // time(root) + 1 with time = 5 * 0 + 1

  const Graph p7 = testing::path(7);
  const auto d = td_tree_to_cut_decomposition(treedepth(p7).tree);
  CutDecompositionPolicy policy(p7, d);
  CHECK(policy.required_zombies() == 3);
  const Trace tp = against_optimal(p7, policy, 3);
  REQUIRE(tp.outcome == Outcome::Capture);
  CHECK(BigInt(tp.capture_round) <= time_bound(p7, d) + 1);
  CHECK(policy.peak_assigned() <= 3);
}

TEST_CASE("cut decomposition zombies on random graphs") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    StandardOptions options;
    options.seed = rng();
    const Graph g = standard_graph(StandardKind::RandomConnected, n, options);
    const auto d = td_tree_to_cut_decomposition(treedepth(g).tree);
    const int k = load(g, d);
    if (estimated_state_edges(g, k) > default_state_budget()) continue;
    CutDecompositionPolicy policy(g, d);
    const Trace t = against_optimal(g, policy, k);
    REQUIRE(t.outcome == Outcome::Capture);
    CHECK(BigInt(t.capture_round) <= time_bound(g, d) + 1);
  }
}

TEST_CASE("clique cover zombies") {
  for (int n = 2; n <= 8; ++n) {
    const Graph k = testing::clique(n);
    CliqueCoverPolicy policy(k, single(k));
    CHECK(policy.required_zombies() == 1);
    const Trace t = against_optimal(k, policy, 1);
    REQUIRE(t.outcome == Outcome::Capture);
    CHECK(t.capture_round <= 2);
  }
  const Graph p3 = testing::path(3);
  CutDecomposition split;
  split.nodes = {{-1, {1}}, {0, {0}}, {0, {2}}};
  CliqueCoverPolicy singletons(p3, split);
  CHECK(singletons.required_zombies() == 2);
  CHECK(against_optimal(p3, singletons, 2).outcome == Outcome::Capture);

  std::vector<std::vector<std::vector<Vertex>>> not_a_cover{{{0, 2}, {1}}};
  CHECK_THROWS_AS(CliqueCoverPolicy(p3, single(p3), not_a_cover), Error);
}

TEST_CASE("policy names resolve") {
  CHECK(parse_pursuer_kind("thm6") == PursuerKind::Outerplanar);
  CHECK(parse_pursuer_kind("cor1") == PursuerKind::OuterplanarUniversal);
  CHECK(parse_pursuer_kind("thm7") == PursuerKind::CutDecomposition);
  CHECK(parse_pursuer_kind("thm9") == PursuerKind::CliqueCover);
  CHECK(parse_pursuer_kind("optimal") == PursuerKind::Optimal);
  CHECK_FALSE(parse_pursuer_kind("random").has_value());
}
