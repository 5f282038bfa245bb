#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pursuit/constructions.hpp"
#include "pursuit/error.hpp"
#include "pursuit/graph.hpp"

using namespace pursuit;
using testing::make;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::ParseError;
}

std::set<std::pair<Vertex, Vertex>> cycle_edges(const std::vector<Vertex>& walk) {
  std::set<std::pair<Vertex, Vertex>> out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    const Vertex u = walk[i];
    const Vertex v = walk[(i + 1) % walk.size()];
    out.insert({std::min(u, v), std::max(u, v)});
  }
  return out;
}

}  // namespace

TEST_CASE("construction validates input") {
  const Graph k3 = make(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
  CHECK(make(1, {}).size() == 0);
  const Graph c5 = testing::cycle(5);
  CHECK(c5.size() == 5);
  for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

  CHECK(code_of([] { make(2, {{0, 2}}); }) == ErrorCode::OutOfRange);
  CHECK(code_of([] { make(2, {{1, 1}}); }) == ErrorCode::SelfLoop);
  CHECK(code_of([] { make(3, {{0, 1}, {1, 0}}); }) == ErrorCode::DuplicateEdge);
}

TEST_CASE("adjacency is symmetric and edges are normalised") {
  const Graph g = make(4, {{3, 0}, {2, 1}, {0, 1}});
  for (auto [u, v] : g.edges()) CHECK(u < v);
  CHECK(std::is_sorted(g.edges().begin(), g.edges().end()));
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v : g.neighbors(u)) CHECK(g.adjacent(v, u));
}

TEST_CASE("distances agree with Floyd-Warshall") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const Graph g = oracle::random_connected_graph(n, 0.2, rng);
    const auto d = all_pairs_distances(g);
    const auto want = oracle::floyd_warshall(g);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) REQUIRE(d(u, v) == want[u][v]);
  }
  const Graph p3 = testing::path(3);
  CHECK(all_pairs_distances(p3)(0, 2) == 2);
  const auto k5 = all_pairs_distances(testing::clique(5));
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v) CHECK(k5(u, v) == (u == v ? 0 : 1));
}

TEST_CASE("unreachable pairs and diameter") {
  const Graph split = make(4, {{0, 1}, {2, 3}});
  CHECK(all_pairs_distances(split)(0, 3) == DistanceMatrix::kUnreachable);
  CHECK(code_of([&] { diameter(split); }) == ErrorCode::Disconnected);
  CHECK(diameter(testing::cycle(6)) == 3);
  CHECK(diameter(testing::clique(4)) == 1);
  CHECK(diameter(testing::path(8)) == 7);
}

TEST_CASE("blocks and cut vertices") {
  const auto bowtie = blocks_and_cut_vertices(testing::bowtie_graph());
  CHECK(bowtie.blocks.size() == 2);
  CHECK(bowtie.cut_vertices == std::vector<Vertex>{2});

  const auto c5 = blocks_and_cut_vertices(testing::cycle(5));
  CHECK(c5.blocks.size() == 1);
  CHECK(c5.cut_vertices.empty());

  const auto p4 = blocks_and_cut_vertices(testing::path(4));
  CHECK(p4.blocks.size() == 3);
  CHECK(std::all_of(p4.blocks.begin(), p4.blocks.end(), [](const Block& b) { return b.is_bridge(); }));
  CHECK(p4.cut_vertices == std::vector<Vertex>{1, 2});
}

TEST_CASE("outer circuit of a cycle and a fan") {
  const Circuit c5 = outer_circuit(testing::cycle(5));
  CHECK(c5.length() == 5);
  CHECK(c5.chords.empty());
  CHECK(c5.null_chords.empty());

  const Graph f6 = testing::fan(6);
  const Circuit f = outer_circuit(f6);
  CHECK(f.length() == 6);
  CHECK(f.null_chords.empty());
  std::set<std::pair<Vertex, Vertex>> chords;
  for (auto [a, b] : f.chords) {
    const Vertex u = f.walk[static_cast<std::size_t>(a)];
    const Vertex v = f.walk[static_cast<std::size_t>(b)];
    chords.insert({std::min(u, v), std::max(u, v)});
  }
  CHECK(chords == std::set<std::pair<Vertex, Vertex>>{{1, 5}, {2, 5}, {3, 5}});
  const auto hamiltonian = oracle::hamiltonian_cycles(f6);
  REQUIRE(hamiltonian.size() == 1);
  CHECK(cycle_edges(f.walk) == hamiltonian.front());
}

TEST_CASE("outer circuit stitches blocks at cut vertices") {
  const Circuit c = outer_circuit(testing::bowtie_graph());
  CHECK(c.length() == 6);
  CHECK(c.slots_of(2).size() == 2);
  REQUIRE(c.null_chords.size() == 1);
  const auto [a, b] = c.null_chords.front();
  CHECK(c.walk[static_cast<std::size_t>(a)] == 2);
  CHECK(c.walk[static_cast<std::size_t>(b)] == 2);
}

TEST_CASE("circuit invariants on random outerplanar graphs") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    StandardOptions options;
    options.seed = seed;
    const int n = 3 + static_cast<int>(seed % 10);
    const Graph g = standard_graph(StandardKind::RandomOuterplanar, n, options);
    const Circuit c = outer_circuit(g);
    std::set<std::pair<Vertex, Vertex>> covered;
    for (int i = 0; i < c.length(); ++i) {
      const Vertex u = c.walk[static_cast<std::size_t>(i)];
      const Vertex v = c.walk[static_cast<std::size_t>(c.next(i))];
      REQUIRE(g.adjacent(u, v));
      covered.insert({std::min(u, v), std::max(u, v)});
    }
    for (auto [a, b] : c.chords) {
      const Vertex u = c.walk[static_cast<std::size_t>(a)];
      const Vertex v = c.walk[static_cast<std::size_t>(b)];
      REQUIRE(g.adjacent(u, v));
      covered.insert({std::min(u, v), std::max(u, v)});
    }
    for (auto [a, b] : c.null_chords) REQUIRE(c.walk[static_cast<std::size_t>(a)] == c.walk[static_cast<std::size_t>(b)]);
    CHECK(covered.size() == g.size());

    if (blocks_and_cut_vertices(g).cut_vertices.empty()) {
      const auto hamiltonian = oracle::hamiltonian_cycles(g);
      REQUIRE(hamiltonian.size() == 1);
      CHECK(cycle_edges(outer_cycle_of_biconnected(g)) == hamiltonian.front());
    }
  }
}

TEST_CASE("outerplanarity rejects K4 and K2,3") {
  CHECK_FALSE(is_outerplanar(testing::clique(4)));
  CHECK_FALSE(is_outerplanar(make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}})));
  CHECK(code_of([] { outer_circuit(testing::clique(4)); }) == ErrorCode::NotOuterplanar);
  CHECK(is_outerplanar(testing::fan(9)));
}

TEST_CASE("tree and cycle recognition") {
  CHECK(is_tree(testing::path(5)));
  CHECK_FALSE(is_tree(testing::cycle(5)));
  CHECK(is_cycle(testing::cycle(5)));
  CHECK_FALSE(is_cycle(testing::fan(5)));
}
