#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pursuit/decomposition.hpp"
#include "pursuit/error.hpp"

using namespace pursuit;

namespace {

CutDecomposition single(const Graph& g) {
  CutDecomposition d;
  CutNode root;
  for (Vertex v = 0; v < g.order(); ++v) root.container.push_back(v);
  d.nodes.push_back(root);
  return d;
}

// P3 with the middle vertex at the root and each end as a leaf.
CutDecomposition p3_split() {
  CutDecomposition d;
  d.nodes = {{-1, {1}}, {0, {0}}, {0, {2}}};
  return d;
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(static_cast<std::size_t>(g.order()));
  for (Vertex i = 0; i < g.order(); ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

}  // namespace

TEST_CASE("cut decomposition validation") {
  const Graph p3 = testing::path(3);
  CHECK(validate_cut_decomposition(p3, single(p3)).ok);
  CHECK(validate_cut_decomposition(p3, p3_split()).ok);

  CutDecomposition bad;
  bad.nodes = {{-1, {0}}, {0, {1, 2}}};
  const auto r = validate_cut_decomposition(p3, bad);
  CHECK_FALSE(r.ok);
  CHECK_FALSE(r.violation.empty());

  CutDecomposition overlap;
  overlap.nodes = {{-1, {1}}, {0, {0, 1}}, {0, {2}}};
  CHECK_FALSE(validate_cut_decomposition(p3, overlap).ok);
  CHECK_THROWS_AS(load(p3, bad), Error);
}

TEST_CASE("load and time") {
  for (int n = 2; n <= 7; ++n) {
    const Graph k = testing::clique(n);
    CHECK(load(k, single(k)) == n);
    CHECK(load_star(k, single(k)) == 1);
    CHECK(time_star(k, single(k)) == 2);
  }
  const Graph p3 = testing::path(3);
  CHECK(load(p3, p3_split()) == 2);
  CHECK(load_star(p3, p3_split()) == 2);
  const Graph c4 = testing::cycle(4);
  CHECK(time_bound(c4, single(c4)) == 5);
}

TEST_CASE("clique cover numbers") {
  CHECK(clique_cover_number(testing::clique(5), all_vertices(testing::clique(5))) == 1);
  const Graph empty(6, EdgeList{});
  CHECK(clique_cover_number(empty, all_vertices(empty)) == 6);
  CHECK(clique_cover_number(testing::cycle(5), all_vertices(testing::cycle(5))) == 3);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_connected_graph(std::uniform_int_distribution<int>(1, 9)(rng), 0.45, rng);
    const auto vs = all_vertices(g);
    const auto cover = clique_cover(g, vs);
    CHECK(static_cast<int>(cover.size()) == oracle::clique_cover_number(g, vs));
    std::vector<int> hits(static_cast<std::size_t>(g.order()), 0);
    for (const auto& clique : cover) {
      for (Vertex u : clique) {
        ++hits[static_cast<std::size_t>(u)];
        for (Vertex w : clique)
          if (u != w) REQUIRE(g.adjacent(u, w));
      }
    }
    for (int h : hits) CHECK(h == 1);
  }
  const Graph big(13, EdgeList{});
  CHECK_THROWS_AS(clique_cover(big, all_vertices(big)), Error);
}

TEST_CASE("treedepth") {
  CHECK(treedepth(Graph(1, EdgeList{})).value == 1);
  CHECK(treedepth(testing::clique(4)).value == 4);
  const auto p7 = treedepth(testing::path(7));
  CHECK(p7.value == 3);
  CHECK(validate_treedepth_tree(testing::path(7), p7.tree).ok);
  CHECK(p7.tree.height() == 3);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_connected_graph(std::uniform_int_distribution<int>(1, 9)(rng), 0.25, rng);
    const auto td = treedepth(g);
    REQUIRE(td.value == oracle::treedepth(g));
    CHECK(validate_treedepth_tree(g, td.tree).ok);
    CHECK(td.tree.height() == td.value);
  }
}

TEST_CASE("treedepth tree validation") {
  const Graph p3 = testing::path(3);
  TreedepthTree star{{1, -1, 1}, 1};
  CHECK(validate_treedepth_tree(p3, star).ok);
  TreedepthTree wrong{{-1, 0, 0}, 0};  // edge 1-2 joins siblings
  CHECK_FALSE(validate_treedepth_tree(p3, wrong).ok);
}

TEST_CASE("tree and decomposition conversions") {
  // A single chain compresses to one container holding everything.
  TreedepthTree chain{{-1, 0, 1, 2}, 0};
  const auto one = td_tree_to_cut_decomposition(chain);
  CHECK(one.size() == 1);
  CHECK(one.nodes[0].container.size() == 4);
  CHECK(load(testing::clique(4), one) == 4);

  const Graph p3 = testing::path(3);
  const auto opt = treedepth(p3);
  const auto d = td_tree_to_cut_decomposition(opt.tree);
  CHECK(d.size() == 3);
  CHECK(d.nodes[static_cast<std::size_t>(d.root())].container == std::vector<Vertex>{1});
  CHECK(load(p3, d) == 2);

  const auto back = cut_decomposition_to_td_tree(p3_split());
  CHECK(back.root == 1);
  CHECK(back.height() == 2);

  const Graph k3 = testing::clique(3);
  const auto path_tree = cut_decomposition_to_td_tree(single(k3));
  CHECK(validate_treedepth_tree(k3, path_tree).ok);
  CHECK(path_tree.height() == 3);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected_graph(std::uniform_int_distribution<int>(1, 8)(rng), 0.3, rng);
    const auto best = treedepth(g);
    const auto compressed = td_tree_to_cut_decomposition(best.tree);
    REQUIRE(validate_cut_decomposition(g, compressed).ok);
    CHECK(load(g, compressed) == oracle::treedepth(g));
    CHECK(cut_decomposition_to_td_tree(compressed).height() == best.tree.height());

    const auto random = random_cut_decomposition(g, rng);
    REQUIRE(validate_cut_decomposition(g, random).ok);
    const auto expanded = cut_decomposition_to_td_tree(random);
    CHECK(validate_treedepth_tree(g, expanded).ok);
    CHECK(oracle::treedepth(g) <= load(g, random));
    CHECK(load_star(g, random) <= load(g, random));
  }
}

TEST_CASE("treewidth") {
  CHECK(treewidth_exact(testing::path(6)) == 1);
  CHECK(treewidth_exact(testing::clique(5)) == 4);
  CHECK(treewidth_exact(testing::cycle(6)) == 2);
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_connected_graph(std::uniform_int_distribution<int>(1, 9)(rng), 0.35, rng);
    REQUIRE(treewidth_exact(g) == oracle::treewidth(g));
  }
  CHECK_THROWS_AS(treewidth_exact(testing::path(15)), Error);
}

TEST_CASE("alpha separators and the separator chain") {
  const Rational half(1, 2);
  const Graph p3 = testing::path(3);
  const auto all3 = all_vertices(p3);
  CHECK(min_alpha_separator(p3, all3, half) == std::vector<Vertex>{1});
  const Graph k4 = testing::clique(4);
  CHECK(min_alpha_separator(k4, all_vertices(k4), half).size() == 2);
  const Graph one(1, EdgeList{});
  const Vertex only[] = {0};
  CHECK(min_alpha_separator(one, only, half).size() == 1);

  const auto p8 = check_separator_chain(testing::path(8));
  CHECK(p8.separation_number == 1);
  CHECK(p8.treedepth == 4);
  CHECK(p8.holds());
  const auto k5 = check_separator_chain(testing::clique(5));
  CHECK(k5.separation_number == 3);
  CHECK(k5.treedepth == 5);
  CHECK(k5.holds());
  CHECK(check_separator_chain(testing::cycle(6)).holds());
}
