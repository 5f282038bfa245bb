#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct CheckResult {
  bool ok = true;
  std::string violation;  // first violation found, empty when ok
  explicit operator bool() const noexcept { return ok; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// Rooted forest on V(G) given by parent pointers (-1 marks a root). A graph
/// is covered when every edge joins an ancestor-descendant pair.
struct TreedepthTree {
  std::vector<Vertex> parent;
  Vertex root = -1;

  int order() const noexcept { return static_cast<int>(parent.size()); }
  std::vector<Vertex> roots() const;
  std::vector<std::vector<Vertex>> children() const;
  /// Number of vertices on the longest root-to-leaf chain.
  int height() const;
  bool is_ancestor(Vertex a, Vertex b) const;  // a == b counts
};

/// Structure (single parent chain per vertex, no cycles) plus closure cover of g.
CheckResult validate_treedepth_tree(const Graph& g, const TreedepthTree& t);

struct CutNode {
  int parent = -1;
  std::vector<Vertex> container;
};

/// Nodes are indexed 0..size-1; exactly one node has parent -1.
struct CutDecomposition {
  std::vector<CutNode> nodes;

  int size() const noexcept { return static_cast<int>(nodes.size()); }
  int root() const;
  std::vector<std::vector<int>> children() const;
  /// Edges on the longest root-to-leaf path of X.
  int height() const;
  /// Largest container.
  int cdw() const;
  /// Container node of each vertex of a graph with n vertices (-1 if absent).
  std::vector<int> node_of(int n) const;
  /// Root-first list of nodes from the root down to x.
  std::vector<int> path_from_root(int x) const;
  /// Union of containers in the subtree of x.
  std::vector<Vertex> subtree_vertices(int x) const;
  bool is_ancestor(int a, int b) const;  // a == b counts
};

CheckResult validate_cut_decomposition(const Graph& g, const CutDecomposition& d);

/// Recursive load and time at the root; throw InvalidDecomposition when d is not valid for g.
int load(const Graph& g, const CutDecomposition& d);
BigInt time_bound(const Graph& g, const CutDecomposition& d);
int load_star(const Graph& g, const CutDecomposition& d);
BigInt time_star(const Graph& g, const CutDecomposition& d);

/// Per-node recursive values, indexed like d.nodes (d assumed valid).
std::vector<int> node_loads(const CutDecomposition& d);
std::vector<int> node_loads_star(const Graph& g, const CutDecomposition& d);

constexpr int kCliqueCoverLimit = 12;
constexpr int kTreedepthLimit = 14;
constexpr int kSeparatorLimit = 16;
constexpr int kProfileLimit = 10;

/// Minimum partition of s into cliques of G[s]. Throws SetTooLarge.
std::vector<std::vector<Vertex>> clique_cover(const Graph& g, std::span<const Vertex> s,
                                              int limit = kCliqueCoverLimit);
int clique_cover_number(const Graph& g, std::span<const Vertex> s, int limit = kCliqueCoverLimit);

struct TreedepthResult {
  int value = 0;
  TreedepthTree tree;
};

/// Exact treedepth by memoised recursion over vertex subsets. Throws TooLarge.
TreedepthResult treedepth(const Graph& g, int limit = kTreedepthLimit);

/// Compresses maximal unary chains of t into containers. Throws InvalidTree.
CutDecomposition td_tree_to_cut_decomposition(const TreedepthTree& t);
/// Expands each container into a chain (largest id nearest the root). Throws InvalidDecomposition.
TreedepthTree cut_decomposition_to_td_tree(const CutDecomposition& d);

/// Exact treewidth by subset dynamic programming. Throws TooLarge.
int treewidth_exact(const Graph& g, int limit = kTreedepthLimit);

/// Smallest S within a such that every component of G[a - S] has at most
/// alpha*|a| vertices; ties resolved by the lexicographically first set.
std::vector<Vertex> min_alpha_separator(const Graph& g, std::span<const Vertex> a, const Rational& alpha,
                                        int limit = kSeparatorLimit);

/// s_G(i) for i = 0..n with alpha = 1/2.
std::vector<int> separation_profile(const Graph& g, int limit = kProfileLimit);

struct SeparatorChainReport {
  int n = 0;
  int separation_number = 0;  // s_G(n)
  int treedepth = 0;
  int separator_sum = 0;      // sum over i = 0..floor(log2 n) of s_G(floor(n / 2^i))
  int treewidth = 0;
  double treewidth_bound = 0;  // (tw + 1) * log2 n
  std::vector<int> profile;
  bool first_holds = false;   // s_G(n) <= td
  bool second_holds = false;  // td <= separator_sum
  bool third_holds = false;   // separator_sum <= treewidth_bound
  bool holds() const { return first_holds && second_holds && third_holds; }
};

SeparatorChainReport check_separator_chain(const Graph& g, int limit = kProfileLimit);

/// Random valid decomposition: random cut sets, one child per remaining component.
CutDecomposition random_cut_decomposition(const Graph& g, std::mt19937_64& rng, double leaf_probability = 0.25);

}  // namespace pursuit
