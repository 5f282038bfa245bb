#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

using Vertex = int;
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

/// Undirected simple graph on dense vertex ids 0..n-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  /// Validating constructor; throws OutOfRange, SelfLoop or DuplicateEdge.
  Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
        std::map<Vertex, std::string> labels = {});

  int order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }

  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  int max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, sorted lexicographically.
  const EdgeList& edges() const noexcept { return edges_; }
  const std::map<Vertex, std::string>& labels() const noexcept { return labels_; }

  bool connected() const;

  /// Subgraph induced by `keep` (relabelled 0..|keep|-1 in the given order).
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  EdgeList edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::map<Vertex, std::string> labels_;
};

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

/// All-pairs hop distances. `kUnreachable` marks pairs in different components.
class DistanceMatrix {
 public:
  static constexpr int kUnreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), dist_(static_cast<std::size_t>(n) * n, kUnreachable) {}

  int order() const noexcept { return n_; }
  int operator()(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  int& at(Vertex u, Vertex v) { return dist_[index(u, v)]; }
  bool all_reachable() const;
  int max_entry() const;
  int eccentricity(Vertex v) const;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  int n_ = 0;
  std::vector<int> dist_;
};

DistanceMatrix all_pairs_distances(const Graph& g);
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Longest shortest-path distance. Throws Disconnected.
int diameter(const Graph& g);
int diameter(const Graph& g, const DistanceMatrix& d);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  EdgeList edges;                // u < v, sorted
  bool is_bridge() const { return vertices.size() == 2 && edges.size() == 1; }
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
  std::vector<std::vector<int>> blocks_of;  // per vertex, indices into blocks
};

/// Biconnected components and articulation points. Throws Disconnected.
BlockDecomposition blocks_and_cut_vertices(const Graph& g);

/// Boundary walk of the outer face of an outerplanar graph. Cut vertices
/// occur once per incident block, bridges are walked twice, and consecutive
/// occurrences of a cut vertex are joined by null chords.
struct Circuit {
  std::vector<Vertex> walk;                        // slot -> vertex, cyclic
  std::vector<std::pair<int, int>> chords;         // slot pairs, first < second
  std::vector<std::pair<int, int>> null_chords;    // slot pairs, first < second
  int duplicated_edges = 0;                        // bridges walked twice

  int length() const { return static_cast<int>(walk.size()); }
  int steps() const { return walk.size() >= 2 ? static_cast<int>(walk.size()) : 0; }
  int next(int slot, int dir = 1) const {
    const int L = length();
    return ((slot + dir) % L + L) % L;
  }
  std::vector<int> slots_of(Vertex v) const;
  /// Slots joined to `slot` by a chord or null chord.
  std::vector<int> chord_partners(int slot) const;
};

/// Throws NotOuterplanar or Disconnected.
Circuit outer_circuit(const Graph& g);
bool is_outerplanar(const Graph& g);

/// Hamiltonian outer cycle of a 2-connected outerplanar graph, starting at
/// vertex 0. Throws NotOuterplanar.
std::vector<Vertex> outer_cycle_of_biconnected(const Graph& g);

bool is_tree(const Graph& g);
bool is_cycle(const Graph& g);

}  // namespace pursuit
