#include "pursuit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "pursuit/error.hpp"

namespace pursuit {

Graph::Graph(int n, std::span<const std::pair<Vertex, Vertex>> edges,
             std::map<Vertex, std::string> labels)
    : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))), labels_(std::move(labels)) {
  if (n < 0) throw Error(ErrorCode::OutOfRange, "negative vertex count");
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::OutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "vertex " + std::to_string(u));
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "(" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
  }
  for (auto [u, v] : edges_) {
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  for (const auto& [v, _] : labels_) {
    if (v < 0 || v >= n) throw Error(ErrorCode::OutOfRange, "label for vertex " + std::to_string(v));
  }
}

Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges) { return Graph(n, edges); }

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::connected() const {
  if (n_ <= 1) return true;
  auto d = bfs_distances(*this, 0);
  return std::none_of(d.begin(), d.end(), [](int x) { return x == DistanceMatrix::kUnreachable; });
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> local(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) local[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  EdgeList sub;
  for (auto [u, v] : edges_) {
    int a = local[static_cast<std::size_t>(u)], b = local[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) sub.emplace_back(a, b);
  }
  return Graph(static_cast<int>(keep.size()), sub);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), DistanceMatrix::kUnreachable);
  std::deque<Vertex> queue{source};
  dist[static_cast<std::size_t>(source)] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (dist[static_cast<std::size_t>(w)] == DistanceMatrix::kUnreachable) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool DistanceMatrix::all_reachable() const {
  return std::none_of(dist_.begin(), dist_.end(), [](int x) { return x == kUnreachable; });
}

int DistanceMatrix::max_entry() const {
  return dist_.empty() ? 0 : *std::max_element(dist_.begin(), dist_.end());
}

int DistanceMatrix::eccentricity(Vertex v) const {
  int best = 0;
  for (Vertex u = 0; u < n_; ++u) best = std::max(best, (*this)(v, u));
  return best;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix d(g.order());
  for (Vertex s = 0; s < g.order(); ++s) {
    auto row = bfs_distances(g, s);
    for (Vertex t = 0; t < g.order(); ++t) d.at(s, t) = row[static_cast<std::size_t>(t)];
  }
  return d;
}

int diameter(const Graph& g, const DistanceMatrix& d) {
  if (!d.all_reachable()) throw Error(ErrorCode::Disconnected, "diameter of a disconnected graph");
  (void)g;
  return d.max_entry();
}

int diameter(const Graph& g) { return diameter(g, all_pairs_distances(g)); }

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "block decomposition needs a connected graph");
  const int n = g.order();
  BlockDecomposition out;
  out.blocks_of.assign(static_cast<std::size_t>(n), {});
  std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> is_cut(static_cast<std::size_t>(n), false);
  std::vector<std::pair<Vertex, Vertex>> stack;
  int timer = 0;

  auto pop_block = [&](Vertex u, Vertex w) {
    Block block;
    std::set<Vertex> verts;
    while (true) {
      auto e = stack.back();
      stack.pop_back();
      block.edges.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == std::make_pair(u, w)) break;
    }
    block.vertices.assign(verts.begin(), verts.end());
    std::sort(block.edges.begin(), block.edges.end());
    out.blocks.push_back(std::move(block));
  };

  std::function<void(Vertex, Vertex)> dfs = [&](Vertex u, Vertex parent) {
    disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
    int children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (w == parent) continue;
      if (disc[static_cast<std::size_t>(w)] == -1) {
        ++children;
        stack.emplace_back(u, w);
        dfs(w, u);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(w)]);
        if (low[static_cast<std::size_t>(w)] >= disc[static_cast<std::size_t>(u)]) {
          if (parent != -1 || children > 1) is_cut[static_cast<std::size_t>(u)] = true;
          pop_block(u, w);
        }
      } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
        stack.emplace_back(u, w);
        low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
      }
    }
  };
  if (n > 0) dfs(0, -1);

  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    for (Vertex v : out.blocks[b].vertices) out.blocks_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(b));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
  }
  return out;
}

namespace {

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

}  // namespace

std::vector<Vertex> outer_cycle_of_biconnected(const Graph& g) {
  const int n = g.order();
  if (n < 3) throw Error(ErrorCode::NotOuterplanar, "block with fewer than 3 vertices has no outer cycle");
  if (static_cast<int>(g.size()) > 2 * n - 3) throw Error(ErrorCode::NotOuterplanar, "more than 2n-3 edges");

  // Repeatedly remove a degree-2 vertex, replacing it by an edge between its
  // neighbours when they are not adjacent; reinsert in reverse order.
  std::vector<std::set<Vertex>> work(static_cast<std::size_t>(n));
  for (auto [u, v] : g.edges()) {
    work[static_cast<std::size_t>(u)].insert(v);
    work[static_cast<std::size_t>(v)].insert(u);
  }
  std::vector<bool> alive(static_cast<std::size_t>(n), true);
  struct Removal { Vertex v, a, b; };
  std::vector<Removal> removed;
  int remaining = n;
  while (remaining > 3) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (alive[static_cast<std::size_t>(v)] && work[static_cast<std::size_t>(v)].size() == 2) {
        pick = v;
        break;
      }
    }
    if (pick == -1) throw Error(ErrorCode::NotOuterplanar, "no vertex of degree 2 in a 2-connected piece");
    Vertex a = *work[static_cast<std::size_t>(pick)].begin();
    Vertex b = *work[static_cast<std::size_t>(pick)].rbegin();
    work[static_cast<std::size_t>(a)].erase(pick);
    work[static_cast<std::size_t>(b)].erase(pick);
    work[static_cast<std::size_t>(pick)].clear();
    work[static_cast<std::size_t>(a)].insert(b);
    work[static_cast<std::size_t>(b)].insert(a);
    alive[static_cast<std::size_t>(pick)] = false;
    removed.push_back({pick, a, b});
    --remaining;
  }
  std::vector<Vertex> cycle;
  for (Vertex v = 0; v < n; ++v) {
    if (alive[static_cast<std::size_t>(v)]) cycle.push_back(v);
  }
  for (Vertex v : cycle) {
    if (work[static_cast<std::size_t>(v)].size() != 2) throw Error(ErrorCode::NotOuterplanar, "core is not a triangle");
  }
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    const std::size_t L = cycle.size();
    bool inserted = false;
    for (std::size_t i = 0; i < L; ++i) {
      Vertex x = cycle[i], y = cycle[(i + 1) % L];
      if ((x == it->a && y == it->b) || (x == it->b && y == it->a)) {
        cycle.insert(cycle.begin() + static_cast<std::ptrdiff_t>(i + 1), it->v);
        inserted = true;
        break;
      }
    }
    if (!inserted) throw Error(ErrorCode::NotOuterplanar, "reduction edge left the outer cycle");
  }

  // Certify: Hamiltonian cycle of g whose remaining edges are pairwise non-crossing chords.
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < cycle.size(); ++i) pos[static_cast<std::size_t>(cycle[i])] = static_cast<int>(i);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) {
      throw Error(ErrorCode::NotOuterplanar, "no Hamiltonian outer cycle");
    }
  }
  std::vector<std::pair<int, int>> chords;
  for (auto [u, v] : g.edges()) {
    int p = pos[static_cast<std::size_t>(u)], q = pos[static_cast<std::size_t>(v)];
    if (p > q) std::swap(p, q);
    if (q - p == 1 || (p == 0 && q == n - 1)) continue;
    chords.emplace_back(p, q);
  }
  for (std::size_t i = 0; i < chords.size(); ++i) {
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      if (chords_cross(chords[i], chords[j])) throw Error(ErrorCode::NotOuterplanar, "crossing chords");
    }
  }
  auto start = std::find(cycle.begin(), cycle.end(), 0);
  std::rotate(cycle.begin(), start, cycle.end());
  return cycle;
}

std::vector<int> Circuit::slots_of(Vertex v) const {
  std::vector<int> out;
  for (int i = 0; i < length(); ++i) {
    if (walk[static_cast<std::size_t>(i)] == v) out.push_back(i);
  }
  return out;
}

std::vector<int> Circuit::chord_partners(int slot) const {
  std::vector<int> out;
  for (const auto* list : {&chords, &null_chords}) {
    for (auto [a, b] : *list) {
      if (a == slot) out.push_back(b);
      if (b == slot) out.push_back(a);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Circuit outer_circuit(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::BadParameter, "empty graph");
  if (static_cast<int>(g.size()) > std::max(2 * n - 3, n - 1)) {
    throw Error(ErrorCode::NotOuterplanar, "more than 2n-3 edges");
  }
  BlockDecomposition bd = blocks_and_cut_vertices(g);
  Circuit circuit;
  if (n == 1) {
    circuit.walk = {0};
    return circuit;
  }

  // Cyclic vertex order of every block.
  std::vector<std::vector<Vertex>> order(bd.blocks.size());
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    const Block& block = bd.blocks[b];
    if (block.is_bridge()) {
      order[b] = block.vertices;
      ++circuit.duplicated_edges;
      continue;
    }
    Graph local = g.induced(block.vertices);
    for (Vertex v : outer_cycle_of_biconnected(local)) order[b].push_back(block.vertices[static_cast<std::size_t>(v)]);
  }

  std::vector<bool> visited(bd.blocks.size(), false);
  std::vector<std::map<Vertex, int>> block_slot(bd.blocks.size());
  auto& walk = circuit.walk;

  std::function<void(Vertex, int)> expand;
  std::function<void(int, Vertex)> tour = [&](int b, Vertex entry) {
    visited[static_cast<std::size_t>(b)] = true;
    auto cyc = order[static_cast<std::size_t>(b)];
    std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), entry), cyc.end());
    block_slot[static_cast<std::size_t>(b)][entry] = static_cast<int>(walk.size()) - 1;
    for (std::size_t i = 1; i < cyc.size(); ++i) {
      walk.push_back(cyc[i]);
      block_slot[static_cast<std::size_t>(b)][cyc[i]] = static_cast<int>(walk.size()) - 1;
      expand(cyc[i], b);
    }
  };
  expand = [&](Vertex x, int parent_block) {
    for (int b : bd.blocks_of[static_cast<std::size_t>(x)]) {
      if (b == parent_block || visited[static_cast<std::size_t>(b)]) continue;
      tour(b, x);
      walk.push_back(x);
    }
  };
  walk.push_back(0);
  expand(0, -1);
  walk.pop_back();

  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    const auto& cyc = order[b];
    std::set<std::pair<Vertex, Vertex>> on_cycle;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      Vertex u = cyc[i], v = cyc[(i + 1) % cyc.size()];
      on_cycle.emplace(std::min(u, v), std::max(u, v));
    }
    for (auto e : bd.blocks[b].edges) {
      if (on_cycle.count(e)) continue;
      int p = block_slot[b].at(e.first), q = block_slot[b].at(e.second);
      circuit.chords.emplace_back(std::min(p, q), std::max(p, q));
    }
  }
  for (Vertex v : bd.cut_vertices) {
    auto slots = circuit.slots_of(v);
    const std::size_t r = slots.size();
    for (std::size_t i = 0; i + 1 < r; ++i) circuit.null_chords.emplace_back(slots[i], slots[i + 1]);
    if (r >= 3) circuit.null_chords.emplace_back(slots.front(), slots.back());
  }
  std::sort(circuit.chords.begin(), circuit.chords.end());
  std::sort(circuit.null_chords.begin(), circuit.null_chords.end());
  return circuit;
}

bool is_outerplanar(const Graph& g) {
  try {
    outer_circuit(g);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotOuterplanar) return false;
    throw;
  }
}

bool is_tree(const Graph& g) { return g.connected() && static_cast<int>(g.size()) == g.order() - 1; }

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !g.connected() || static_cast<int>(g.size()) != g.order()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

}  // namespace pursuit
