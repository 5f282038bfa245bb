#pragma once

// Brute-force reference computations used by the tests. Each one is written
// from the definitions only and shares no code with the library beyond the
// Graph and Point containers.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/geometry.hpp"
#include "pursuit/graph.hpp"

namespace oracle {

using pursuit::Graph;
using pursuit::Vertex;
using pursuit::geometry::Point;
using pursuit::geometry::Rational;

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Matrix a(n, std::vector<bool>(n, false));
  for (auto [u, v] : g.edges()) {
    a[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    a[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return a;
}

inline constexpr int kInfinity = 1 << 20;

inline std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
  const int n = g.order();
  const Matrix a = adjacency(g);
  std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), kInfinity));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) d[i][j] = 0;
      else if (a[i][j]) d[i][j] = 1;
    }
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

// ---------------------------------------------------------------- random graphs

inline Graph random_connected_graph(int n, double extra, std::mt19937_64& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (u != v && seen.insert({u, v}).second) edges.emplace_back(u, v);
  };
  for (Vertex v = 1; v < n; ++v) add(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::bernoulli_distribution coin(extra);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) add(u, v);
  return Graph(n, edges);
}

// ---------------------------------------------------------------- treedepth

/// td(empty) = 0; a disconnected graph takes the maximum over its
/// components; a connected one is 1 + min over v of td(G - v).
class Treedepth {
 public:
  explicit Treedepth(const Graph& g) : n_(g.order()), adj_(adjacency(g)) {}

  int value() { return solve(n_ == 0 ? 0 : (std::uint32_t{1} << n_) - 1); }

 private:
  std::vector<std::uint32_t> components(std::uint32_t set) const {
    std::vector<std::uint32_t> out;
    std::uint32_t left = set;
    while (left) {
      const int start = __builtin_ctz(left);
      std::uint32_t comp = std::uint32_t{1} << start;
      std::vector<int> stack{start};
      while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (int w = 0; w < n_; ++w) {
          const std::uint32_t bit = std::uint32_t{1} << w;
          if ((set & bit) && !(comp & bit) && adj_[u][w]) {
            comp |= bit;
            stack.push_back(w);
          }
        }
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  int solve(std::uint32_t set) {
    if (set == 0) return 0;
    if (const auto it = memo_.find(set); it != memo_.end()) return it->second;
    const auto comps = components(set);
    int best = 0;
    if (comps.size() > 1) {
      for (auto c : comps) best = std::max(best, solve(c));
    } else {
      best = kInfinity;
      for (int v = 0; v < n_; ++v)
        if (set & (std::uint32_t{1} << v)) best = std::min(best, 1 + solve(set & ~(std::uint32_t{1} << v)));
    }
    memo_[set] = best;
    return best;
  }

  int n_;
  Matrix adj_;
  std::map<std::uint32_t, int> memo_;
};

inline int treedepth(const Graph& g) { return Treedepth(g).value(); }

// ---------------------------------------------------------------- treewidth

/// Minimum over elimination orders of the largest neighbourhood at
/// elimination time. The fill graph after eliminating a set does not depend
/// on the order, so orders are explored as subsets.
inline int treewidth(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  const Matrix adj = adjacency(g);
  // Neighbours of v in the fill graph after eliminating `gone`: vertices
  // outside gone reachable from v through eliminated vertices only.
  auto fill_degree = [&](std::uint32_t gone, int v) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{v};
    seen[v] = true;
    int degree = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < n; ++w) {
        if (!adj[u][w] || seen[w]) continue;
        seen[w] = true;
        if (gone & (std::uint32_t{1} << w)) stack.push_back(w);
        else ++degree;
      }
    }
    return degree;
  };
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  std::vector<int> best(static_cast<std::size_t>(full) + 1, kInfinity);
  best[0] = -1;
  for (std::uint32_t s = 0; s < full; ++s) {
    if (best[s] == kInfinity) continue;
    for (int v = 0; v < n; ++v) {
      const std::uint32_t bit = std::uint32_t{1} << v;
      if (s & bit) continue;
      const int cost = std::max(best[s], fill_degree(s, v));
      best[s | bit] = std::min(best[s | bit], cost);
    }
  }
  return best[full];
}

// ---------------------------------------------------------------- clique cover

/// Fewest cliques partitioning `set`, by trying every placement of each vertex.
inline int clique_cover_number(const Graph& g, const std::vector<Vertex>& set) {
  const Matrix adj = adjacency(g);
  std::vector<std::vector<Vertex>> groups;
  int best = static_cast<int>(set.size());
  auto place = [&](auto&& self, std::size_t i) -> void {
    if (static_cast<int>(groups.size()) >= best) return;
    if (i == set.size()) {
      best = static_cast<int>(groups.size());
      return;
    }
    const Vertex v = set[i];
    // Indexed access: deeper calls append to `groups` and may reallocate it.
    for (std::size_t gi = 0, count = groups.size(); gi < count; ++gi) {
      if (std::all_of(groups[gi].begin(), groups[gi].end(), [&](Vertex u) { return adj[u][v]; })) {
        groups[gi].push_back(v);
        self(self, i + 1);
        groups[gi].pop_back();
      }
    }
    groups.push_back({v});
    self(self, i + 1);
    groups.pop_back();
  };
  place(place, 0);
  return best;
}

// ---------------------------------------------------------------- Hamiltonian cycles

/// Edge sets (u < v) of the distinct Hamiltonian cycles, stopping after `limit`.
inline std::vector<std::set<std::pair<Vertex, Vertex>>> hamiltonian_cycles(const Graph& g, int limit = 2) {
  const int n = g.order();
  std::vector<std::set<std::pair<Vertex, Vertex>>> found;
  if (n < 3) return found;
  const Matrix adj = adjacency(g);
  std::vector<Vertex> path{0};
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  used[0] = true;
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(found.size()) >= limit) return;
    if (static_cast<int>(path.size()) == n) {
      if (!adj[path.back()][0]) return;
      std::set<std::pair<Vertex, Vertex>> edges;
      for (int i = 0; i < n; ++i) {
        Vertex u = path[i];
        Vertex v = path[(i + 1) % n];
        edges.insert({std::min(u, v), std::max(u, v)});
      }
      if (std::find(found.begin(), found.end(), edges) == found.end()) found.push_back(edges);
      return;
    }
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || !adj[path.back()][w]) continue;
      used[w] = true;
      path.push_back(w);
      self(self);
      path.pop_back();
      used[w] = false;
    }
  };
  extend(extend);
  return found;
}

// ---------------------------------------------------------------- game minimax

/// Depth-bounded minimax straight from the move rules. Memoised per
/// (state, remaining depth), so one instance should serve one graph and variant.
class Minimax {
 public:
  Minimax(const Graph& g, pursuit::Variant variant) : g_(g), variant_(variant), adj_(adjacency(g)), d_(floyd_warshall(g)) {}

  /// Least number of turns within `depth` in which the pursuers force capture.
  std::optional<int> capture_within(const pursuit::GameState& s, int depth) {
    return solve(s.pursuers, s.evader, s.turn == pursuit::Turn::Pursuers, depth);
  }

 private:
  std::vector<Vertex> pursuer_options(Vertex z, Vertex e) const {
    std::vector<Vertex> out;
    if (variant_ != pursuit::Variant::Zombies) out.push_back(z);
    for (Vertex w = 0; w < g_.order(); ++w) {
      if (!adj_[z][w]) continue;
      if (variant_ == pursuit::Variant::Cops || d_[w][e] == d_[z][e] - 1) out.push_back(w);
    }
    return out;
  }

  std::optional<int> solve(std::vector<Vertex> p, Vertex e, bool pursuers_turn, int depth) {
    if (std::find(p.begin(), p.end(), e) != p.end()) return 0;
    if (depth == 0) return std::nullopt;
    std::sort(p.begin(), p.end());
    const auto key = std::make_tuple(p, e, pursuers_turn, depth);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::optional<int> result;
    if (pursuers_turn) {
      std::vector<std::vector<Vertex>> options;
      for (Vertex z : p) options.push_back(pursuer_options(z, e));
      if (std::any_of(options.begin(), options.end(), [](const auto& o) { return o.empty(); })) {
        memo_[key] = std::nullopt;
        return std::nullopt;
      }
      std::vector<std::size_t> pick(p.size(), 0);
      while (true) {
        std::vector<Vertex> next(p.size());
        for (std::size_t i = 0; i < p.size(); ++i) next[i] = options[i][pick[i]];
        if (auto t = solve(next, e, false, depth - 1)) {
          if (!result || *t + 1 < *result) result = *t + 1;
        }
        std::size_t i = 0;
        while (i < pick.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
        if (i == pick.size()) break;
      }
    } else {
      int worst = 0;
      bool escapes = false;
      for (Vertex w = 0; w < g_.order() && !escapes; ++w) {
        if (w != e && !adj_[e][w]) continue;
        const auto t = solve(p, w, true, depth - 1);
        if (!t) escapes = true;
        else worst = std::max(worst, *t + 1);
      }
      if (!escapes) result = worst;
    }
    memo_[key] = result;
    return result;
  }

  Graph g_;
  pursuit::Variant variant_;
  Matrix adj_;
  std::vector<std::vector<int>> d_;
  std::map<std::tuple<std::vector<Vertex>, Vertex, bool, int>, std::optional<int>> memo_;
};

// ---------------------------------------------------------------- visibility

inline Rational cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

inline bool on_closed_segment(const Point& a, const Point& b, const Point& q) {
  if (cross(a, b, q) != 0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= q.y &&
         q.y <= std::max(a.y, b.y);
}

/// Winding number test; points on the boundary count as inside.
inline bool in_closed_polygon(const std::vector<Point>& poly, const Point& q) {
  const std::size_t n = poly.size();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (on_closed_segment(a, b, q)) return true;
    if (a.y <= q.y) {
      if (b.y > q.y && cross(a, b, q) > 0) ++winding;
    } else if (b.y <= q.y && cross(a, b, q) < 0) {
      --winding;
    }
  }
  return winding != 0;
}

/// Cuts the segment p-q at every boundary contact and checks that each
/// piece's midpoint lies in the closed polygon.
inline bool sees(const std::vector<Point>& poly, const Point& p, const Point& q) {
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  const Point dir{q.x - p.x, q.y - p.y};
  auto parameter_of = [&](const Point& x) {
    return dir.x != 0 ? (x.x - p.x) / dir.x : (x.y - p.y) / dir.y;
  };
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const Point edge{b.x - a.x, b.y - a.y};
    const Rational denom = dir.x * edge.y - dir.y * edge.x;
    const Point ap{a.x - p.x, a.y - p.y};
    if (denom != 0) {
      const Rational t = (ap.x * edge.y - ap.y * edge.x) / denom;
      const Rational u = (ap.x * dir.y - ap.y * dir.x) / denom;
      if (t >= 0 && t <= 1 && u >= 0 && u <= 1) cuts.push_back(t);
    } else if (ap.x * dir.y - ap.y * dir.x == 0) {
      for (const Point& end : {a, b}) {
        const Rational t = parameter_of(end);
        if (t >= 0 && t <= 1) cuts.push_back(t);
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) continue;
    const Rational mid = (cuts[i] + cuts[i + 1]) / 2;
    if (!in_closed_polygon(poly, Point{p.x + dir.x * mid, p.y + dir.y * mid})) return false;
  }
  return true;
}

inline Graph visibility_graph(const pursuit::geometry::Polygon& polygon) {
  const auto& poly = polygon.vertices;
  const int n = static_cast<int>(poly.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sees(poly, poly[i], poly[j])) edges.emplace_back(i, j);
  return Graph(n, edges);
}

}  // namespace oracle
