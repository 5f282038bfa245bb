#include "pursuit/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <set>

#include "pursuit/error.hpp"

namespace pursuit {

ComponentH component_h(int a_star) {
  if (a_star < 6 || a_star % 4 != 2) {
    throw Error(ErrorCode::BadParameter, "a* must be at least 6 and congruent to 2 mod 4, got " + std::to_string(a_star));
  }
  const int m = (a_star + 3) / 4;  // ceil(a*/4)
  const int t = a_star + 1;
  const int n = 2 * a_star + 3;
  EdgeList edges;
  for (int i = 0; i < t; ++i) edges.emplace_back(i, i + 1);

  // The m-th path edge counted from t is (t-m, t-m+1).
  const Vertex near = t - m;
  const Vertex far = t - m + 1;
  const int extra = a_star + 1;
  const Vertex w1 = t + 1;
  edges.emplace_back(far, w1);
  for (int j = 0; j + 1 < extra; ++j) edges.emplace_back(w1 + j, w1 + j + 1);
  edges.emplace_back(w1 + extra - 1, near);

  ComponentH h{build_graph(n, edges), a_star, 0, t, {}, {}, near, far};
  h.path.resize(static_cast<std::size_t>(t + 1));
  std::iota(h.path.begin(), h.path.end(), 0);
  h.cycle.push_back(near);
  for (int j = extra - 1; j >= 0; --j) h.cycle.push_back(w1 + j);
  h.cycle.push_back(far);
  return h;
}

int GkInstance::component_of(Vertex v) const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    const auto& vs = components[i].vertices;
    if (!vs.empty() && v >= vs.front() && v <= vs.back()) return static_cast<int>(i);
  }
  return -1;
}

int ceil_log2(int k) {
  int r = 0;
  while ((1 << r) < k) ++r;
  return r;
}

int gk_tree_a_star(int k) { return 8 * ceil_log2(k) + 10; }

namespace {

// Lays out k consecutive copies of H; returns the edge list and fills components.
EdgeList copies(GkInstance& inst) {
  const int sz = inst.h.graph.order();
  EdgeList edges;
  for (int i = 0; i < inst.k; ++i) {
    const int base = i * sz;
    GkComponent comp;
    comp.s = base + inst.h.s;
    comp.t = base + inst.h.t;
    comp.vertices.resize(static_cast<std::size_t>(sz));
    std::iota(comp.vertices.begin(), comp.vertices.end(), base);
    for (auto [u, v] : inst.h.graph.edges()) edges.emplace_back(base + u, base + v);
    inst.components.push_back(std::move(comp));
  }
  return edges;
}

GkInstance start_instance(int k, int a_star, CenterKind kind) {
  if (k < 2) throw Error(ErrorCode::BadParameter, "need k >= 2 components, got " + std::to_string(k));
  return GkInstance{Graph(), k, a_star, kind, std::nullopt, {}, {}, component_h(a_star)};
}

}  // namespace

GkInstance gk_star(int k, int a_star) {
  GkInstance inst = start_instance(k, a_star, CenterKind::Star);
  EdgeList edges = copies(inst);
  const Vertex c = k * inst.h.graph.order();
  for (auto& comp : inst.components) {
    edges.emplace_back(c, comp.s);
    edges.emplace_back(c, comp.t);
    comp.entry = c;
  }
  inst.c = c;
  inst.graph = build_graph(c + 1, edges);
  return inst;
}

GkInstance gk_clique(int k, int a_star) {
  GkInstance inst = start_instance(k, a_star, CenterKind::Clique);
  EdgeList edges = copies(inst);
  std::vector<Vertex> ends;
  for (const auto& comp : inst.components) {
    ends.push_back(comp.s);
    ends.push_back(comp.t);
  }
  for (std::size_t i = 0; i < ends.size(); ++i) {
    for (std::size_t j = i + 1; j < ends.size(); ++j) {
      edges.emplace_back(ends[i], ends[j]);
    }
  }
  inst.graph = build_graph(k * inst.h.graph.order(), edges);
  return inst;
}

GkInstance gk_tree(int k) {
  if (k < 2) throw Error(ErrorCode::BadParameter, "need k >= 2 components, got " + std::to_string(k));
  GkInstance inst = start_instance(k, gk_tree_a_star(k), CenterKind::Tree);
  EdgeList edges = copies(inst);
  const Vertex base = k * inst.h.graph.order();
  const int nodes = 2 * k - 1;
  for (int j = 0; j < nodes; ++j) {
    inst.tree_vertices.push_back(base + j);
    if (j > 0) edges.emplace_back(base + (j - 1) / 2, base + j);
  }
  for (int i = 0; i < k; ++i) {
    auto& comp = inst.components[static_cast<std::size_t>(i)];
    comp.entry = base + k - 1 + i;
    edges.emplace_back(comp.entry, comp.s);
    edges.emplace_back(comp.entry, comp.t);
  }
  inst.graph = build_graph(base + nodes, edges);
  return inst;
}

StandardKind parse_standard_kind(std::string_view text) {
  std::string s(text);
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char ch) {
    return ch == '-' ? '_' : static_cast<char>(std::toupper(ch));
  });
  if (s == "PATH") return StandardKind::Path;
  if (s == "CYCLE") return StandardKind::Cycle;
  if (s == "CLIQUE") return StandardKind::Clique;
  if (s == "FAN") return StandardKind::Fan;
  if (s == "RANDOM_OUTERPLANAR" || s == "RAND_OUTERPLANAR") return StandardKind::RandomOuterplanar;
  if (s == "RANDOM_CONNECTED" || s == "RAND_CONNECTED") return StandardKind::RandomConnected;
  throw Error(ErrorCode::BadParameter, "unknown graph kind '" + std::string(text) + "'");
}

namespace {

void triangulate(int lo, int hi, std::mt19937_64& rng, EdgeList& chords) {
  if (hi - lo < 2) return;
  std::uniform_int_distribution<int> pick(lo + 1, hi - 1);
  const int apex = pick(rng);
  if (apex - lo > 1) chords.emplace_back(lo, apex);
  if (hi - apex > 1) chords.emplace_back(apex, hi);
  triangulate(lo, apex, rng, chords);
  triangulate(apex, hi, rng, chords);
}

Graph relabelled(int n, const EdgeList& edges, std::mt19937_64& rng) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  EdgeList out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.emplace_back(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return build_graph(n, out);
}

}  // namespace

Graph standard_graph(StandardKind kind, int n, const StandardOptions& options) {
  const bool needs_three = kind == StandardKind::Cycle || kind == StandardKind::Fan;
  if (n < (needs_three ? 3 : 1)) {
    throw Error(ErrorCode::BadParameter, "too few vertices (" + std::to_string(n) + ") for this kind");
  }
  EdgeList edges;
  std::mt19937_64 rng(options.seed);
  std::bernoulli_distribution keep_chord(options.chord_keep_probability);
  std::bernoulli_distribution extra(options.extra_edge_probability);
  switch (kind) {
    case StandardKind::Path:
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case StandardKind::Cycle:
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      break;
    case StandardKind::Clique:
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      break;
    case StandardKind::Fan:
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, n - 1);
      break;
    case StandardKind::RandomOuterplanar: {
      if (n <= 2) {
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        break;
      }
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      EdgeList chords;
      triangulate(0, n - 1, rng, chords);
      for (auto e : chords) {
        if (keep_chord(rng)) edges.push_back(e);
      }
      return relabelled(n, edges, rng);
    }
    case StandardKind::RandomConnected: {
      std::set<std::pair<Vertex, Vertex>> present;
      for (int i = 1; i < n; ++i) {
        std::uniform_int_distribution<int> parent(0, i - 1);
        const int p = parent(rng);
        edges.emplace_back(p, i);
        present.emplace(p, i);
      }
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          if (!present.count({i, j}) && extra(rng)) edges.emplace_back(i, j);
        }
      }
      return relabelled(n, edges, rng);
    }
  }
  return build_graph(n, edges);
}

ScriptedEvasionPolicy::ScriptedEvasionPolicy(const GkInstance& inst, int component)
    : inst_(inst), requested_(component) {
  if (component >= inst.k) {
    throw Error(ErrorCode::BadComponent, "component " + std::to_string(component) + " does not exist (k = " +
                                             std::to_string(inst.k) + ")");
  }
}

Vertex ScriptedEvasionPolicy::place(const MatchContext& ctx, std::span<const Vertex> pursuers) {
  (void)ctx;
  chosen_ = requested_;
  if (chosen_ < 0) {
    std::vector<bool> occupied(static_cast<std::size_t>(inst_.k), false);
    for (Vertex p : pursuers) {
      const int c = inst_.component_of(p);
      if (c >= 0) occupied[static_cast<std::size_t>(c)] = true;
    }
    const auto it = std::find(occupied.begin(), occupied.end(), false);
    if (it == occupied.end()) throw Error(ErrorCode::BadComponent, "every component holds a pursuer");
    chosen_ = static_cast<int>(it - occupied.begin());
  }
  const ComponentH& h = inst_.h;
  route_.clear();
  for (Vertex v = 1; v <= h.near_attachment; ++v) route_.push_back(inst_.global(chosen_, v));
  route_prefix_ = static_cast<int>(route_.size()) - 1;  // index of the attachment
  // One lap, starting at the attachment and heading to its degree-2 neighbour.
  for (std::size_t j = 1; j < h.cycle.size(); ++j) route_.push_back(inst_.global(chosen_, h.cycle[j]));
  cycle_len_ = static_cast<int>(h.cycle.size());
  step_ = 0;
  return route_.front();
}

Vertex ScriptedEvasionPolicy::move(const MatchContext& ctx, const GameState& state) {
  (void)ctx;
  (void)state;
  ++step_;
  if (step_ <= route_prefix_) return route_[static_cast<std::size_t>(step_)];
  const int lap = (step_ - route_prefix_) % cycle_len_;
  return route_[static_cast<std::size_t>(route_prefix_ + lap)];
}

}  // namespace pursuit
