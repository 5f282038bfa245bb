#include "pursuit/decomposition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>

#include "pursuit/error.hpp"

namespace pursuit {

using Mask = std::uint32_t;

namespace {

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.order()), 0);
  for (auto [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
    adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
  }
  return adj;
}

int lowest(Mask m) { return std::countr_zero(m); }

// Component of `start` inside `within`.
Mask component_mask(const std::vector<Mask>& adj, Mask within, int start) {
  Mask seen = Mask{1} << start;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(lowest(f))];
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<Mask> components(const std::vector<Mask>& adj, Mask within) {
  std::vector<Mask> out;
  for (Mask rest = within; rest;) {
    const Mask c = component_mask(adj, within, lowest(rest));
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

Mask to_mask(std::span<const Vertex> vs) {
  Mask m = 0;
  for (Vertex v : vs) m |= Mask{1} << v;
  return m;
}

void require_small(const Graph& g, int limit, const char* what) {
  if (g.order() > limit) {
    throw Error(ErrorCode::TooLarge, std::string(what) + " supports at most " + std::to_string(limit) +
                                         " vertices, graph has " + std::to_string(g.order()));
  }
}

}  // namespace

// ---------------------------------------------------------------- treedepth trees

std::vector<Vertex> TreedepthTree::roots() const {
  std::vector<Vertex> out;
  for (int v = 0; v < order(); ++v)
    if (parent[static_cast<std::size_t>(v)] < 0) out.push_back(v);
  return out;
}

std::vector<std::vector<Vertex>> TreedepthTree::children() const {
  std::vector<std::vector<Vertex>> out(parent.size());
  for (int v = 0; v < order(); ++v) {
    const Vertex p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) out[static_cast<std::size_t>(p)].push_back(v);
  }
  return out;
}

int TreedepthTree::height() const {
  int best = 0;
  for (int v = 0; v < order(); ++v) {
    int depth = 0;
    for (Vertex x = v; x >= 0 && depth <= order(); x = parent[static_cast<std::size_t>(x)]) ++depth;
    best = std::max(best, depth);
  }
  return best;
}

bool TreedepthTree::is_ancestor(Vertex a, Vertex b) const {
  for (Vertex x = b; x >= 0; x = parent[static_cast<std::size_t>(x)]) {
    if (x == a) return true;
  }
  return false;
}

CheckResult validate_treedepth_tree(const Graph& g, const TreedepthTree& t) {
  const int n = g.order();
  if (t.order() != n) {
    return CheckResult::fail("tree has " + std::to_string(t.order()) + " vertices, graph has " + std::to_string(n));
  }
  for (int v = 0; v < n; ++v) {
    const Vertex p = t.parent[static_cast<std::size_t>(v)];
    if (p >= n || p == v || p < -1) return CheckResult::fail("vertex " + std::to_string(v) + " has invalid parent");
  }
  for (int v = 0; v < n; ++v) {
    int steps = 0;
    for (Vertex x = v; x >= 0; x = t.parent[static_cast<std::size_t>(x)]) {
      if (++steps > n) return CheckResult::fail("parent pointers form a cycle through " + std::to_string(v));
    }
  }
  if (n > 0 && (t.root < 0 || t.root >= n || t.parent[static_cast<std::size_t>(t.root)] != -1)) {
    return CheckResult::fail("root is not a parentless vertex");
  }
  for (auto [u, v] : g.edges()) {
    if (!t.is_ancestor(u, v) && !t.is_ancestor(v, u)) {
      return CheckResult::fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " is not in the closure");
    }
  }
  return {};
}

// ---------------------------------------------------------------- cut decompositions

int CutDecomposition::root() const {
  for (int x = 0; x < size(); ++x)
    if (nodes[static_cast<std::size_t>(x)].parent < 0) return x;
  return -1;
}

std::vector<std::vector<int>> CutDecomposition::children() const {
  std::vector<std::vector<int>> out(nodes.size());
  for (int x = 0; x < size(); ++x) {
    const int p = nodes[static_cast<std::size_t>(x)].parent;
    if (p >= 0 && p < size()) out[static_cast<std::size_t>(p)].push_back(x);
  }
  return out;
}

int CutDecomposition::height() const {
  int best = 0;
  for (int x = 0; x < size(); ++x) best = std::max(best, static_cast<int>(path_from_root(x).size()) - 1);
  return best;
}

int CutDecomposition::cdw() const {
  std::size_t best = 0;
  for (const auto& node : nodes) best = std::max(best, node.container.size());
  return static_cast<int>(best);
}

std::vector<int> CutDecomposition::node_of(int n) const {
  std::vector<int> out(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < size(); ++x) {
    for (Vertex v : nodes[static_cast<std::size_t>(x)].container) {
      if (v >= 0 && v < n) out[static_cast<std::size_t>(v)] = x;
    }
  }
  return out;
}

std::vector<int> CutDecomposition::path_from_root(int x) const {
  std::vector<int> out;
  for (int y = x; y >= 0 && static_cast<int>(out.size()) <= size(); y = nodes[static_cast<std::size_t>(y)].parent) {
    out.push_back(y);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Vertex> CutDecomposition::subtree_vertices(int x) const {
  const auto kids = children();
  std::vector<Vertex> out;
  std::vector<int> stack{x};
  while (!stack.empty()) {
    const int y = stack.back();
    stack.pop_back();
    const auto& c = nodes[static_cast<std::size_t>(y)].container;
    out.insert(out.end(), c.begin(), c.end());
    for (int z : kids[static_cast<std::size_t>(y)]) stack.push_back(z);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CutDecomposition::is_ancestor(int a, int b) const {
  for (int y = b; y >= 0; y = nodes[static_cast<std::size_t>(y)].parent) {
    if (y == a) return true;
  }
  return false;
}

CheckResult validate_cut_decomposition(const Graph& g, const CutDecomposition& d) {
  const int n = g.order();
  const int m = d.size();
  if (m == 0) return CheckResult::fail("decomposition has no nodes");
  int roots = 0;
  for (int x = 0; x < m; ++x) {
    const int p = d.nodes[static_cast<std::size_t>(x)].parent;
    if (p < -1 || p >= m || p == x) return CheckResult::fail("node " + std::to_string(x) + " has invalid parent");
    if (p == -1) ++roots;
  }
  if (roots != 1) return CheckResult::fail("expected one root, found " + std::to_string(roots));
  for (int x = 0; x < m; ++x) {
    if (static_cast<int>(d.path_from_root(x).size()) > m || d.path_from_root(x).front() != d.root()) {
      return CheckResult::fail("node " + std::to_string(x) + " does not reach the root");
    }
  }

  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < m; ++x) {
    const auto& c = d.nodes[static_cast<std::size_t>(x)].container;
    if (c.empty()) return CheckResult::fail("container of node " + std::to_string(x) + " is empty");
    for (Vertex v : c) {
      if (v < 0 || v >= n) return CheckResult::fail("node " + std::to_string(x) + " holds unknown vertex " + std::to_string(v));
      if (owner[static_cast<std::size_t>(v)] >= 0) {
        return CheckResult::fail("vertex " + std::to_string(v) + " appears in nodes " +
                                 std::to_string(owner[static_cast<std::size_t>(v)]) + " and " + std::to_string(x));
      }
      owner[static_cast<std::size_t>(v)] = x;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (owner[static_cast<std::size_t>(v)] < 0) return CheckResult::fail("vertex " + std::to_string(v) + " is in no container");
  }

  for (auto [u, v] : g.edges()) {
    const int x = owner[static_cast<std::size_t>(u)];
    const int y = owner[static_cast<std::size_t>(v)];
    if (!d.is_ancestor(x, y) && !d.is_ancestor(y, x)) {
      return CheckResult::fail("edge " + std::to_string(u) + "-" + std::to_string(v) + " joins unrelated nodes " +
                               std::to_string(x) + " and " + std::to_string(y));
    }
  }

  const auto kids = d.children();
  for (int x = 0; x < m; ++x) {
    if (kids[static_cast<std::size_t>(x)].empty()) continue;
    const auto y = d.subtree_vertices(x);
    std::vector<bool> removed(static_cast<std::size_t>(n), true);
    for (Vertex v : y) removed[static_cast<std::size_t>(v)] = false;
    for (Vertex v : d.nodes[static_cast<std::size_t>(x)].container) removed[static_cast<std::size_t>(v)] = true;
    int count = 0;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (Vertex s : y) {
      if (removed[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
      ++count;
      std::vector<Vertex> stack{s};
      seen[static_cast<std::size_t>(s)] = true;
      while (!stack.empty()) {
        const Vertex a = stack.back();
        stack.pop_back();
        for (Vertex b : g.neighbors(a)) {
          if (!removed[static_cast<std::size_t>(b)] && !seen[static_cast<std::size_t>(b)]) {
            seen[static_cast<std::size_t>(b)] = true;
            stack.push_back(b);
          }
        }
      }
    }
    if (count < 2) {
      return CheckResult::fail("container of node " + std::to_string(x) + " is not a cut-set of its component");
    }
  }
  return {};
}

namespace {

void require_valid(const Graph& g, const CutDecomposition& d) {
  if (auto r = validate_cut_decomposition(g, d); !r) throw Error(ErrorCode::InvalidDecomposition, r.violation);
}

// Post-order accumulation: value(x) = own(x) combined with the best child value.
template <typename T, typename Own, typename Combine>
std::vector<T> accumulate_tree(const CutDecomposition& d, Own own, Combine combine) {
  const auto kids = d.children();
  std::vector<T> value(d.nodes.size());
  std::function<void(int)> visit = [&](int x) {
    const auto& ks = kids[static_cast<std::size_t>(x)];
    if (ks.empty()) {
      value[static_cast<std::size_t>(x)] = own(x);
      return;
    }
    T best{};
    for (int y : ks) {
      visit(y);
      best = std::max(best, value[static_cast<std::size_t>(y)]);
    }
    value[static_cast<std::size_t>(x)] = combine(own(x), best);
  };
  if (d.root() >= 0) visit(d.root());
  return value;
}

}  // namespace

std::vector<int> node_loads(const CutDecomposition& d) {
  return accumulate_tree<int>(
      d, [&](int x) { return static_cast<int>(d.nodes[static_cast<std::size_t>(x)].container.size()); },
      [](int own, int best) { return own + best; });
}

std::vector<int> node_loads_star(const Graph& g, const CutDecomposition& d) {
  return accumulate_tree<int>(
      d, [&](int x) { return clique_cover_number(g, d.nodes[static_cast<std::size_t>(x)].container); },
      [](int own, int best) { return own + best; });
}

int load(const Graph& g, const CutDecomposition& d) {
  require_valid(g, d);
  return node_loads(d)[static_cast<std::size_t>(d.root())];
}

int load_star(const Graph& g, const CutDecomposition& d) {
  require_valid(g, d);
  return node_loads_star(g, d)[static_cast<std::size_t>(d.root())];
}

BigInt time_bound(const Graph& g, const CutDecomposition& d) {
  require_valid(g, d);
  const int delta = diameter(g);
  auto values = accumulate_tree<BigInt>(
      d,
      [&](int x) {
        return BigInt(static_cast<long long>(d.nodes[static_cast<std::size_t>(x)].container.size()) * (delta - 1) + 1);
      },
      [](const BigInt& own, const BigInt& best) { return own * best; });
  return values[static_cast<std::size_t>(d.root())];
}

BigInt time_star(const Graph& g, const CutDecomposition& d) {
  require_valid(g, d);
  const int delta = diameter(g);
  auto values = accumulate_tree<BigInt>(
      d,
      [&](int x) {
        return BigInt(static_cast<long long>(clique_cover_number(g, d.nodes[static_cast<std::size_t>(x)].container)) *
                          delta +
                      1);
      },
      [](const BigInt& own, const BigInt& best) { return own * best; });
  return values[static_cast<std::size_t>(d.root())];
}

// ---------------------------------------------------------------- clique cover

std::vector<std::vector<Vertex>> clique_cover(const Graph& g, std::span<const Vertex> s, int limit) {
  const int m = static_cast<int>(s.size());
  if (m > limit) {
    throw Error(ErrorCode::SetTooLarge, "clique cover supports at most " + std::to_string(limit) + " vertices, got " +
                                            std::to_string(m));
  }
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not in graph");
  }
  if (m == 0) return {};
  const Mask full = (Mask{1} << m) - 1;
  std::vector<bool> clique(static_cast<std::size_t>(full) + 1, false);
  clique[0] = true;
  for (Mask sub = 1; sub <= full; ++sub) {
    const int top = 31 - std::countl_zero(sub);
    const Mask rest = sub & ~(Mask{1} << top);
    bool ok = clique[rest];
    for (Mask r = rest; ok && r; r &= r - 1) ok = g.adjacent(s[static_cast<std::size_t>(top)], s[static_cast<std::size_t>(lowest(r))]);
    clique[sub] = ok;
  }
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> best(static_cast<std::size_t>(full) + 1, kInf);
  std::vector<Mask> choice(static_cast<std::size_t>(full) + 1, 0);
  best[0] = 0;
  for (Mask sub = 1; sub <= full; ++sub) {
    const Mask low = sub & (~sub + 1);
    const Mask rest = sub & ~low;
    // Cliques containing the lowest member: low | (subset of rest).
    for (Mask r = rest;; r = (r - 1) & rest) {
      const Mask c = low | r;
      if (clique[c] && best[sub & ~c] + 1 < best[sub]) {
        best[sub] = best[sub & ~c] + 1;
        choice[sub] = c;
      }
      if (r == 0) break;
    }
  }
  std::vector<std::vector<Vertex>> cover;
  for (Mask sub = full; sub; sub &= ~choice[sub]) {
    std::vector<Vertex> part;
    for (Vertex i : members(choice[sub])) part.push_back(s[static_cast<std::size_t>(i)]);
    std::sort(part.begin(), part.end());
    cover.push_back(std::move(part));
  }
  return cover;
}

int clique_cover_number(const Graph& g, std::span<const Vertex> s, int limit) {
  return static_cast<int>(clique_cover(g, s, limit).size());
}

// ---------------------------------------------------------------- treedepth

TreedepthResult treedepth(const Graph& g, int limit) {
  require_small(g, limit, "treedepth");
  const int n = g.order();
  TreedepthResult result;
  result.tree.parent.assign(static_cast<std::size_t>(n), -1);
  if (n == 0) return result;
  const auto adj = adjacency_masks(g);
  std::vector<std::int8_t> memo(std::size_t{1} << n, -1);

  std::function<int(Mask)> td = [&](Mask s) -> int {
    if (s == 0) return 0;
    auto& slot = memo[s];
    if (slot >= 0) return slot;
    int value;
    if (std::has_single_bit(s)) {
      value = 1;
    } else {
      const auto comps = components(adj, s);
      if (comps.size() > 1) {
        value = 0;
        for (Mask c : comps) value = std::max(value, td(c));
      } else {
        value = std::numeric_limits<int>::max();
        for (Mask r = s; r; r &= r - 1) value = std::min(value, 1 + td(s & ~(r & (~r + 1))));
      }
    }
    slot = static_cast<std::int8_t>(value);
    return value;
  };

  std::function<void(Mask, Vertex)> build = [&](Mask s, Vertex above) {
    if (s == 0) return;
    const auto comps = components(adj, s);
    if (comps.size() > 1) {
      for (Mask c : comps) build(c, above);
      return;
    }
    const int target = td(s);
    for (Mask r = s; r; r &= r - 1) {
      const Vertex v = lowest(r);
      const Mask rest = s & ~(Mask{1} << v);
      if (1 + td(rest) == target) {
        result.tree.parent[static_cast<std::size_t>(v)] = above;
        build(rest, v);
        return;
      }
    }
  };

  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  result.value = td(all);
  build(all, -1);
  result.tree.root = result.tree.roots().front();
  return result;
}

CutDecomposition td_tree_to_cut_decomposition(const TreedepthTree& t) {
  const int n = t.order();
  const auto roots = t.roots();
  if (n == 0 || roots.size() != 1) throw Error(ErrorCode::InvalidTree, "expected a tree with exactly one root");
  for (int v = 0; v < n; ++v) {
    const Vertex p = t.parent[static_cast<std::size_t>(v)];
    if (p >= n || p == v || p < -1) throw Error(ErrorCode::InvalidTree, "vertex " + std::to_string(v) + " has invalid parent");
    int steps = 0;
    for (Vertex x = v; x >= 0; x = t.parent[static_cast<std::size_t>(x)]) {
      if (++steps > n) throw Error(ErrorCode::InvalidTree, "parent pointers form a cycle");
    }
  }
  const auto kids = t.children();
  CutDecomposition d;
  std::function<void(Vertex, int)> compress = [&](Vertex top, int parent_node) {
    CutNode node{parent_node, {}};
    Vertex x = top;
    node.container.push_back(x);
    while (kids[static_cast<std::size_t>(x)].size() == 1) {
      x = kids[static_cast<std::size_t>(x)].front();
      node.container.push_back(x);
    }
    std::sort(node.container.begin(), node.container.end());
    const int id = d.size();
    d.nodes.push_back(std::move(node));
    for (Vertex c : kids[static_cast<std::size_t>(x)]) compress(c, id);
  };
  compress(roots.front(), -1);
  return d;
}

TreedepthTree cut_decomposition_to_td_tree(const CutDecomposition& d) {
  int n = 0;
  for (const auto& node : d.nodes)
    for (Vertex v : node.container) n = std::max(n, v + 1);
  if (d.root() < 0) throw Error(ErrorCode::InvalidDecomposition, "decomposition has no root");
  TreedepthTree t;
  t.parent.assign(static_cast<std::size_t>(n), -1);
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  const auto kids = d.children();
  std::function<void(int, Vertex)> expand = [&](int x, Vertex above) {
    auto chain = d.nodes[static_cast<std::size_t>(x)].container;
    if (chain.empty()) throw Error(ErrorCode::InvalidDecomposition, "empty container at node " + std::to_string(x));
    std::sort(chain.rbegin(), chain.rend());  // largest id nearest the root
    for (Vertex v : chain) {
      if (v < 0 || placed[static_cast<std::size_t>(v)]) {
        throw Error(ErrorCode::InvalidDecomposition, "vertex " + std::to_string(v) + " repeated or negative");
      }
      placed[static_cast<std::size_t>(v)] = true;
      t.parent[static_cast<std::size_t>(v)] = above;
      above = v;
    }
    for (int y : kids[static_cast<std::size_t>(x)]) expand(y, above);
  };
  expand(d.root(), -1);
  if (std::find(placed.begin(), placed.end(), false) != placed.end()) {
    throw Error(ErrorCode::InvalidDecomposition, "containers do not cover 0..n-1");
  }
  t.root = t.roots().front();
  return t;
}

// ---------------------------------------------------------------- treewidth

int treewidth_exact(const Graph& g, int limit) {
  require_small(g, limit, "treewidth");
  const int n = g.order();
  if (n == 0) return -1;
  const auto adj = adjacency_masks(g);
  const Mask all = (Mask{1} << n) - 1;
  // q(S, v): vertices outside S + v reachable from v through S.
  auto q = [&](Mask s, int v) {
    const Mask within = s | (Mask{1} << v);
    const Mask reach = component_mask(adj, within, v);
    Mask out = 0;
    for (Mask r = reach; r; r &= r - 1) out |= adj[static_cast<std::size_t>(lowest(r))];
    return std::popcount(out & ~within);
  };
  std::vector<int> tw(std::size_t{1} << n, std::numeric_limits<int>::max());
  tw[0] = -1;
  for (Mask s = 1; s <= all; ++s) {
    for (Mask r = s; r; r &= r - 1) {
      const int v = lowest(r);
      const Mask rest = s & ~(Mask{1} << v);
      tw[s] = std::min(tw[s], std::max(tw[rest], q(rest, v)));
    }
  }
  return tw[all];
}

// ---------------------------------------------------------------- separators

namespace {

// Smallest S within `a` (as a mask) meeting the component bound; returns its mask.
Mask min_separator_mask(const std::vector<Mask>& adj, Mask a, const Rational& alpha) {
  const auto verts = members(a);
  const int m = static_cast<int>(verts.size());
  const Rational cap = alpha * m;
  auto fits = [&](Mask removed) {
    for (Mask c : components(adj, a & ~removed)) {
      if (Rational(std::popcount(c)) > cap) return false;
    }
    return true;
  };
  for (int size = 0; size <= m; ++size) {
    std::vector<int> idx(static_cast<std::size_t>(size));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      Mask s = 0;
      for (int i : idx) s |= Mask{1} << verts[static_cast<std::size_t>(i)];
      if (fits(s)) return s;
      int i = size - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - size + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return a;
}

}  // namespace

std::vector<Vertex> min_alpha_separator(const Graph& g, std::span<const Vertex> a, const Rational& alpha, int limit) {
  if (static_cast<int>(a.size()) > limit) {
    throw Error(ErrorCode::TooLarge, "separator search supports at most " + std::to_string(limit) + " vertices");
  }
  if (alpha <= 0 || alpha >= 1) throw Error(ErrorCode::BadParameter, "alpha must lie strictly between 0 and 1");
  if (g.order() > 32) {
    // Work on the induced subgraph so masks stay within 32 bits.
    std::vector<Vertex> keep(a.begin(), a.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    const Graph sub = g.induced(keep);
    std::vector<Vertex> local(keep.size());
    std::iota(local.begin(), local.end(), 0);
    std::vector<Vertex> out;
    for (Vertex v : min_alpha_separator(sub, local, alpha, limit)) out.push_back(keep[static_cast<std::size_t>(v)]);
    return out;
  }
  for (Vertex v : a) {
    if (v < 0 || v >= g.order()) throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not in graph");
  }
  return members(min_separator_mask(adjacency_masks(g), to_mask(a), alpha));
}

std::vector<int> separation_profile(const Graph& g, int limit) {
  require_small(g, limit, "separation profile");
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const Rational half(1, 2);
  std::vector<int> best_at_size(static_cast<std::size_t>(n) + 1, 0);
  for (Mask a = 1; a < (Mask{1} << n); ++a) {
    const int size = std::popcount(a);
    const int s = std::popcount(min_separator_mask(adj, a, half));
    best_at_size[static_cast<std::size_t>(size)] = std::max(best_at_size[static_cast<std::size_t>(size)], s);
  }
  for (int i = 1; i <= n; ++i) {
    best_at_size[static_cast<std::size_t>(i)] =
        std::max(best_at_size[static_cast<std::size_t>(i)], best_at_size[static_cast<std::size_t>(i - 1)]);
  }
  return best_at_size;
}

SeparatorChainReport check_separator_chain(const Graph& g, int limit) {
  require_small(g, limit, "separator inequality check");
  SeparatorChainReport r;
  r.n = g.order();
  r.profile = separation_profile(g, limit);
  r.separation_number = r.profile.back();
  r.treedepth = treedepth(g).value;
  r.treewidth = treewidth_exact(g);
  for (int i = 0; r.n > 0 && (1 << i) <= r.n; ++i) r.separator_sum += r.profile[static_cast<std::size_t>(r.n >> i)];
  r.treewidth_bound = r.n > 0 ? (r.treewidth + 1) * std::log2(static_cast<double>(r.n)) : 0.0;
  r.first_holds = r.separation_number <= r.treedepth;
  r.second_holds = r.treedepth <= r.separator_sum;
  r.third_holds = static_cast<double>(r.separator_sum) <= r.treewidth_bound + 1e-9;
  return r;
}

// ---------------------------------------------------------------- random decompositions

CutDecomposition random_cut_decomposition(const Graph& g, std::mt19937_64& rng, double leaf_probability) {
  CutDecomposition d;
  if (g.order() == 0) return d;
  std::bernoulli_distribution make_leaf(leaf_probability);

  auto split = [&](const std::vector<Vertex>& y, const std::vector<bool>& blocked) {
    std::vector<std::vector<Vertex>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::vector<bool> in_y(static_cast<std::size_t>(g.order()), false);
    for (Vertex v : y) in_y[static_cast<std::size_t>(v)] = true;
    for (Vertex s : y) {
      if (blocked[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
      std::vector<Vertex> comp{s};
      seen[static_cast<std::size_t>(s)] = true;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex b : g.neighbors(comp[i])) {
          if (in_y[static_cast<std::size_t>(b)] && !blocked[static_cast<std::size_t>(b)] && !seen[static_cast<std::size_t>(b)]) {
            seen[static_cast<std::size_t>(b)] = true;
            comp.push_back(b);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  };

  std::function<void(std::vector<Vertex>, int)> grow = [&](std::vector<Vertex> y, int parent) {
    const int id = d.size();
    d.nodes.push_back({parent, {}});
    if (y.size() == 1 || make_leaf(rng)) {
      d.nodes[static_cast<std::size_t>(id)].container = y;
      return;
    }
    std::vector<Vertex> order = y;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<bool> blocked(static_cast<std::size_t>(g.order()), false);
    std::vector<Vertex> cut;
    std::vector<std::vector<Vertex>> comps;
    for (Vertex v : order) {
      blocked[static_cast<std::size_t>(v)] = true;
      cut.push_back(v);
      if (cut.size() == y.size()) break;
      comps = split(y, blocked);
      if (comps.size() >= 2) break;
    }
    std::sort(cut.begin(), cut.end());
    d.nodes[static_cast<std::size_t>(id)].container = cut;
    if (cut.size() == y.size()) return;
    for (auto& c : comps) grow(std::move(c), id);
  };

  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  grow(all, -1);
  return d;
}

}  // namespace pursuit
