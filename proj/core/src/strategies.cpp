#include "pursuit/strategies.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pursuit/error.hpp"

namespace pursuit {

namespace {

std::uint64_t mix(std::uint64_t h, std::int64_t v) {
  h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

[[noreturn]] void policy_failure(const std::string& what) { throw Error(ErrorCode::PolicyIllegalMove, what); }

int distance_to_set(const DistanceMatrix& d, Vertex from, const std::vector<Vertex>& set) {
  int best = -1;
  for (Vertex v : set) {
    const int x = d(from, v);
    if (x >= 0 && (best < 0 || x < best)) best = x;
  }
  return best;
}

}  // namespace

// ---------------------------------------------------------------- outerplanar sweep

OuterplanarLazyPolicy::OuterplanarLazyPolicy(const Graph& g, bool universal)
    : g_(g), universal_(universal), circuit_(outer_circuit(g)) {
  tree_ = is_tree(g);
  cycle_ = is_cycle(g);
  guards_ = circuit_.chords;
  guards_.insert(guards_.end(), circuit_.null_chords.begin(), circuit_.null_chords.end());
  std::sort(guards_.begin(), guards_.end());
}

bool OuterplanarLazyPolicy::in_interval(const Interval& iv, int slot) const {
  const int off = offset(iv, slot);
  return off > 0 && off < offset(iv, iv.to);
}

int OuterplanarLazyPolicy::offset(const Interval& iv, int slot) const {
  const int L = circuit_.length();
  return (((slot - iv.from) * iv.dir) % L + L) % L;
}

std::optional<int> OuterplanarLazyPolicy::survivor_slot(const Interval& iv, Vertex s) const {
  for (int slot : circuit_.slots_of(s)) {
    if (in_interval(iv, slot)) return slot;
  }
  return std::nullopt;
}

std::vector<Vertex> OuterplanarLazyPolicy::interval_vertices(const Interval& iv) const {
  std::set<Vertex> out;
  for (int slot = circuit_.next(iv.from, iv.dir); slot != iv.to; slot = circuit_.next(slot, iv.dir)) {
    out.insert(circuit_.walk[static_cast<std::size_t>(slot)]);
  }
  return {out.begin(), out.end()};
}

std::optional<OuterplanarLazyPolicy::Interval> OuterplanarLazyPolicy::side_of(int p, int q, Vertex s) const {
  for (int dir : {1, -1}) {
    Interval iv{p, q, dir};
    if (survivor_slot(iv, s)) return iv;
  }
  return std::nullopt;
}

std::optional<std::pair<std::pair<int, int>, OuterplanarLazyPolicy::Interval>> OuterplanarLazyPolicy::best_guard_at(
    Vertex v, Vertex s, Vertex avoid) const {
  std::optional<std::pair<std::pair<int, int>, Interval>> best;
  std::size_t best_size = 0;
  for (auto guard : guards_) {
    const Vertex a = circuit_.walk[static_cast<std::size_t>(guard.first)];
    const Vertex b = circuit_.walk[static_cast<std::size_t>(guard.second)];
    if (a != v && b != v) continue;
    auto side = side_of(guard.first, guard.second, s);
    if (!side) continue;
    const auto vs = interval_vertices(*side);
    if (avoid >= 0 && std::binary_search(vs.begin(), vs.end(), avoid)) continue;
    const std::size_t size = vs.size();
    if (!best || size < best_size) {
      best = std::make_pair(guard, *side);
      best_size = size;
    }
  }
  return best;
}

bool OuterplanarLazyPolicy::has_entry(Vertex z, const Interval& iv, Vertex s, const DistanceMatrix& d) const {
  // Only edges leaving the gate's own slot count: its circuit successor and its chords.
  // Appearances of z inside the interval are reached for free along null chords.
  std::vector<int> starts{iv.from};
  for (int slot : circuit_.slots_of(z)) {
    if (in_interval(iv, slot)) starts.push_back(slot);
  }
  std::vector<Vertex> entries;
  for (int slot : starts) {
    const int succ = circuit_.next(slot, iv.dir);
    if (succ == iv.to || in_interval(iv, succ)) entries.push_back(circuit_.walk[static_cast<std::size_t>(succ)]);
    for (int partner : circuit_.chord_partners(slot)) {
      if (in_interval(iv, partner)) entries.push_back(circuit_.walk[static_cast<std::size_t>(partner)]);
    }
  }
  for (Vertex w : entries) {
    if (w != z && d(w, s) == d(z, s) - 1) return true;
  }
  return false;
}

Vertex OuterplanarLazyPolicy::chase_step(const DistanceMatrix& d, Vertex z, Vertex s, int who) const {
  Vertex best = -1;
  for (Vertex w : g_.neighbors(z)) {
    if (d(w, s) != d(z, s) - 1) continue;
    const bool back = w == last_from_[static_cast<std::size_t>(who)];
    if (best < 0) {
      best = w;
    } else if (best == last_from_[static_cast<std::size_t>(who)] && !back) {
      best = w;
    }
  }
  return best < 0 ? z : best;
}

std::vector<Vertex> OuterplanarLazyPolicy::place(const MatchContext& ctx) {
  const int n = g_.order();
  std::vector<Vertex> out(static_cast<std::size_t>(ctx.k), 0);
  if (tree_ || cycle_ || guards_.empty()) {
    // Trees: start at a centre vertex.
    Vertex centre = 0;
    for (Vertex v = 1; v < n; ++v) {
      if (ctx.dist.eccentricity(v) < ctx.dist.eccentricity(centre)) centre = v;
    }
    std::fill(out.begin(), out.end(), cycle_ ? 0 : centre);
    return out;
  }
  std::size_t best_cost = 0;
  std::optional<std::pair<int, int>> best;
  for (auto guard : guards_) {
    std::size_t cost = 0;
    for (int dir : {1, -1}) cost = std::max(cost, interval_vertices({guard.first, guard.second, dir}).size());
    if (!best || cost < best_cost) {
      best = guard;
      best_cost = cost;
    }
  }
  out[0] = circuit_.walk[static_cast<std::size_t>(best->first)];
  for (std::size_t i = 1; i < out.size(); ++i) out[i] = circuit_.walk[static_cast<std::size_t>(best->second)];
  return out;
}

void OuterplanarLazyPolicy::start(const MatchContext& ctx, std::span<const Vertex> placement) {
  if (ctx.k < 2 && !tree_) throw Error(ErrorCode::InsufficientZombies, "the sweep needs two lazy zombies");
  pos_.assign(placement.begin(), placement.end());
  last_from_.assign(pos_.size(), -1);
  mode_ = Mode::Unstarted;
}

std::uint64_t OuterplanarLazyPolicy::memory_key() const {
  std::uint64_t h = 1469598103934665603ULL;
  h = mix(h, static_cast<int>(mode_));
  h = mix(h, stationary_);
  h = mix(h, mover_);
  h = mix(h, guard_.first);
  h = mix(h, guard_.second);
  h = mix(h, territory_.from);
  h = mix(h, territory_.to);
  h = mix(h, territory_.dir);
  h = mix(h, front_);
  for (Vertex v : last_from_) h = mix(h, v);
  return h;
}

void OuterplanarLazyPolicy::begin_travel(int stationary, std::pair<int, int> guard, Interval territory) {
  mode_ = Mode::Travel;
  stationary_ = stationary;
  mover_ = 1 - stationary;
  const Vertex held = pos_[static_cast<std::size_t>(stationary)];
  if (circuit_.walk[static_cast<std::size_t>(guard.first)] != held) {
    std::swap(guard.first, guard.second);
    territory = Interval{territory.to, territory.from, -territory.dir};
  }
  guard_ = guard;
  territory_ = territory;
}

void OuterplanarLazyPolicy::enter_phase_two(const GameState& state, const DistanceMatrix& d) {
  (void)d;
  const Vertex s = state.evader;
  auto g0 = best_guard_at(pos_[0], s);
  auto g1 = best_guard_at(pos_[1], s);
  if (!g0 || !g1) policy_failure("zombie stopped on a vertex without a usable chord");
  if (g0->first == g1->first) {
    begin_travel(0, g0->first, g0->second);
  } else if (auto own1 = best_guard_at(pos_[1], s, pos_[0])) {
    begin_travel(1, own1->first, own1->second);
  } else if (auto own0 = best_guard_at(pos_[0], s, pos_[1])) {
    begin_travel(0, own0->first, own0->second);
  } else {
    mode_ = Mode::Squeeze;
    stationary_ = 0;
    mover_ = 1;
  }
}

std::vector<Vertex> OuterplanarLazyPolicy::move(const MatchContext& ctx, const GameState& state) {
  pos_ = state.pursuers;
  if (last_from_.size() != pos_.size()) last_from_.assign(pos_.size(), -1);
  auto next = decide(state, ctx.dist, 0);
  for (std::size_t i = 0; i < next.size(); ++i) {
    if (next[i] != pos_[i]) last_from_[i] = pos_[i];
  }
  return next;
}

std::vector<Vertex> OuterplanarLazyPolicy::decide(const GameState& state, const DistanceMatrix& d, int depth) {
  if (depth > 6) policy_failure("sweep could not settle on a move");
  const Vertex s = state.evader;
  std::vector<Vertex> out = pos_;

  for (std::size_t i = 0; i < pos_.size(); ++i) {
    if (d(pos_[i], s) <= 1) {
      out[i] = s;
      return out;
    }
  }

  switch (mode_) {
    case Mode::Unstarted: {
      if (tree_ || pos_.size() < 2) {
        mode_ = Mode::Chase;
      } else if (cycle_) {
        mode_ = Mode::Squeeze;
        stationary_ = 0;
        mover_ = 1;
      } else if (universal_) {
        mode_ = Mode::Gather;
      } else {
        std::optional<std::pair<int, int>> found;
        for (auto guard : guards_) {
          if (circuit_.walk[static_cast<std::size_t>(guard.first)] == pos_[0] &&
              circuit_.walk[static_cast<std::size_t>(guard.second)] == pos_[1]) {
            found = guard;
            break;
          }
        }
        if (!found) {
          mode_ = Mode::Gather;
        } else {
          auto side = side_of(found->first, found->second, s);
          if (!side) policy_failure("survivor sits on the guarded chord");
          begin_travel(0, *found, *side);
        }
      }
      return decide(state, d, depth + 1);
    }

    case Mode::Chase:
      for (std::size_t i = 0; i < pos_.size(); ++i) out[i] = chase_step(d, pos_[i], s, static_cast<int>(i));
      return out;

    case Mode::Gather: {
      auto on_chord = [&](Vertex v) {
        for (auto guard : guards_) {
          if (circuit_.walk[static_cast<std::size_t>(guard.first)] == v ||
              circuit_.walk[static_cast<std::size_t>(guard.second)] == v) {
            return true;
          }
        }
        return false;
      };
      if (on_chord(pos_[0]) && on_chord(pos_[1])) {
        enter_phase_two(state, d);
        return decide(state, d, depth + 1);
      }
      for (std::size_t i = 0; i < 2; ++i) {
        if (!on_chord(pos_[i])) out[i] = chase_step(d, pos_[i], s, static_cast<int>(i));
      }
      return out;
    }

    case Mode::Squeeze: {
      const Vertex z = pos_[static_cast<std::size_t>(mover_)];
      if (!cycle_) {
        if (auto guard = best_guard_at(z, s, pos_[static_cast<std::size_t>(stationary_)])) {
          begin_travel(mover_, guard->first, guard->second);
          return decide(state, d, depth + 1);
        }
      }
      out[static_cast<std::size_t>(mover_)] = chase_step(d, z, s, mover_);
      return out;
    }

    case Mode::Travel: {
      // The stationary zombie holds guard_.first; the mover heads for guard_.second.
      const Vertex z = pos_[static_cast<std::size_t>(mover_)];
      const Vertex held = pos_[static_cast<std::size_t>(stationary_)];
      // A cut vertex held alone can shut a smaller side than the current chord.
      if (auto tighter = best_guard_at(held, s)) {
        const auto [a, b] = tighter->first;
        if (circuit_.walk[static_cast<std::size_t>(a)] == circuit_.walk[static_cast<std::size_t>(b)] &&
            interval_vertices(tighter->second).size() < interval_vertices(territory_).size()) {
          guard_ = {a, b};
          territory_ = tighter->second;
        }
      }
      const Vertex gate = circuit_.walk[static_cast<std::size_t>(guard_.second)];
      if (z == gate) {
        // Either zombie may sweep once both ends are held.
        const Interval from_gate{territory_.to, territory_.from, -territory_.dir};
        for (bool swap : {false, true}) {
          const Vertex sweeper = swap ? held : z;
          const Interval iv = swap ? territory_ : from_gate;
          if (sweeper != circuit_.walk[static_cast<std::size_t>(iv.from)] || !has_entry(sweeper, iv, s, d)) continue;
          if (swap) {
            std::swap(stationary_, mover_);
            guard_ = {guard_.second, guard_.first};
          }
          mode_ = Mode::Advance;
          front_ = iv.from;
          territory_ = iv;
          return decide(state, d, depth + 1);
        }
      }
      // Another guard between z and the held vertex may open a legal entry.
      for (auto guard : guards_) {
        for (auto [mine, theirs] : {guard, std::pair{guard.second, guard.first}}) {
          if (circuit_.walk[static_cast<std::size_t>(mine)] != z ||
              circuit_.walk[static_cast<std::size_t>(theirs)] != held) {
            continue;
          }
          auto side = side_of(mine, theirs, s);
          if (side && interval_vertices(*side).size() <= interval_vertices(territory_).size() &&
              has_entry(z, *side, s, d)) {
            guard_ = {theirs, mine};
            mode_ = Mode::Advance;
            front_ = mine;
            territory_ = *side;
            return decide(state, d, depth + 1);
          }
        }
      }
      // A tighter guard at z that leaves the held vertex outside: swap roles.
      if (auto tighter = best_guard_at(z, s, held);
          tighter && interval_vertices(tighter->second).size() < interval_vertices(territory_).size()) {
        begin_travel(mover_, tighter->first, tighter->second);
        return decide(state, d, depth + 1);
      }
      if (z == gate) {
        policy_failure("no shortest path from the chord at " + std::to_string(z) + " enters the survivor side");
      }
      Vertex best = -1;
      for (Vertex w : g_.neighbors(z)) {
        if (d(w, s) != d(z, s) - 1) continue;
        if (best < 0 || d(w, gate) < d(best, gate)) best = w;
      }
      out[static_cast<std::size_t>(mover_)] = best < 0 ? z : best;
      return out;
    }

    case Mode::Advance: {
      const Vertex z = pos_[static_cast<std::size_t>(mover_)];
      if (circuit_.walk[static_cast<std::size_t>(front_)] != z) policy_failure("advancing zombie left its slot");
      const auto sslot = survivor_slot(territory_, s);
      if (!sslot) policy_failure("survivor is outside the swept territory");
      int far = -1;
      for (int partner : circuit_.chord_partners(front_)) {
        if (in_interval(territory_, partner) && (far < 0 || offset(territory_, partner) > offset(territory_, far))) {
          far = partner;
        }
      }
      if (far < 0) {
        const int step = circuit_.next(front_, territory_.dir);
        const Vertex w = circuit_.walk[static_cast<std::size_t>(step)];
        if (!g_.adjacent(z, w) || d(w, s) != d(z, s) - 1) {
          policy_failure("sweep step " + std::to_string(z) + " -> " + std::to_string(w) +
                         " is not on a shortest path to the survivor at " + std::to_string(s));
        }
        front_ = step;
        territory_.from = step;
        out[static_cast<std::size_t>(mover_)] = w;
        return out;
      }
      if (offset(territory_, *sslot) < offset(territory_, far)) {
        // Survivor is caught between the front and the chord: hold it shut.
        const Interval inner{front_, far, territory_.dir};
        begin_travel(mover_, {front_, far}, inner);
        return decide(state, d, depth + 1);
      }
      const Vertex w = circuit_.walk[static_cast<std::size_t>(far)];
      front_ = far;
      territory_.from = far;
      if (w == z) return decide(state, d, depth + 1);
      if (d(w, s) != d(z, s) - 1) {
        policy_failure("chord step " + std::to_string(z) + " -> " + std::to_string(w) +
                       " is not on a shortest path to the survivor at " + std::to_string(s));
      }
      out[static_cast<std::size_t>(mover_)] = w;
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- cut decomposition

namespace {

void check_zombies(int k, int need) {
  if (k < need) {
    throw Error(ErrorCode::InsufficientZombies,
                "decomposition needs " + std::to_string(need) + " lazy zombies, got " + std::to_string(k));
  }
}

Vertex initial_vertex(const CutDecomposition& d) {
  const auto& root = d.nodes[static_cast<std::size_t>(d.root())].container;
  return *std::min_element(root.begin(), root.end());
}

}  // namespace

CutDecompositionPolicy::CutDecompositionPolicy(const Graph& g, CutDecomposition d) : g_(g), d_(std::move(d)) {
  load_ = load(g_, d_);
  node_of_ = d_.node_of(g_.order());
}

std::vector<Vertex> CutDecompositionPolicy::place(const MatchContext& ctx) {
  check_zombies(ctx.k, load_);
  return std::vector<Vertex>(static_cast<std::size_t>(ctx.k), initial_vertex(d_));
}

void CutDecompositionPolicy::start(const MatchContext& ctx, std::span<const Vertex> placement) {
  check_zombies(ctx.k, load_);
  target_.assign(placement.size(), -1);
  peak_ = 0;
}

void CutDecompositionPolicy::reassign(Vertex survivor) {
  const auto path = d_.path_from_root(node_of_[static_cast<std::size_t>(survivor)]);
  const std::set<int> on_path(path.begin(), path.end());
  std::set<Vertex> staffed;
  for (auto& t : target_) {
    if (t >= 0 && !on_path.count(node_of_[static_cast<std::size_t>(t)])) t = -1;
    if (t >= 0) staffed.insert(t);
  }
  for (int x : path) {
    for (Vertex v : d_.nodes[static_cast<std::size_t>(x)].container) {
      if (staffed.count(v)) continue;
      auto free = std::find(target_.begin(), target_.end(), -1);
      if (free == target_.end()) throw Error(ErrorCode::InsufficientZombies, "no unassigned zombie left");
      *free = v;
      staffed.insert(v);
    }
  }
  peak_ = std::max(peak_, static_cast<int>(staffed.size()));
}

std::vector<Vertex> CutDecompositionPolicy::move(const MatchContext& ctx, const GameState& state) {
  const auto& d = ctx.dist;
  const Vertex s = state.evader;
  reassign(s);
  std::vector<Vertex> out = state.pursuers;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Vertex v = target_[i];
    if (v < 0) continue;
    const Vertex u = state.pursuers[i];
    for (Vertex w : g_.neighbors(u)) {
      if (d(w, v) < d(u, v) && d(w, s) < d(u, s)) {
        out[i] = w;
        break;
      }
    }
  }
  return out;
}

std::uint64_t CutDecompositionPolicy::memory_key() const {
  std::uint64_t h = 7;
  for (Vertex t : target_) h = mix(h, t);
  return h;
}

// ---------------------------------------------------------------- clique covers

CliqueCoverPolicy::CliqueCoverPolicy(const Graph& g, CutDecomposition d,
                                     std::vector<std::vector<std::vector<Vertex>>> covers)
    : g_(g), d_(std::move(d)), covers_(std::move(covers)) {
  if (auto r = validate_cut_decomposition(g_, d_); !r) throw Error(ErrorCode::InvalidDecomposition, r.violation);
  if (covers_.empty()) {
    for (const auto& node : d_.nodes) covers_.push_back(clique_cover(g_, node.container));
  }
  if (covers_.size() != d_.nodes.size()) throw Error(ErrorCode::InvalidCover, "one cover per decomposition node required");
  for (std::size_t x = 0; x < covers_.size(); ++x) {
    std::vector<Vertex> seen;
    for (const auto& clique : covers_[x]) {
      if (clique.empty()) throw Error(ErrorCode::InvalidCover, "empty clique at node " + std::to_string(x));
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          if (!g_.adjacent(clique[i], clique[j])) {
            throw Error(ErrorCode::InvalidCover, "vertices " + std::to_string(clique[i]) + " and " +
                                                     std::to_string(clique[j]) + " are not adjacent");
          }
        }
      }
      seen.insert(seen.end(), clique.begin(), clique.end());
    }
    std::sort(seen.begin(), seen.end());
    auto container = d_.nodes[x].container;
    std::sort(container.begin(), container.end());
    if (seen != container) throw Error(ErrorCode::InvalidCover, "cover of node " + std::to_string(x) + " does not partition its container");
  }
  node_of_ = d_.node_of(g_.order());
  std::vector<int> sizes(d_.nodes.size());
  const auto kids = d_.children();
  std::function<int(int)> rec = [&](int x) {
    int best = 0;
    for (int y : kids[static_cast<std::size_t>(x)]) best = std::max(best, rec(y));
    return static_cast<int>(covers_[static_cast<std::size_t>(x)].size()) + best;
  };
  load_ = rec(d_.root());
}

std::vector<Vertex> CliqueCoverPolicy::place(const MatchContext& ctx) {
  check_zombies(ctx.k, load_);
  return std::vector<Vertex>(static_cast<std::size_t>(ctx.k), initial_vertex(d_));
}

void CliqueCoverPolicy::start(const MatchContext& ctx, std::span<const Vertex> placement) {
  check_zombies(ctx.k, load_);
  target_.assign(placement.size(), {-1, -1});
}

void CliqueCoverPolicy::reassign(Vertex survivor) {
  const auto path = d_.path_from_root(node_of_[static_cast<std::size_t>(survivor)]);
  const std::set<int> on_path(path.begin(), path.end());
  std::set<std::pair<int, int>> staffed;
  for (auto& t : target_) {
    if (t.first >= 0 && !on_path.count(t.first)) t = {-1, -1};
    if (t.first >= 0) staffed.insert(t);
  }
  for (int x : path) {
    for (int c = 0; c < static_cast<int>(covers_[static_cast<std::size_t>(x)].size()); ++c) {
      if (staffed.count({x, c})) continue;
      auto free = std::find(target_.begin(), target_.end(), std::pair{-1, -1});
      if (free == target_.end()) throw Error(ErrorCode::InsufficientZombies, "no unassigned zombie left");
      *free = {x, c};
      staffed.insert({x, c});
    }
  }
}

std::vector<Vertex> CliqueCoverPolicy::move(const MatchContext& ctx, const GameState& state) {
  const auto& d = ctx.dist;
  const Vertex s = state.evader;
  reassign(s);
  std::vector<Vertex> out = state.pursuers;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto [x, c] = target_[i];
    if (x < 0) continue;
    const auto& clique = covers_[static_cast<std::size_t>(x)][static_cast<std::size_t>(c)];
    if (std::find(clique.begin(), clique.end(), s) == clique.end()) continue;
    const Vertex u = state.pursuers[i];
    Vertex best = -1;
    int best_gap = 0;
    for (Vertex w : g_.neighbors(u)) {
      if (d(w, s) != d(u, s) - 1) continue;
      const int gap = distance_to_set(d, w, clique);
      if (best < 0 || gap < best_gap) {
        best = w;
        best_gap = gap;
      }
    }
    if (best >= 0) out[i] = best;
  }
  return out;
}

std::uint64_t CliqueCoverPolicy::memory_key() const {
  std::uint64_t h = 11;
  for (auto [x, c] : target_) h = mix(mix(h, x), c);
  return h;
}

std::optional<PursuerKind> parse_pursuer_kind(std::string_view name) {
  if (name == "thm6" || name == "outerplanar") return PursuerKind::Outerplanar;
  if (name == "cor1" || name == "outerplanar-universal") return PursuerKind::OuterplanarUniversal;
  if (name == "thm7" || name == "cut-decomposition") return PursuerKind::CutDecomposition;
  if (name == "thm9" || name == "clique-cover") return PursuerKind::CliqueCover;
  if (name == "optimal") return PursuerKind::Optimal;
  return std::nullopt;
}

}  // namespace pursuit
