#include "pursuit/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <limits>

#include "pursuit/error.hpp"

namespace pursuit {

MultisetIndexer::MultisetIndexer(int n, int k) : n_(n), k_(k) {
  if (n < 1 || k < 1) throw Error(ErrorCode::BadParameter, "multiset indexer needs n >= 1 and k >= 1");
  const int top = n + k;
  binom_.assign(static_cast<std::size_t>(top + 1), std::vector<std::uint64_t>(static_cast<std::size_t>(k + 2), 0));
  for (int a = 0; a <= top; ++a) {
    binom_[static_cast<std::size_t>(a)][0] = 1;
    for (int b = 1; b <= std::min(a, k + 1); ++b) {
      binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          binom_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] +
          (b <= a - 1 ? binom_[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b)] : 0);
    }
  }
  count_ = binom(n + k - 1, k);
}

std::uint64_t MultisetIndexer::binom(int a, int b) const {
  if (b < 0 || a < 0 || b > a) return 0;
  return binom_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

std::uint64_t MultisetIndexer::rank(std::span<const Vertex> sorted) const {
  std::uint64_t r = 0;
  for (int i = 0; i < k_; ++i) r += binom(sorted[static_cast<std::size_t>(i)] + i, i + 1);
  return r;
}

std::vector<Vertex> MultisetIndexer::unrank(std::uint64_t r) const {
  std::vector<Vertex> out(static_cast<std::size_t>(k_));
  int c = n_ + k_ - 2;
  for (int i = k_ - 1; i >= 0; --i) {
    while (binom(c, i + 1) > r) --c;
    r -= binom(c, i + 1);
    out[static_cast<std::size_t>(i)] = c - i;
    --c;
  }
  return out;
}

std::uint64_t default_state_budget() {
  if (const char* env = std::getenv("PURSUIT_STATE_BUDGET")) {
    char* end = nullptr;
    auto v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return v;
  }
  return 50'000'000ULL;
}

std::uint64_t graph_fingerprint(const Graph& g) {
  // FNV-1a over n and the sorted edge list.
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (auto [u, v] : g.edges()) {
    mix(static_cast<std::uint64_t>(u));
    mix(static_cast<std::uint64_t>(v));
  }
  return h;
}

GameTable::GameTable(const Graph& g, Variant v, int k)
    : graph_(g), dist_(all_pairs_distances(g)), variant_(v), k_(k), indexer_(g.order(), k),
      fingerprint_(graph_fingerprint(g)) {}

std::uint64_t GameTable::index_of(std::span<const Vertex> sorted, Vertex evader, Turn turn) const {
  const auto n = static_cast<std::uint64_t>(graph_.order());
  return (indexer_.rank(sorted) * n + static_cast<std::uint64_t>(evader)) * 2 + (turn == Turn::Evader ? 1 : 0);
}

std::int32_t GameTable::turns_to_capture(const GameState& state) const {
  if (static_cast<int>(state.pursuers.size()) != k_) throw Error(ErrorCode::BadParameter, "state has wrong pursuer count");
  auto sorted = state.pursuers;
  std::sort(sorted.begin(), sorted.end());
  return time_[static_cast<std::size_t>(index_of(sorted, state.evader, state.turn))];
}

std::optional<int> GameTable::capture_round(const GameState& state, int round) const {
  const auto t = turns_to_capture(state);
  if (t == kSurvivorWin) return std::nullopt;
  if (t == 0) return round;
  // Turn 1 is the pursuers' move of `round`, turn 2 the evader's, and so on.
  return state.turn == Turn::Pursuers ? round + (t - 1) / 2 : round + t / 2;
}

std::uint64_t GameTable::pursuer_win_count() const {
  return static_cast<std::uint64_t>(std::count_if(time_.begin(), time_.end(), [](auto t) { return t != kSurvivorWin; }));
}

std::uint64_t estimated_state_edges(const Graph& g, int k) {
  const int n = g.order();
  MultisetIndexer probe(n, k);
  const double avg_deg = n > 0 ? 2.0 * static_cast<double>(g.size()) / n : 0.0;
  const double states = static_cast<double>(probe.count()) * n * 2.0;
  const double edges = static_cast<double>(probe.count()) * n * (std::pow(avg_deg + 1.0, k) + avg_deg + 1.0);
  const double total = states + edges;
  return total >= 1.8e19 ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(total);
}

GameTable solve_game(const Graph& g, Variant variant, int k, const SolveOptions& options) {
  if (!g.connected()) throw Error(ErrorCode::Disconnected, "solver needs a connected graph");
  if (k < 1) throw Error(ErrorCode::BadParameter, "k must be positive");
  const int n = g.order();
  if (const auto estimate = estimated_state_edges(g, k); estimate > options.budget) {
    throw Error(ErrorCode::StateBudgetExceeded, "estimated " + std::to_string(estimate) +
                                                    " state-edge pairs exceed budget " + std::to_string(options.budget));
  }
  GameTable table(g, variant, k);
  const auto& d = table.dist_;
  const auto& idx = table.indexer_;
  const std::uint64_t total = idx.count() * static_cast<std::uint64_t>(n) * 2;
  table.time_.assign(static_cast<std::size_t>(total), GameTable::kSurvivorWin);
  std::vector<std::int32_t> remaining(static_cast<std::size_t>(total), 0);
  std::deque<std::uint64_t> queue;

  auto decode = [&](std::uint64_t s, std::vector<Vertex>& ms, Vertex& e, Turn& turn) {
    turn = (s & 1) ? Turn::Evader : Turn::Pursuers;
    s >>= 1;
    e = static_cast<Vertex>(s % static_cast<std::uint64_t>(n));
    ms = idx.unrank(s / static_cast<std::uint64_t>(n));
  };

  idx.for_each([&](std::span<const Vertex> ms) {
    const std::uint64_t base = idx.rank(ms) * static_cast<std::uint64_t>(n);
    for (Vertex e = 0; e < n; ++e) {
      const bool terminal = std::binary_search(ms.begin(), ms.end(), e);
      const std::uint64_t s = (base + static_cast<std::uint64_t>(e)) * 2;
      if (terminal) {
        table.time_[static_cast<std::size_t>(s)] = 0;
        table.time_[static_cast<std::size_t>(s + 1)] = 0;
        queue.push_back(s);
        queue.push_back(s + 1);
      } else {
        remaining[static_cast<std::size_t>(s + 1)] = g.degree(e) + 1;
      }
    }
  });

  std::vector<Vertex> ms, pred(static_cast<std::size_t>(k)), sorted(static_cast<std::size_t>(k));
  std::vector<std::vector<Vertex>> options_per_slot(static_cast<std::size_t>(k));
  Vertex e = 0;
  Turn turn = Turn::Pursuers;
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    const std::int32_t t = table.time_[static_cast<std::size_t>(s)];
    decode(s, ms, e, turn);
    if (turn == Turn::Pursuers) {
      // Predecessors: evader-turn states from which the evader moved to e.
      auto visit = [&](Vertex from) {
        if (std::binary_search(ms.begin(), ms.end(), from)) return;
        const std::uint64_t p = table.index_of(ms, from, Turn::Evader);
        if (table.time_[static_cast<std::size_t>(p)] != GameTable::kSurvivorWin) return;
        if (--remaining[static_cast<std::size_t>(p)] == 0) {
          table.time_[static_cast<std::size_t>(p)] = t + 1;
          queue.push_back(p);
        }
      };
      visit(e);
      for (Vertex w : g.neighbors(e)) visit(w);
    } else {
      // Predecessors: pursuer-turn states (P, e) with a legal joint move P -> ms.
      bool has_pred = true;
      for (int i = 0; i < k; ++i) {
        auto& opts = options_per_slot[static_cast<std::size_t>(i)];
        opts.clear();
        const Vertex to = ms[static_cast<std::size_t>(i)];
        if (is_legal_pursuer_move(g, d, to, to, e, variant)) opts.push_back(to);
        for (Vertex from : g.neighbors(to)) {
          if (is_legal_pursuer_move(g, d, from, to, e, variant)) opts.push_back(from);
        }
        if (opts.empty()) has_pred = false;
      }
      if (!has_pred) continue;
      std::vector<std::size_t> cursor(static_cast<std::size_t>(k), 0);
      while (true) {
        for (int i = 0; i < k; ++i) {
          pred[static_cast<std::size_t>(i)] = options_per_slot[static_cast<std::size_t>(i)][cursor[static_cast<std::size_t>(i)]];
        }
        sorted = pred;
        std::sort(sorted.begin(), sorted.end());
        if (!std::binary_search(sorted.begin(), sorted.end(), e)) {
          const std::uint64_t p = table.index_of(sorted, e, Turn::Pursuers);
          if (table.time_[static_cast<std::size_t>(p)] == GameTable::kSurvivorWin) {
            table.time_[static_cast<std::size_t>(p)] = t + 1;
            queue.push_back(p);
          }
        }
        int i = k - 1;
        while (i >= 0) {
          auto& c = cursor[static_cast<std::size_t>(i)];
          if (++c < options_per_slot[static_cast<std::size_t>(i)].size()) break;
          c = 0;
          --i;
        }
        if (i < 0) break;
      }
    }
  }
  return table;
}

GameNumberResult decide_with_table(const GameTable& table, PlacementMode mode) {
  GameNumberResult result;
  result.variant = table.variant();
  result.mode = mode;
  result.k_max = table.k();
  const int n = table.graph().order();
  bool any_good = false, all_good = true;
  std::vector<Vertex> first_good, first_bad;
  Vertex first_bad_evader = -1;
  table.indexer().for_each([&](std::span<const Vertex> ms) {
    Vertex refutation = -1;
    for (Vertex v = 0; v < n && refutation < 0; ++v) {
      if (table.raw(table.index_of(ms, v, Turn::Pursuers)) == GameTable::kSurvivorWin) refutation = v;
    }
    if (refutation < 0) {
      if (!any_good) first_good.assign(ms.begin(), ms.end());
      any_good = true;
    } else {
      if (all_good) {
        first_bad.assign(ms.begin(), ms.end());
        first_bad_evader = refutation;
      }
      all_good = false;
    }
  });
  const bool success = mode == PlacementMode::Chosen ? any_good : all_good;
  if (success) {
    result.value = table.k();
    if (mode == PlacementMode::Chosen) result.witness = first_good;
  } else {
    result.witness = first_bad;
    result.counter_evader = first_bad_evader;
  }
  return result;
}

GameNumberResult game_number(const Graph& g, Variant variant, PlacementMode mode, int k_max,
                             const SolveOptions& options) {
  if (k_max < 1) throw Error(ErrorCode::BadParameter, "k_max must be at least 1");
  GameNumberResult last;
  for (int k = 1; k <= k_max; ++k) {
    GameTable table = solve_game(g, variant, k, options);
    last = decide_with_table(table, mode);
    if (last.value) {
      last.k_max = k_max;
      return last;
    }
  }
  last.k_max = k_max;
  return last;
}

std::vector<std::vector<Vertex>> joint_pursuer_moves(const Graph& g, const DistanceMatrix& d, const GameState& state,
                                                     Variant variant) {
  std::vector<std::vector<Vertex>> per;
  for (std::size_t i = 0; i < state.pursuers.size(); ++i) {
    per.push_back(legal_pursuer_moves(g, d, state, static_cast<int>(i), variant));
  }
  std::vector<std::vector<Vertex>> out{{}};
  for (const auto& opts : per) {
    std::vector<std::vector<Vertex>> next;
    next.reserve(out.size() * opts.size());
    for (const auto& prefix : out) {
      for (Vertex v : opts) {
        auto ext = prefix;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<Vertex> OptimalPursuerPolicy::place(const MatchContext& ctx) {
  const int n = ctx.graph.order();
  std::vector<Vertex> best;
  std::int32_t best_worst = std::numeric_limits<std::int32_t>::max();
  table_.indexer().for_each([&](std::span<const Vertex> ms) {
    std::int32_t worst = 0;
    for (Vertex v = 0; v < n; ++v) {
      const auto t = table_.raw(table_.index_of(ms, v, Turn::Pursuers));
      if (t == GameTable::kSurvivorWin) {
        worst = std::numeric_limits<std::int32_t>::max();
        break;
      }
      worst = std::max(worst, t);
    }
    if (best.empty() || worst < best_worst) {
      best.assign(ms.begin(), ms.end());
      best_worst = worst;
    }
  });
  return best;
}

std::vector<Vertex> OptimalPursuerPolicy::move(const MatchContext& ctx, const GameState& state) {
  auto moves = joint_pursuer_moves(ctx.graph, ctx.dist, state, table_.variant());
  std::size_t best = 0;
  std::int32_t best_time = std::numeric_limits<std::int32_t>::max();
  for (std::size_t i = 0; i < moves.size(); ++i) {
    GameState next{moves[i], state.evader, Turn::Evader};
    const auto t = table_.turns_to_capture(next);
    if (t != GameTable::kSurvivorWin && t < best_time) {
      best_time = t;
      best = i;
    }
  }
  return moves.at(best);
}

Vertex OptimalEvaderPolicy::place(const MatchContext& ctx, std::span<const Vertex> pursuers) {
  Vertex best = 0;
  std::int32_t best_time = -2;
  for (Vertex v = 0; v < ctx.graph.order(); ++v) {
    GameState s{std::vector<Vertex>(pursuers.begin(), pursuers.end()), v, Turn::Pursuers};
    auto t = table_.turns_to_capture(s);
    if (t == GameTable::kSurvivorWin) return v;
    if (t > best_time) {
      best_time = t;
      best = v;
    }
  }
  return best;
}

Vertex OptimalEvaderPolicy::move(const MatchContext& ctx, const GameState& state) {
  Vertex best = state.evader;
  std::int32_t best_time = -2;
  for (Vertex v : legal_evader_moves(ctx.graph, state)) {
    GameState next{state.pursuers, v, Turn::Pursuers};
    auto t = table_.turns_to_capture(next);
    if (t == GameTable::kSurvivorWin) return v;
    if (t > best_time) {
      best_time = t;
      best = v;
    }
  }
  return best;
}

}  // namespace pursuit
