#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// Dense ranking of sorted k-multisets over 0..n-1 (colexicographic on the
/// associated k-combinations of 0..n+k-2).
class MultisetIndexer {
 public:
  MultisetIndexer(int n, int k);

  std::uint64_t count() const noexcept { return count_; }
  std::uint64_t rank(std::span<const Vertex> sorted) const;
  std::vector<Vertex> unrank(std::uint64_t r) const;
  /// Visits every multiset in increasing lexicographic order.
  template <typename F>
  void for_each(F&& f) const {
    std::vector<Vertex> ms(static_cast<std::size_t>(k_), 0);
    if (n_ == 0) return;
    while (true) {
      f(std::span<const Vertex>(ms));
      int i = k_ - 1;
      while (i >= 0 && ms[static_cast<std::size_t>(i)] == n_ - 1) --i;
      if (i < 0) return;
      const Vertex next = ms[static_cast<std::size_t>(i)] + 1;
      for (int j = i; j < k_; ++j) ms[static_cast<std::size_t>(j)] = next;
    }
  }

 private:
  std::uint64_t binom(int a, int b) const;
  int n_, k_;
  std::uint64_t count_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

std::uint64_t default_state_budget();  // honours PURSUIT_STATE_BUDGET

struct SolveOptions {
  std::uint64_t budget = default_state_budget();  // estimated state-edge pairs
};

/// Complete labelling of a (graph, variant, k) game: for every canonical
/// state either the minimax number of turns to capture or survivor-win.
class GameTable {
 public:
  static constexpr std::int32_t kSurvivorWin = -1;

  const Graph& graph() const noexcept { return graph_; }
  const DistanceMatrix& dist() const noexcept { return dist_; }
  Variant variant() const noexcept { return variant_; }
  int k() const noexcept { return k_; }
  std::uint64_t state_count() const noexcept { return static_cast<std::uint64_t>(time_.size()); }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }
  const MultisetIndexer& indexer() const noexcept { return indexer_; }

  /// Turns until capture under optimal play, or kSurvivorWin.
  std::int32_t turns_to_capture(const GameState& state) const;
  bool pursuer_wins(const GameState& state) const { return turns_to_capture(state) != kSurvivorWin; }
  /// Round in which capture happens when play starts at a pursuer-turn state in `round`.
  std::optional<int> capture_round(const GameState& state, int round) const;

  std::uint64_t pursuer_win_count() const;

  std::int32_t raw(std::uint64_t index) const { return time_[static_cast<std::size_t>(index)]; }
  std::uint64_t index_of(std::span<const Vertex> sorted, Vertex evader, Turn turn) const;

 private:
  friend GameTable solve_game(const Graph&, Variant, int, const SolveOptions&);
  GameTable(const Graph& g, Variant v, int k);

  Graph graph_;
  DistanceMatrix dist_;
  Variant variant_;
  int k_;
  MultisetIndexer indexer_;
  std::uint64_t fingerprint_ = 0;
  std::vector<std::int32_t> time_;
};

std::uint64_t graph_fingerprint(const Graph& g);

/// The solver's up-front size estimate (states plus transitions) checked against the budget.
std::uint64_t estimated_state_edges(const Graph& g, int k);

/// Retrograde (backward least fixed point) solution. Throws Disconnected or
/// StateBudgetExceeded.
GameTable solve_game(const Graph& g, Variant variant, int k, const SolveOptions& options = {});

struct GameNumberResult {
  Variant variant = Variant::Zombies;
  PlacementMode mode = PlacementMode::Chosen;
  int k_max = 0;
  std::optional<int> value;              // empty: NONE_UP_TO(k_max)
  std::vector<Vertex> witness;           // winning placement (CHOSEN) or refuted placement (failures)
  std::optional<Vertex> counter_evader;  // survivor placement refuting `witness`
};

GameNumberResult game_number(const Graph& g, Variant variant, PlacementMode mode, int k_max,
                             const SolveOptions& options = {});
/// The same decision for one table: does this k suffice?
GameNumberResult decide_with_table(const GameTable& table, PlacementMode mode);

/// Pursuers play time-minimising moves; ties go to the lexicographically
/// smallest joint move.
class OptimalPursuerPolicy : public PursuerPolicy {
 public:
  explicit OptimalPursuerPolicy(const GameTable& table) : table_(table) {}
  std::string name() const override { return "optimal"; }
  std::vector<Vertex> place(const MatchContext& ctx) override;
  std::vector<Vertex> move(const MatchContext& ctx, const GameState& state) override;

 private:
  const GameTable& table_;
};

/// Survivor prefers survivor-win successors, else maximises capture time;
/// ties go to the lowest vertex id.
class OptimalEvaderPolicy : public EvaderPolicy {
 public:
  explicit OptimalEvaderPolicy(const GameTable& table) : table_(table) {}
  std::string name() const override { return "optimal"; }
  Vertex place(const MatchContext& ctx, std::span<const Vertex> pursuers) override;
  Vertex move(const MatchContext& ctx, const GameState& state) override;

 private:
  const GameTable& table_;
};

/// Cartesian product of per-pursuer legal moves, lexicographic order.
std::vector<std::vector<Vertex>> joint_pursuer_moves(const Graph& g, const DistanceMatrix& d, const GameState& state,
                                                     Variant variant);

}  // namespace pursuit
