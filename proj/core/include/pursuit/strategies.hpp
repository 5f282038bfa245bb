#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/decomposition.hpp"
#include "pursuit/engine.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// Two lazy zombies on a connected outerplanar graph. One zombie holds a chord
/// (or a cut vertex) shut while the other sweeps the survivor's side of the
/// outer circuit, handing roles over at chords. With `universal` set the
/// starting vertices are arbitrary: both zombies first chase to chord vertices.
/// Moves that the sweep requires but the rules forbid raise PolicyIllegalMove.
class OuterplanarLazyPolicy : public PursuerPolicy {
 public:
  OuterplanarLazyPolicy(const Graph& g, bool universal);

  std::string name() const override { return universal_ ? "outerplanar-universal" : "outerplanar"; }
  std::vector<Vertex> place(const MatchContext& ctx) override;
  void start(const MatchContext& ctx, std::span<const Vertex> placement) override;
  std::vector<Vertex> move(const MatchContext& ctx, const GameState& state) override;
  std::uint64_t memory_key() const override;

  const Circuit& circuit() const noexcept { return circuit_; }

  enum class Mode { Unstarted, Chase, Squeeze, Gather, Travel, Advance };
  Mode mode() const noexcept { return mode_; }

 private:
  struct Interval {
    int from = 0;  // exclusive end slot
    int to = 0;    // exclusive end slot
    int dir = 1;   // walking direction from `from` toward `to`
  };

  bool in_interval(const Interval& iv, int slot) const;
  int offset(const Interval& iv, int slot) const;  // steps from iv.from along iv.dir
  std::optional<int> survivor_slot(const Interval& iv, Vertex s) const;
  std::vector<Vertex> interval_vertices(const Interval& iv) const;
  /// Side of the chord (p, q) holding s, as an interval from p to q.
  std::optional<Interval> side_of(int p, int q, Vertex s) const;
  /// Smallest survivor side among chords and null chords touching v, skipping sides that contain `avoid`.
  std::optional<std::pair<std::pair<int, int>, Interval>> best_guard_at(Vertex v, Vertex s, Vertex avoid = -1) const;
  bool has_entry(Vertex z, const Interval& iv, Vertex s, const DistanceMatrix& d) const;

  Vertex chase_step(const DistanceMatrix& d, Vertex z, Vertex s, int who) const;

  void begin_travel(int stationary, std::pair<int, int> guard, Interval territory);
  void enter_phase_two(const GameState& state, const DistanceMatrix& d);
  std::vector<Vertex> decide(const GameState& state, const DistanceMatrix& d, int depth);

  const Graph& g_;
  bool universal_;
  Circuit circuit_;
  bool tree_ = false;
  bool cycle_ = false;
  std::vector<std::pair<int, int>> guards_;  // all chords and null chords

  Mode mode_ = Mode::Unstarted;
  std::vector<Vertex> pos_;
  int stationary_ = 0;
  int mover_ = 1;
  std::pair<int, int> guard_{0, 0};
  Interval territory_;  // survivor side of the guard (Travel) or open sweep interval (Advance)
  int front_ = 0;       // slot of the advancing zombie
  std::vector<Vertex> last_from_;  // previous vertex of each zombie, for direction keeping
};

/// Lazy zombies assigned to the containers on the root path of the
/// survivor's current node. An assigned zombie steps to a neighbour strictly
/// closer to both its target and the survivor, otherwise it stays.
class CutDecompositionPolicy : public PursuerPolicy {
 public:
  /// Throws InvalidDecomposition.
  CutDecompositionPolicy(const Graph& g, CutDecomposition d);

  std::string name() const override { return "cut-decomposition"; }
  std::vector<Vertex> place(const MatchContext& ctx) override;
  void start(const MatchContext& ctx, std::span<const Vertex> placement) override;
  std::vector<Vertex> move(const MatchContext& ctx, const GameState& state) override;
  std::uint64_t memory_key() const override;

  int required_zombies() const noexcept { return load_; }
  /// Most zombies simultaneously assigned so far.
  int peak_assigned() const noexcept { return peak_; }

 private:
  void reassign(Vertex survivor);

  const Graph& g_;
  CutDecomposition d_;
  std::vector<int> node_of_;
  int load_ = 0;
  std::vector<Vertex> target_;  // per zombie, -1 when unassigned
  int peak_ = 0;
};

/// Like CutDecompositionPolicy but one zombie per clique of a clique cover of
/// each container. A zombie only moves while the survivor stands on its clique.
class CliqueCoverPolicy : public PursuerPolicy {
 public:
  /// Covers are indexed like d.nodes; empty means "compute exact covers".
  /// Throws InvalidDecomposition or InvalidCover.
  CliqueCoverPolicy(const Graph& g, CutDecomposition d, std::vector<std::vector<std::vector<Vertex>>> covers = {});

  std::string name() const override { return "clique-cover"; }
  std::vector<Vertex> place(const MatchContext& ctx) override;
  void start(const MatchContext& ctx, std::span<const Vertex> placement) override;
  std::vector<Vertex> move(const MatchContext& ctx, const GameState& state) override;
  std::uint64_t memory_key() const override;

  int required_zombies() const noexcept { return load_; }
  const std::vector<std::vector<std::vector<Vertex>>>& covers() const noexcept { return covers_; }

 private:
  void reassign(Vertex survivor);

  const Graph& g_;
  CutDecomposition d_;
  std::vector<std::vector<std::vector<Vertex>>> covers_;
  std::vector<int> node_of_;
  int load_ = 0;
  std::vector<std::pair<int, int>> target_;  // (node, clique index) or (-1, -1)
};

/// Contract names accepted by the CLI, mapped onto the policies above.
enum class PursuerKind { Outerplanar, OuterplanarUniversal, CutDecomposition, CliqueCover, Optimal };
std::optional<PursuerKind> parse_pursuer_kind(std::string_view name);

}  // namespace pursuit
