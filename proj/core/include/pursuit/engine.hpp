#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class Variant { Cops, Zombies, LazyZombies };
enum class Turn { Pursuers, Evader };
enum class PlacementMode { Chosen, Adversarial };

std::string_view to_string(Variant v);
std::string_view to_string(PlacementMode m);
Variant parse_variant(std::string_view text);
PlacementMode parse_placement_mode(std::string_view text);

/// Pursuer positions are kept in pursuer order so stateful policies can track
/// individual pursuers; `canonical()` gives the sorted multiset representative.
struct GameState {
  std::vector<Vertex> pursuers;
  Vertex evader = 0;
  Turn turn = Turn::Pursuers;

  bool captured() const;
  GameState canonical() const;
  friend bool operator==(const GameState&, const GameState&) = default;
};

/// Everything a policy may look at besides the state (full information).
struct MatchContext {
  const Graph& graph;
  const DistanceMatrix& dist;
  Variant variant;
  int k;
};

std::vector<Vertex> legal_pursuer_moves(const Graph& g, const DistanceMatrix& d, const GameState& state,
                                        int pursuer, Variant variant);
std::vector<Vertex> legal_evader_moves(const Graph& g, const GameState& state);
bool is_legal_pursuer_move(const Graph& g, const DistanceMatrix& d, Vertex from, Vertex to, Vertex evader,
                           Variant variant);

struct StepResult {
  GameState next;
  bool captured = false;
};

/// Applies a joint pursuer move (one target per pursuer) or, on the evader's
/// turn, a single-element choice. Throws IllegalMove naming the offender.
StepResult step(const Graph& g, const DistanceMatrix& d, const GameState& state, std::span<const Vertex> choice,
                Variant variant);

class PursuerPolicy {
 public:
  virtual ~PursuerPolicy() = default;
  virtual std::string name() const = 0;
  /// Round-0 placement in CHOSEN mode.
  virtual std::vector<Vertex> place(const MatchContext& ctx) = 0;
  /// Called once with the actual placement (chosen or adversarial).
  virtual void start(const MatchContext& ctx, std::span<const Vertex> placement) {
    (void)ctx;
    (void)placement;
  }
  virtual std::vector<Vertex> move(const MatchContext& ctx, const GameState& state) = 0;
  /// Internal memory relevant to future moves; 0 for memoryless policies.
  virtual std::uint64_t memory_key() const { return 0; }
};

class EvaderPolicy {
 public:
  virtual ~EvaderPolicy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const MatchContext& ctx, std::span<const Vertex> pursuers) = 0;
  virtual Vertex move(const MatchContext& ctx, const GameState& state) = 0;
  virtual std::uint64_t memory_key() const { return 0; }
};

struct TraceRecord {
  int round = 0;
  Turn mover = Turn::Pursuers;
  std::vector<Vertex> positions;
  Vertex evader = -1;  // -1 before the evader has placed
  bool captured = false;
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

enum class Outcome { Capture, RoundLimit };

struct Trace {
  Variant variant = Variant::Zombies;
  int k = 0;
  int n = 0;
  std::vector<Vertex> placements;
  std::vector<TraceRecord> records;
  Outcome outcome = Outcome::RoundLimit;
  int capture_round = -1;
  /// First round whose pursuer-turn configuration (positions and policy
  /// memories) repeats an earlier one; the play is then periodic forever.
  std::optional<int> repeat_round;
  std::optional<int> repeat_of_round;
};

struct MatchOptions {
  PlacementMode placement = PlacementMode::Chosen;
  std::vector<Vertex> placements;  // required in ADVERSARIAL mode
  int round_limit = 1000;
  bool detect_repeats = true;
};

Trace play_match(const Graph& g, const DistanceMatrix& d, Variant variant, int k, PursuerPolicy& pursuers,
                 EvaderPolicy& evader, const MatchOptions& options);

/// Re-executes a trace through `step`; throws IllegalMove on any mismatch.
void replay_trace(const Graph& g, const DistanceMatrix& d, const Trace& trace);

}  // namespace pursuit
