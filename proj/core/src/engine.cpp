#include "pursuit/engine.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "pursuit/error.hpp"

namespace pursuit {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Cops: return "cops";
    case Variant::Zombies: return "zombies";
    case Variant::LazyZombies: return "lazy";
  }
  return "?";
}

std::string_view to_string(PlacementMode m) { return m == PlacementMode::Chosen ? "chosen" : "adversarial"; }

Variant parse_variant(std::string_view text) {
  if (text == "cops" || text == "cop") return Variant::Cops;
  if (text == "zombies" || text == "zombie") return Variant::Zombies;
  if (text == "lazy" || text == "lazy-zombies" || text == "lazy_zombies") return Variant::LazyZombies;
  throw Error(ErrorCode::BadParameter, "unknown variant '" + std::string(text) + "'");
}

PlacementMode parse_placement_mode(std::string_view text) {
  if (text == "chosen") return PlacementMode::Chosen;
  if (text == "adversarial" || text == "universal") return PlacementMode::Adversarial;
  throw Error(ErrorCode::BadParameter, "unknown placement mode '" + std::string(text) + "'");
}

bool GameState::captured() const { return std::find(pursuers.begin(), pursuers.end(), evader) != pursuers.end(); }

GameState GameState::canonical() const {
  GameState out = *this;
  std::sort(out.pursuers.begin(), out.pursuers.end());
  return out;
}

bool is_legal_pursuer_move(const Graph& g, const DistanceMatrix& d, Vertex from, Vertex to, Vertex evader,
                           Variant variant) {
  if (to == from) return variant != Variant::Zombies;
  if (!g.adjacent(from, to)) return false;
  if (variant == Variant::Cops) return true;
  return d(to, evader) == d(from, evader) - 1;
}

std::vector<Vertex> legal_pursuer_moves(const Graph& g, const DistanceMatrix& d, const GameState& state,
                                        int pursuer, Variant variant) {
  if (state.turn != Turn::Pursuers) throw Error(ErrorCode::WrongTurn, "pursuer move requested on the evader's turn");
  if (state.captured()) throw Error(ErrorCode::TerminalState, "game already over");
  const Vertex u = state.pursuers.at(static_cast<std::size_t>(pursuer));
  std::vector<Vertex> out;
  if (variant != Variant::Zombies) out.push_back(u);
  for (Vertex w : g.neighbors(u)) {
    if (is_legal_pursuer_move(g, d, u, w, state.evader, variant)) out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> legal_evader_moves(const Graph& g, const GameState& state) {
  if (state.turn != Turn::Evader) throw Error(ErrorCode::WrongTurn, "evader move requested on the pursuers' turn");
  if (state.captured()) throw Error(ErrorCode::TerminalState, "game already over");
  std::vector<Vertex> out = g.neighbors(state.evader);
  out.push_back(state.evader);
  std::sort(out.begin(), out.end());
  return out;
}

StepResult step(const Graph& g, const DistanceMatrix& d, const GameState& state, std::span<const Vertex> choice,
                Variant variant) {
  if (state.captured()) throw Error(ErrorCode::TerminalState, "game already over");
  StepResult result{state, false};
  if (state.turn == Turn::Pursuers) {
    if (choice.size() != state.pursuers.size()) {
      throw Error(ErrorCode::IllegalMove, "joint move has " + std::to_string(choice.size()) + " entries for " +
                                              std::to_string(state.pursuers.size()) + " pursuers");
    }
    for (std::size_t i = 0; i < choice.size(); ++i) {
      if (!is_legal_pursuer_move(g, d, state.pursuers[i], choice[i], state.evader, variant)) {
        throw Error(ErrorCode::IllegalMove, "pursuer " + std::to_string(i) + " cannot move " +
                                                std::to_string(state.pursuers[i]) + " -> " + std::to_string(choice[i]));
      }
    }
    result.next.pursuers.assign(choice.begin(), choice.end());
    result.next.turn = Turn::Evader;
  } else {
    if (choice.size() != 1) throw Error(ErrorCode::IllegalMove, "evader move must name one vertex");
    const Vertex to = choice[0];
    if (to != state.evader && !g.adjacent(state.evader, to)) {
      throw Error(ErrorCode::IllegalMove,
                  "evader cannot move " + std::to_string(state.evader) + " -> " + std::to_string(to));
    }
    result.next.evader = to;
    result.next.turn = Turn::Pursuers;
  }
  result.captured = result.next.captured();
  return result;
}

namespace {

void check_vertex(const Graph& g, Vertex v, const std::string& who) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::PolicyIllegalMove, who + " chose vertex " + std::to_string(v) + " outside the graph");
  }
}

}  // namespace

Trace play_match(const Graph& g, const DistanceMatrix& d, Variant variant, int k, PursuerPolicy& pursuers,
                 EvaderPolicy& evader, const MatchOptions& options) {
  if (k < 1) throw Error(ErrorCode::BadParameter, "need at least one pursuer");
  const MatchContext ctx{g, d, variant, k};
  Trace trace;
  trace.variant = variant;
  trace.k = k;
  trace.n = g.order();

  std::vector<Vertex> placement;
  if (options.placement == PlacementMode::Adversarial) {
    if (static_cast<int>(options.placements.size()) != k) {
      throw Error(ErrorCode::BadParameter, "adversarial mode needs exactly k placements");
    }
    placement = options.placements;
  } else {
    placement = pursuers.place(ctx);
  }
  if (static_cast<int>(placement.size()) != k) {
    throw Error(ErrorCode::PolicyIllegalMove, pursuers.name() + " placed " + std::to_string(placement.size()) +
                                                  " pursuers, expected " + std::to_string(k));
  }
  for (Vertex v : placement) check_vertex(g, v, pursuers.name());
  pursuers.start(ctx, placement);
  trace.placements = placement;
  trace.records.push_back({0, Turn::Pursuers, placement, -1, false});

  GameState state{placement, evader.place(ctx, placement), Turn::Pursuers};
  check_vertex(g, state.evader, evader.name());
  trace.records.push_back({0, Turn::Evader, state.pursuers, state.evader, state.captured()});
  if (state.captured()) {
    trace.outcome = Outcome::Capture;
    trace.capture_round = 0;
    return trace;
  }

  using Key = std::tuple<std::vector<Vertex>, Vertex, std::uint64_t, std::uint64_t>;
  std::map<Key, int> seen;
  for (int round = 1; round <= options.round_limit; ++round) {
    if (options.detect_repeats && !trace.repeat_round) {
      Key key{state.pursuers, state.evader, pursuers.memory_key(), evader.memory_key()};
      auto [it, fresh] = seen.emplace(std::move(key), round);
      if (!fresh) {
        trace.repeat_round = round;
        trace.repeat_of_round = it->second;
      }
    }
    auto joint = pursuers.move(ctx, state);
    for (Vertex v : joint) check_vertex(g, v, pursuers.name());
    StepResult after;
    try {
      after = step(g, d, state, joint, variant);
    } catch (const Error& e) {
      throw Error(ErrorCode::PolicyIllegalMove, pursuers.name() + ": " + e.what());
    }
    state = after.next;
    trace.records.push_back({round, Turn::Pursuers, state.pursuers, state.evader, after.captured});
    if (after.captured) {
      trace.outcome = Outcome::Capture;
      trace.capture_round = round;
      return trace;
    }
    Vertex choice = evader.move(ctx, state);
    check_vertex(g, choice, evader.name());
    try {
      after = step(g, d, state, std::span<const Vertex>(&choice, 1), variant);
    } catch (const Error& e) {
      throw Error(ErrorCode::PolicyIllegalMove, evader.name() + ": " + e.what());
    }
    state = after.next;
    trace.records.push_back({round, Turn::Evader, state.pursuers, state.evader, after.captured});
    if (after.captured) {
      trace.outcome = Outcome::Capture;
      trace.capture_round = round;
      return trace;
    }
  }
  trace.outcome = Outcome::RoundLimit;
  return trace;
}

void replay_trace(const Graph& g, const DistanceMatrix& d, const Trace& trace) {
  if (trace.records.size() < 2) throw Error(ErrorCode::IllegalMove, "trace lacks placement records");
  const auto& first = trace.records[0];
  const auto& second = trace.records[1];
  if (first.positions != trace.placements || second.positions != trace.placements) {
    throw Error(ErrorCode::IllegalMove, "placement records disagree with header");
  }
  GameState state{trace.placements, second.evader, Turn::Pursuers};
  if (state.captured() != second.captured) throw Error(ErrorCode::IllegalMove, "capture flag mismatch at placement");
  bool captured = second.captured;
  for (std::size_t i = 2; i < trace.records.size(); ++i) {
    if (captured) throw Error(ErrorCode::IllegalMove, "records continue after capture");
    const auto& rec = trace.records[i];
    if (rec.mover != state.turn) throw Error(ErrorCode::IllegalMove, "turn order broken at record " + std::to_string(i));
    StepResult after = state.turn == Turn::Pursuers
                           ? step(g, d, state, rec.positions, trace.variant)
                           : step(g, d, state, std::span<const Vertex>(&rec.evader, 1), trace.variant);
    if (after.next.pursuers != rec.positions || after.next.evader != rec.evader || after.captured != rec.captured) {
      throw Error(ErrorCode::IllegalMove, "record " + std::to_string(i) + " does not follow from its predecessor");
    }
    state = after.next;
    captured = after.captured;
  }
}

}  // namespace pursuit
