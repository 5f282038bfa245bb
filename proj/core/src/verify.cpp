#include "pursuit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "pursuit/constructions.hpp"
#include "pursuit/decomposition.hpp"
#include "pursuit/error.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"

namespace pursuit::verify {

using geometry::Point;
using geometry::Polygon;
using geometry::Rational;

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skipped: return "SKIPPED";
  }
  return "?";
}

bool VerifyReport::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == Status::Fail; });
}

namespace {

// Records the first failure and keeps counting cases.
struct Tally {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string edges_of(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " edges=";
  for (auto [u, v] : g.edges()) out << u << '-' << v << ' ';
  return out.str();
}

std::string value_text(const std::optional<int>& v, int k_max) {
  return v ? std::to_string(*v) : ">" + std::to_string(k_max);
}

Graph random_connected(std::mt19937_64& rng, int n, double lo, double hi) {
  StandardOptions options;
  options.seed = rng();
  options.extra_edge_probability = std::uniform_real_distribution<double>(lo, hi)(rng);
  return standard_graph(StandardKind::RandomConnected, n, options);
}

// All labelled connected graphs on n vertices.
std::vector<Graph> connected_graphs(int n) {
  EdgeList pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  const std::uint32_t total = 1u << pairs.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    EdgeList edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1u) edges.push_back(pairs[i]);
    }
    Graph g(n, edges);
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

// Lazily solved tables for k = 1..k_max of one (graph, variant).
class TableCache {
 public:
  TableCache(const Graph& g, Variant v) : g_(g), v_(v) {}
  const GameTable& at(int k) {
    auto it = tables_.find(k);
    if (it == tables_.end()) it = tables_.emplace(k, solve_game(g_, v_, k)).first;
    return it->second;
  }
  std::optional<int> number(PlacementMode mode, int k_max) {
    for (int k = 1; k <= k_max; ++k) {
      if (decide_with_table(at(k), mode).value) return k;
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  Variant v_;
  std::map<int, GameTable> tables_;
};

// ---------------------------------------------------------------- reference oracles

bool on_boundary(const Polygon& p, const Point& q) {
  for (int i = 0; i < p.size(); ++i) {
    if (geometry::on_segment(p.at(i), p.at(i + 1), q)) return true;
  }
  return false;
}

// Crossing-number parity with exact arithmetic; boundary points count as inside.
bool inside_closed(const Polygon& p, const Point& q) {
  if (on_boundary(p, q)) return true;
  bool inside = false;
  for (int i = 0; i < p.size(); ++i) {
    const Point& a = p.at(i);
    const Point& b = p.at(i + 1);
    if ((a.y > q.y) == (b.y > q.y)) continue;
    const Rational x = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y);
    if (q.x < x) inside = !inside;
  }
  return inside;
}

// Parameters along a->b where the segment meets the edge c->d.
void meeting_parameters(const Point& a, const Point& b, const Point& c, const Point& d, std::vector<Rational>& out) {
  const Rational rx = b.x - a.x, ry = b.y - a.y;
  const Rational sx = d.x - c.x, sy = d.y - c.y;
  const Rational denom = rx * sy - ry * sx;
  const Rational qx = c.x - a.x, qy = c.y - a.y;
  if (denom != 0) {
    const Rational t = (qx * sy - qy * sx) / denom;
    const Rational u = (qx * ry - qy * rx) / denom;
    if (t >= 0 && t <= 1 && u >= 0 && u <= 1) out.push_back(t);
    return;
  }
  if (qx * ry - qy * rx != 0) return;  // parallel, not collinear
  const Rational len = rx * rx + ry * ry;
  for (const Point* e : {&c, &d}) {
    const Rational t = ((e->x - a.x) * rx + (e->y - a.y) * ry) / len;
    if (t >= 0 && t <= 1) out.push_back(t);
  }
}

Graph reference_visibility(const Polygon& p) {
  const int n = p.size();
  EdgeList edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const Point& a = p.at(i);
      const Point& b = p.at(j);
      std::vector<Rational> ts{Rational(0), Rational(1)};
      for (int e = 0; e < n; ++e) meeting_parameters(a, b, p.at(e), p.at(e + 1), ts);
      std::sort(ts.begin(), ts.end());
      bool visible = true;
      for (std::size_t k = 0; k + 1 < ts.size() && visible; ++k) {
        if (ts[k] == ts[k + 1]) continue;
        const Rational t = (ts[k] + ts[k + 1]) / 2;
        visible = inside_closed(p, Point{a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
      }
      if (visible) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

// Forward layering: capture within d turns iff some (pursuer turn) or every
// (evader turn) successor captures within d-1.
std::vector<std::optional<int>> layered_capture_times(const Graph& g, Variant variant, int depth) {
  const int n = g.order();
  const auto dist = all_pairs_distances(g);
  auto index = [n](Vertex p, Vertex e, Turn t) {
    return (static_cast<std::size_t>(p) * n + e) * 2 + (t == Turn::Evader ? 1 : 0);
  };
  std::vector<std::optional<int>> time(static_cast<std::size_t>(n) * n * 2);
  for (Vertex v = 0; v < n; ++v) {
    time[index(v, v, Turn::Pursuers)] = 0;
    time[index(v, v, Turn::Evader)] = 0;
  }
  for (int d = 1; d <= depth; ++d) {
    auto next = time;
    bool changed = false;
    for (Vertex p = 0; p < n; ++p) {
      for (Vertex e = 0; e < n; ++e) {
        if (p == e) continue;
        if (!time[index(p, e, Turn::Pursuers)]) {
          GameState s{{p}, e, Turn::Pursuers};
          for (Vertex w : legal_pursuer_moves(g, dist, s, 0, variant)) {
            if (time[index(w, e, Turn::Evader)]) {
              next[index(p, e, Turn::Pursuers)] = d;
              changed = true;
              break;
            }
          }
        }
        if (!time[index(p, e, Turn::Evader)]) {
          GameState s{{p}, e, Turn::Evader};
          bool all = true;
          for (Vertex w : legal_evader_moves(g, s)) all = all && time[index(p, w, Turn::Pursuers)].has_value();
          if (all) {
            next[index(p, e, Turn::Evader)] = d;
            changed = true;
          }
        }
      }
    }
    time = std::move(next);
    if (!changed) break;
  }
  return time;
}

// ---------------------------------------------------------------- claims

using Json = io::Json;

void lower_bound_claim(ClaimResult& r, const GkInstance& inst, int expected_n) {
  const auto result = game_number(inst.graph, Variant::Zombies, PlacementMode::Chosen, 1);
  r.measured = {{"n", inst.graph.order()}, {"result", io::game_number_to_json(result)["result"]}};
  const bool ok = inst.graph.order() == expected_n && !result.value;
  r.status = ok ? Status::Pass : Status::Fail;
  if (!ok) {
    r.detail = result.value ? "a single zombie wins from placement " + std::to_string(result.witness.at(0))
                            : "unexpected vertex count " + std::to_string(inst.graph.order());
  }
}

void claim_star_lower_bound(ClaimResult& r, std::uint64_t, const Oracles&) { lower_bound_claim(r, gk_star(2), 47); }
void claim_clique_lower_bound(ClaimResult& r, std::uint64_t, const Oracles&) {
  lower_bound_claim(r, gk_clique(2), 30);
}

void claim_scripted_evasion(ClaimResult& r, std::uint64_t, const Oracles&) {
  const GkInstance inst = gk_star(2);
  const auto& g = inst.graph;
  const auto dist = all_pairs_distances(g);
  const GameTable table = solve_game(g, Variant::Zombies, 1);
  Tally tally;
  int repeats = 0;
  int shortest = -1;
  for (Vertex p = 0; p < g.order(); ++p) {
    OptimalPursuerPolicy zombie(table);
    ScriptedEvasionPolicy survivor(inst);
    MatchOptions options;
    options.placement = PlacementMode::Adversarial;
    options.placements = {p};
    options.round_limit = 300;
    const Trace t = play_match(g, dist, Variant::Zombies, 1, zombie, survivor, options);
    if (t.outcome == Outcome::Capture) {
      tally.fail("captured in round " + std::to_string(t.capture_round) + " from placement " + std::to_string(p));
      continue;
    }
    const int rounds = t.records.back().round;
    shortest = shortest < 0 ? rounds : std::min(shortest, rounds);
    if (t.repeat_round) {
      ++repeats;
    } else {
      tally.fail("no repeated state from placement " + std::to_string(p));
    }
  }
  r.measured = {{"placements", g.order()}, {"rounds_survived_min", shortest}, {"repeats_detected", repeats}};
  r.status = tally.ok && shortest >= 300 ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

void claim_small_graphs(ClaimResult& r, std::uint64_t, const Oracles&) {
  Tally tally;
  Json measured = Json::object();
  auto expect = [&](const std::string& label, const Graph& g, Variant v, PlacementMode m, std::optional<int> want) {
    const auto got = game_number(g, v, m, 3).value;
    measured[label] = value_text(got, 3);
    if (got != want) tally.fail(label + " = " + value_text(got, 3) + ", expected " + value_text(want, 3));
  };
  for (int n : {3, 5, 7}) {
    const Graph k = standard_graph(StandardKind::Clique, n);
    expect("c(K" + std::to_string(n) + ")", k, Variant::Cops, PlacementMode::Chosen, 1);
    expect("z(K" + std::to_string(n) + ")", k, Variant::Zombies, PlacementMode::Chosen, 1);
  }
  for (int n : {4, 5, 6, 7}) {
    const Graph c = standard_graph(StandardKind::Cycle, n);
    expect("c(C" + std::to_string(n) + ")", c, Variant::Cops, PlacementMode::Chosen, 2);
    expect("z(C" + std::to_string(n) + ")", c, Variant::Zombies, PlacementMode::Chosen, 2);
  }
  for (int n : {5, 6, 7}) {
    expect("u(C" + std::to_string(n) + ")", standard_graph(StandardKind::Cycle, n), Variant::Zombies,
           PlacementMode::Adversarial, std::nullopt);
  }
  r.measured = std::move(measured);
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

void claim_hierarchy(ClaimResult& r, std::uint64_t seed, const Oracles&) {
  constexpr int kMax = 3;
  constexpr int kGraphs = 300;
  std::mt19937_64 rng(seed);
  Tally tally;
  int checked = 0;
  int skipped = 0;
  for (int i = 0; i < kGraphs; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const Graph g = random_connected(rng, n, 0.05, 0.6);
    TableCache cops(g, Variant::Cops), zombies(g, Variant::Zombies), lazy(g, Variant::LazyZombies);
    const auto c = cops.number(PlacementMode::Chosen, kMax);
    const auto z = zombies.number(PlacementMode::Chosen, kMax);
    const auto zl = lazy.number(PlacementMode::Chosen, kMax);
    const auto u = zombies.number(PlacementMode::Adversarial, kMax);
    const auto ul = lazy.number(PlacementMode::Adversarial, kMax);
    auto le = [&](const char* a_name, std::optional<int> a, const char* b_name, std::optional<int> b) {
      if (!a && !b) {
        ++skipped;
        return;
      }
      ++checked;
      if (!b) return;
      if (!a || *a > *b) {
        tally.fail(std::string(a_name) + "=" + value_text(a, kMax) + " > " + b_name + "=" + value_text(b, kMax) +
                   " on " + edges_of(g));
      }
    };
    le("c", c, "z_L", zl);
    le("z_L", zl, "z", z);
    le("z", z, "u", u);
    le("z_L", zl, "u_L", ul);
    le("u_L", ul, "u", u);
  }
  r.measured = {{"graphs", kGraphs}, {"inequalities_checked", checked}, {"inequalities_skipped", skipped}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

// Plays `pursuer` against the optimal survivor; returns the capture round or -1.
int run_against_optimal(const Graph& g, const DistanceMatrix& dist, const GameTable& table, PursuerPolicy& pursuer,
                        int k, const std::vector<Vertex>& placements, int round_limit) {
  OptimalEvaderPolicy survivor(table);
  MatchOptions options;
  options.round_limit = round_limit;
  if (!placements.empty()) {
    options.placement = PlacementMode::Adversarial;
    options.placements = placements;
  }
  const Trace t = play_match(g, dist, Variant::LazyZombies, k, pursuer, survivor, options);
  return t.outcome == Outcome::Capture ? t.capture_round : -1;
}

void claim_outerplanar(ClaimResult& r, std::uint64_t seed, const Oracles&) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (int n = 4; n <= 12; ++n) graphs.emplace_back("fan " + std::to_string(n), standard_graph(StandardKind::Fan, n));
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    StandardOptions options;
    options.seed = rng();
    const int n = std::uniform_int_distribution<int>(4, 12)(rng);
    graphs.emplace_back("random outerplanar #" + std::to_string(i),
                        standard_graph(StandardKind::RandomOuterplanar, n, options));
  }
  Tally tally;
  int worst_margin = 1 << 30;
  for (const auto& [label, g] : graphs) {
    const auto dist = all_pairs_distances(g);
    const GameTable table = solve_game(g, Variant::LazyZombies, 2);
    if (!decide_with_table(table, PlacementMode::Chosen).value) tally.fail("solver says z_L > 2 on " + label);
    OuterplanarLazyPolicy policy(g, false);
    const int n = g.order();
    try {
      const int round = run_against_optimal(g, dist, table, policy, 2, {}, 4 * n);
      if (round < 0 || round >= 2 * n) {
        tally.fail(label + ": capture round " + std::to_string(round) + " not below " + std::to_string(2 * n));
      } else {
        worst_margin = std::min(worst_margin, 2 * n - round);
      }
    } catch (const Error& e) {
      tally.fail(label + ": " + e.what() + " on " + edges_of(g));
    }
  }
  r.measured = {{"graphs", graphs.size()}, {"smallest_margin_below_2n", worst_margin}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

void claim_outerplanar_universal(ClaimResult& r, std::uint64_t, const Oracles&) {
  Tally tally;
  int runs = 0;
  int latest = 0;
  for (int n = 4; n <= 8; ++n) {
    const Graph g = standard_graph(StandardKind::Fan, n);
    const auto dist = all_pairs_distances(g);
    const GameTable table = solve_game(g, Variant::LazyZombies, 2);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        ++runs;
        OuterplanarLazyPolicy policy(g, true);
        try {
          const int round = run_against_optimal(g, dist, table, policy, 2, {a, b}, 10 * n);
          if (round < 0) tally.fail("fan " + std::to_string(n) + " placement (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ") not captured");
          latest = std::max(latest, round);
        } catch (const Error& e) {
          tally.fail("fan " + std::to_string(n) + " placement (" + std::to_string(a) + ", " + std::to_string(b) +
                     "): " + e.what());
        }
      }
    }
  }
  r.measured = {{"runs", runs}, {"latest_capture_round", latest}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

void claim_decomposition_conversions(ClaimResult& r, std::uint64_t seed, const Oracles& o) {
  constexpr int kCases = 200;
  std::mt19937_64 rng(seed);
  Tally tally;
  for (int i = 0; i < kCases; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Graph g = random_connected(rng, n, 0.05, 0.6);
    const auto td = treedepth(g);
    const int expected = o.treedepth(g);
    const CutDecomposition d = td_tree_to_cut_decomposition(td.tree);
    if (auto check = validate_cut_decomposition(g, d); !check) {
      tally.fail("compressed tree is not a cut decomposition (" + check.violation + ") on " + edges_of(g));
    } else if (load(g, d) != expected) {
      tally.fail("load " + std::to_string(load(g, d)) + " != treedepth " + std::to_string(expected) + " on " +
                 edges_of(g));
    }
  }
  for (int i = 0; i < kCases; ++i) {
    const int n = std::uniform_int_distribution<int>(1, 8)(rng);
    const Graph g = random_connected(rng, n, 0.05, 0.6);
    const CutDecomposition d = random_cut_decomposition(g, rng);
    const TreedepthTree t = cut_decomposition_to_td_tree(d);
    const int expected = o.treedepth(g);
    if (auto check = validate_treedepth_tree(g, t); !check) {
      tally.fail("expanded decomposition is not a treedepth tree (" + check.violation + ") on " + edges_of(g));
    } else if (!(expected <= t.height() && t.height() <= load(g, d))) {
      tally.fail("treedepth " + std::to_string(expected) + ", tree height " + std::to_string(t.height()) + ", load " +
                 std::to_string(load(g, d)) + " out of order on " + edges_of(g));
    }
  }
  r.measured = {{"optimal_trees", kCases}, {"random_decompositions", kCases}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

struct StrategyInstance {
  Graph graph;
  CutDecomposition decomposition;
};

// Graphs whose td-zombie game does not fit the solver budget are redrawn;
// `rejected` counts them.
std::vector<StrategyInstance> strategy_instances(std::uint64_t seed, int* rejected = nullptr) {
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::vector<StrategyInstance> out;
  int redrawn = 0;
  while (out.size() < 100) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    Graph g = random_connected(rng, n, 0.02, 0.3);
    const auto td = treedepth(g);
    if (estimated_state_edges(g, td.value) > default_state_budget()) {
      ++redrawn;
      continue;
    }
    CutDecomposition d = td_tree_to_cut_decomposition(td.tree);
    out.push_back({std::move(g), std::move(d)});
  }
  if (rejected) *rejected = redrawn;
  return out;
}

BigInt power(BigInt base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

void claim_cut_strategy(ClaimResult& r, std::uint64_t seed, const Oracles& o) {
  Tally tally;
  int slowest_margin = 1 << 30;
  int rejected = 0;
  const auto instances = strategy_instances(seed, &rejected);
  for (const auto& [g, d] : instances) {
    const int td = o.treedepth(g);
    if (load(g, d) != td) {
      tally.fail("decomposition load differs from treedepth on " + edges_of(g));
      continue;
    }
    const auto dist = all_pairs_distances(g);
    const int delta = diameter(g, dist);
    const BigInt time = time_bound(g, d);
    const BigInt bound = power(BigInt(d.cdw()) * (delta - 1) + 1, d.height() + 1);
    if (time > bound) tally.fail("time " + time.str() + " exceeds " + bound.str() + " on " + edges_of(g));
    const GameTable table = solve_game(g, Variant::LazyZombies, td);
    CutDecompositionPolicy policy(g, d);
    const int limit = static_cast<int>(std::min<BigInt>(time + 1, BigInt(100000)));
    try {
      const int round = run_against_optimal(g, dist, table, policy, td, {}, limit);
      if (round < 0) {
        tally.fail("no capture within time+1 = " + std::to_string(limit) + " rounds on " + edges_of(g));
      } else {
        slowest_margin = std::min(slowest_margin, limit - round);
      }
    } catch (const Error& e) {
      tally.fail(std::string(e.what()) + " on " + edges_of(g));
    }
  }
  r.measured = {{"graphs", instances.size()},
                {"redrawn_over_solver_budget", rejected},
                {"smallest_margin_below_time_plus_1", slowest_margin}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

void claim_clique_strategy(ClaimResult& r, std::uint64_t seed, const Oracles&) {
  Tally tally;
  int latest_clique_round = 0;
  for (int n = 1; n <= 8; ++n) {
    const Graph g = standard_graph(StandardKind::Clique, n);
    const auto dist = all_pairs_distances(g);
    CutDecomposition d;
    d.nodes.push_back({-1, {}});
    d.nodes[0].container.resize(static_cast<std::size_t>(n));
    std::iota(d.nodes[0].container.begin(), d.nodes[0].container.end(), 0);
    std::vector<Vertex> all = d.nodes[0].container;
    CliqueCoverPolicy policy(g, d, {{all}});
    const GameTable table = solve_game(g, Variant::LazyZombies, 1);
    const int round = run_against_optimal(g, dist, table, policy, 1, {}, 10);
    if (round < 0 || round > 2) tally.fail("K" + std::to_string(n) + ": capture round " + std::to_string(round));
    latest_clique_round = std::max(latest_clique_round, round);
  }
  int instances_run = 0;
  for (const auto& [g, d] : strategy_instances(seed)) {
    const int ls = load_star(g, d);
    if (ls > load(g, d)) tally.fail("load* " + std::to_string(ls) + " > load on " + edges_of(g));
    const auto dist = all_pairs_distances(g);
    const BigInt time = time_star(g, d);
    const int limit = static_cast<int>(std::min<BigInt>(time + 1, BigInt(100000)));
    const GameTable table = solve_game(g, Variant::LazyZombies, ls);
    CliqueCoverPolicy policy(g, d);
    ++instances_run;
    try {
      const int round = run_against_optimal(g, dist, table, policy, ls, {}, limit);
      if (round < 0) tally.fail("no capture within time*+1 = " + std::to_string(limit) + " rounds on " + edges_of(g));
    } catch (const Error& e) {
      tally.fail(std::string(e.what()) + " on " + edges_of(g));
    }
  }
  r.measured = {{"cliques_latest_capture_round", latest_clique_round}, {"decomposition_instances", instances_run}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

void claim_separator_chain(ClaimResult& r, std::uint64_t, const Oracles& o) {
  Tally tally;
  int graphs = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      ++graphs;
      const auto report = check_separator_chain(g);
      if (report.treedepth != o.treedepth(g)) tally.fail("treedepth disagrees with the reference on " + edges_of(g));
      if (report.treewidth != o.treewidth(g)) tally.fail("treewidth disagrees with the reference on " + edges_of(g));
      if (!report.holds()) tally.fail("chain broken: " + io::separator_chain_to_json(report).dump() + " on " + edges_of(g));
    }
  }
  r.measured = {{"graphs", graphs}, {"orders", "2..6"}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

Polygon transformed(const Polygon& p, const Rational& scale, const Rational& dx, const Rational& dy) {
  Polygon out;
  for (const auto& v : p.vertices) out.vertices.push_back({v.x * scale + dx, v.y * scale + dy});
  return out;
}

void claim_visibility(ClaimResult& r, std::uint64_t seed, const Oracles& o) {
  Tally tally;
  for (int n = 4; n <= 8; ++n) {
    const Graph g = geometry::visibility_graph(convex_polygon(n));
    if (g != standard_graph(StandardKind::Clique, n)) tally.fail("convex " + std::to_string(n) + "-gon is not complete");
  }
  std::mt19937_64 rng(seed);
  int random_polygons = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = std::uniform_int_distribution<int>(5, 12)(rng);
    const Polygon p = random_star_polygon(n, rng());
    ++random_polygons;
    const Graph g = geometry::visibility_graph(p);
    const std::string label = "random polygon #" + std::to_string(i) + " " + io::polygon_to_json(p).dump();
    if (g != o.visibility(p)) tally.fail(label + " differs from the reference");

    Polygon reversed = p;
    std::reverse(reversed.vertices.begin(), reversed.vertices.end());
    EdgeList mapped;
    const Graph reversed_graph = geometry::visibility_graph(reversed);
    for (auto [u, v] : reversed_graph.edges()) mapped.emplace_back(n - 1 - u, n - 1 - v);
    if (Graph(n, mapped) != g) tally.fail(label + " changes under orientation reversal");

    if (geometry::visibility_graph(transformed(p, Rational(3, 7), Rational(5, 2), Rational(-1, 3))) != g) {
      tally.fail(label + " changes under scaling");
    }
  }
  r.measured = {{"convex_orders", "4..8"}, {"random_polygons", random_polygons}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

void claim_solver_oracle(ClaimResult& r, std::uint64_t, const Oracles& o) {
  Tally tally;
  int games = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      for (Variant v : {Variant::Cops, Variant::Zombies, Variant::LazyZombies}) {
        ++games;
        const GameTable table = solve_game(g, v, 1);
        const int depth = 2 * n * n + 2;
        for (Vertex p = 0; p < n; ++p) {
          for (Vertex e = 0; e < n; ++e) {
            for (Turn t : {Turn::Pursuers, Turn::Evader}) {
              const GameState s{{p}, e, t};
              const auto want = o.capture_within(g, v, s, depth);
              const auto got = table.turns_to_capture(s);
              const bool same = want ? got == *want : got == GameTable::kSurvivorWin;
              if (!same) {
                tally.fail(std::string(to_string(v)) + " state (" + std::to_string(p) + ", " + std::to_string(e) +
                           (t == Turn::Pursuers ? ", P" : ", E") + ") solver " + std::to_string(got) +
                           " reference " + (want ? std::to_string(*want) : "none") + " on " + edges_of(g));
              }
            }
          }
        }
      }
    }
  }
  r.measured = {{"games", games}, {"orders", "1..5"}, {"k", 1}};
  r.status = tally.ok ? Status::Pass : Status::Fail;
  r.detail = tally.detail;
}

using ClaimFn = void (*)(ClaimResult&, std::uint64_t, const Oracles&);

struct Entry {
  ClaimInfo info;
  ClaimFn run;
};

const std::vector<Entry>& entries() {
  static const std::vector<Entry> table{
      {{1, "star-lower-bound", "lower-bounds", "one zombie loses on every placement in the 2-component star family"},
       claim_star_lower_bound},
      {{2, "clique-lower-bound", "lower-bounds", "one zombie loses on every placement in the 2-component clique family"},
       claim_clique_lower_bound},
      {{3, "scripted-evasion", "lower-bounds",
        "the scripted survivor outlasts 300 rounds with a repeated state from every zombie placement"},
       claim_scripted_evasion},
      {{4, "small-graph-numbers", "small-graphs", "cop, zombie and universal zombie numbers of cliques and cycles"},
       claim_small_graphs},
      {{5, "number-hierarchy", "hierarchy", "c <= z_L <= z <= u and z_L <= u_L <= u on random graphs"},
       claim_hierarchy},
      {{6, "outerplanar-two-lazy", "outerplanar",
        "two lazy zombies capture on fans and random outerplanar graphs in fewer than 2n rounds"},
       claim_outerplanar},
      {{7, "outerplanar-any-start", "outerplanar", "two lazy zombies capture on fans from every placement pair"},
       claim_outerplanar_universal},
      {{8, "treedepth-load", "decompositions", "optimal treedepth trees compress to load = td; expansions give td <= load"},
       claim_decomposition_conversions},
      {{9, "cut-decomposition-capture", "cut-strategy",
        "td lazy zombies capture within time+1 rounds and time obeys the power bound"},
       claim_cut_strategy},
      {{10, "clique-cover-capture", "clique-strategy",
        "clique-assigned zombies capture within time*+1 rounds and load* <= load"},
       claim_clique_strategy},
      {{11, "separator-chain", "separators", "s_G(n) <= td <= sum of s_G(n/2^i) <= (tw+1) log2 n for all small graphs"},
       claim_separator_chain},
      {{12, "visibility-graphs", "visibility",
        "visibility graphs match the reference and are invariant under reversal and scaling"},
       claim_visibility},
      {{13, "solver-minimax", "solver", "retrograde solution equals depth-bounded minimax on all graphs up to 5 vertices"},
       claim_solver_oracle},
  };
  return table;
}

}  // namespace

Oracles builtin_oracles() {
  Oracles o;
  o.treedepth = [](const Graph& g) { return treedepth(g).value; };
  o.treewidth = [](const Graph& g) { return treewidth_exact(g); };
  o.visibility = reference_visibility;
  // Per-graph cache: the claim asks about every state of the same game in turn.
  struct Cache {
    std::uint64_t fingerprint = 0;
    int n = -1;
    Variant variant = Variant::Cops;
    int depth = -1;
    std::vector<std::optional<int>> times;
  };
  auto cache = std::make_shared<Cache>();
  o.capture_within = [cache](const Graph& g, Variant v, const GameState& s, int depth) -> std::optional<int> {
    if (s.pursuers.size() != 1) throw Error(ErrorCode::BadParameter, "reference minimax handles one pursuer");
    const auto fp = graph_fingerprint(g);
    if (cache->fingerprint != fp || cache->n != g.order() || cache->variant != v || cache->depth != depth) {
      *cache = Cache{fp, g.order(), v, depth, layered_capture_times(g, v, depth)};
    }
    const auto n = static_cast<std::size_t>(g.order());
    return cache->times[(static_cast<std::size_t>(s.pursuers[0]) * n + s.evader) * 2 + (s.turn == Turn::Evader)];
  };
  return o;
}

const std::vector<ClaimInfo>& claims() {
  static const std::vector<ClaimInfo> out = [] {
    std::vector<ClaimInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return out;
}

std::vector<int> select(std::string_view selector) {
  // Contract aliases used on the command line.
  static const std::map<std::string_view, std::vector<int>> aliases{
      {"all", {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13}},
      {"thm1", {1, 2, 3}},
      {"thm3", {2}},
      {"thm6", {6}},
      {"cor1", {7}},
      {"thm7", {9}},
      {"thm8", {8}},
      {"thm9", {10}},
      {"lemma2", {11}},
  };
  if (auto it = aliases.find(selector); it != aliases.end()) return it->second;
  std::vector<int> out;
  for (const auto& c : claims()) {
    if (c.suite == selector || c.name == selector || std::to_string(c.id) == selector) out.push_back(c.id);
  }
  return out;
}

ClaimResult run_claim(int id, std::uint64_t seed, const Oracles& oracles) {
  const auto& table = entries();
  const auto it = std::find_if(table.begin(), table.end(), [id](const Entry& e) { return e.info.id == id; });
  if (it == table.end()) throw Error(ErrorCode::BadParameter, "no claim " + std::to_string(id));
  Oracles filled = oracles;
  const Oracles fallback = builtin_oracles();
  if (!filled.treedepth) filled.treedepth = fallback.treedepth;
  if (!filled.treewidth) filled.treewidth = fallback.treewidth;
  if (!filled.visibility) filled.visibility = fallback.visibility;
  if (!filled.capture_within) filled.capture_within = fallback.capture_within;

  ClaimResult r;
  r.id = id;
  r.name = it->info.name;
  r.suite = it->info.suite;
  r.claim = it->info.claim;
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(r, seed, filled);
  } catch (const Error& e) {
    r.status = Status::Fail;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

VerifyReport run(const std::vector<int>& ids, std::uint64_t seed, const Oracles& oracles) {
  VerifyReport report;
  report.seed = seed;
  for (int id : ids) report.claims.push_back(run_claim(id, seed, oracles));
  return report;
}

io::Json report_to_json(const VerifyReport& r, bool with_timing) {
  Json claims_json = Json::array();
  for (const auto& c : r.claims) {
    Json j{{"id", c.id},
           {"name", c.name},
           {"suite", c.suite},
           {"claim", c.claim},
           {"status", to_string(c.status)},
           {"measured", c.measured},
           {"detail", c.detail}};
    if (with_timing) j["seconds"] = c.seconds;
    claims_json.push_back(std::move(j));
  }
  return Json{{"seed", r.seed}, {"passed", r.passed()}, {"claims", std::move(claims_json)}};
}

std::string report_to_text(const VerifyReport& r) {
  std::string out;
  for (const auto& c : r.claims) {
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", c.seconds);
    out += std::string(to_string(c.status)) + " " + std::to_string(c.id) + " " + c.name + " (" + timing + ") " +
           c.measured.dump();
    if (!c.detail.empty()) out += " -- " + c.detail;
    out += '\n';
  }
  return out;
}

Polygon random_star_polygon(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "a polygon needs at least 3 vertices");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-20, 20);
  // Exact angular order around the origin: half-plane first, then cross product.
  auto upper = [](const Point& p) { return p.y > 0 || (p.y == 0 && p.x > 0); };
  auto before = [&](const Point& a, const Point& b) {
    if (upper(a) != upper(b)) return upper(a);
    return a.x * b.y - a.y * b.x > 0;
  };
  for (;;) {
    Polygon p;
    while (p.size() < n) {
      Point q{coord(rng), coord(rng)};
      if (q.x == 0 && q.y == 0) continue;
      const bool same_ray = std::any_of(p.vertices.begin(), p.vertices.end(), [&](const Point& o) {
        return o.x * q.y - o.y * q.x == 0 && o.x * q.x + o.y * q.y > 0;
      });
      if (!same_ray) p.vertices.push_back(q);
    }
    std::sort(p.vertices.begin(), p.vertices.end(), before);
    if (!geometry::validate_simple_polygon(p)) return p;
  }
}

Polygon convex_polygon(int n) {
  if (n < 3) throw Error(ErrorCode::TooFewVertices, "a polygon needs at least 3 vertices");
  Polygon p;
  for (int i = 0; i < n; ++i) p.vertices.push_back({Rational(i), Rational(i * i)});
  return p;
}

}  // namespace pursuit::verify
