#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pursuit/constructions.hpp"
#include "pursuit/decomposition.hpp"
#include "pursuit/engine.hpp"
#include "pursuit/error.hpp"
#include "pursuit/geometry.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/io.hpp"
#include "pursuit/solver.hpp"
#include "pursuit/strategies.hpp"
#include "pursuit/verify.hpp"

namespace {

using pursuit::Error;
using pursuit::ErrorCode;
using pursuit::Graph;
using pursuit::Vertex;
using pursuit::io::Json;

enum Exit : int { kOk = 0, kUsage = 1, kResource = 2, kFail = 3, kRoundLimit = 4 };

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::StateBudgetExceeded:
    case ErrorCode::TooLarge:
    case ErrorCode::SetTooLarge:
      return kResource;
    case ErrorCode::PolicyIllegalMove:
    case ErrorCode::IllegalMove:
      return kFail;
    default:
      return kUsage;
  }
}

[[noreturn]] void usage_error(const std::string& what) { throw Error(ErrorCode::BadParameter, what); }

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    pursuit::io::write_file(out, text);
  }
}

std::string pretty(const Json& j) { return j.dump(2) + "\n"; }

std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      usage_error("'" + item + "' is not a vertex id");
    }
  }
  return out;
}

std::string to_decimal(const pursuit::BigInt& v) { return v.str(); }

pursuit::BigInt power(pursuit::BigInt base, int exponent) {
  pursuit::BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

// ---------------------------------------------------------------- gen

struct GenArgs {
  std::string kind;
  int n = 0;
  int k = 2;
  int a_star = 0;
  std::uint64_t seed = 1;
  double edge_probability = 0.3;
  double chord_probability = 0.5;
  std::string format = "json";
  std::string out;
  std::string meta;
};

std::string default_meta_path(const std::string& out) {
  std::filesystem::path p(out);
  p.replace_extension(".meta.json");
  return p.string();
}

int run_gen(const GenArgs& a) {
  Graph graph;
  Json sidecar;
  if (a.kind == "gk-star" || a.kind == "gk-clique" || a.kind == "gk-tree") {
    pursuit::GkInstance inst;
    if (a.kind == "gk-star") {
      inst = pursuit::gk_star(a.k, a.a_star > 0 ? a.a_star : 10);
    } else if (a.kind == "gk-clique") {
      inst = pursuit::gk_clique(a.k, a.a_star > 0 ? a.a_star : 6);
    } else {
      if (a.a_star > 0 && a.a_star != pursuit::gk_tree_a_star(a.k)) {
        usage_error("gk-tree fixes a* = " + std::to_string(pursuit::gk_tree_a_star(a.k)) + " for k = " +
                    std::to_string(a.k));
      }
      inst = pursuit::gk_tree(a.k);
    }
    graph = inst.graph;
    sidecar = pursuit::io::gk_sidecar(inst);
  } else {
    pursuit::StandardOptions options;
    options.seed = a.seed;
    options.extra_edge_probability = a.edge_probability;
    options.chord_keep_probability = a.chord_probability;
    if (a.n <= 0) usage_error("--n is required for " + a.kind);
    graph = pursuit::standard_graph(pursuit::parse_standard_kind(a.kind), a.n, options);
    sidecar = Json{{"family", a.kind}, {"n", graph.order()}, {"seed", a.seed}};
  }

  if (a.format == "edges") {
    emit(pursuit::io::graph_to_edge_list(graph), a.out);
  } else {
    emit(pretty(pursuit::io::graph_to_json(graph)), a.out);
  }
  std::string meta = a.meta;
  if (meta.empty() && !a.out.empty() && a.out != "-") meta = default_meta_path(a.out);
  if (!meta.empty()) pursuit::io::write_file(meta, pretty(sidecar));
  return kOk;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string graph;
  std::string variant = "zombies";
  std::string mode = "chosen";
  int k_max = 3;
  bool json = false;
};

int run_solve(const SolveArgs& a) {
  const Graph g = pursuit::io::read_graph_file(a.graph);
  const auto result = pursuit::game_number(g, pursuit::parse_variant(a.variant), pursuit::parse_placement_mode(a.mode),
                                           a.k_max);
  const Json j = pursuit::io::game_number_to_json(result);
  if (a.json) {
    std::cout << pretty(j);
    return kOk;
  }
  std::cout << j["result"].get<std::string>();
  if (!result.witness.empty()) {
    std::cout << (result.value ? " placement " : " refuted placement ") << Json(result.witness).dump();
  }
  if (result.counter_evader) std::cout << " survivor " << *result.counter_evader;
  std::cout << '\n';
  return kOk;
}

// ---------------------------------------------------------------- play

struct PlayArgs {
  std::string graph;
  std::string variant = "zombies";
  int k = 1;
  std::string pursuer = "optimal";
  std::string evader = "optimal";
  std::string placements;
  int rounds = 1000;
  std::string decomp;
  std::string meta;
  int component = -1;
  std::string out;
  bool json = false;
};

pursuit::CutDecomposition decomposition_for(const Graph& g, const std::string& path) {
  if (!path.empty()) return pursuit::io::decomposition_from_json(pursuit::io::read_json_file(path));
  return pursuit::td_tree_to_cut_decomposition(pursuit::treedepth(g).tree);
}

pursuit::GkInstance instance_from_sidecar(const Graph& g, const std::string& path) {
  if (path.empty()) usage_error("script-evasion needs --meta with the generator sidecar");
  const Json meta = pursuit::io::read_json_file(path);
  if (!meta.contains("family") || !meta.contains("k")) usage_error(path + " is not a gk sidecar");
  const std::string family = meta["family"].get<std::string>();
  const int k = meta["k"].get<int>();
  const int a_star = meta.value("a_star", 0);
  pursuit::GkInstance inst;
  if (family == "gk-star") {
    inst = pursuit::gk_star(k, a_star);
  } else if (family == "gk-clique") {
    inst = pursuit::gk_clique(k, a_star);
  } else if (family == "gk-tree") {
    inst = pursuit::gk_tree(k);
  } else {
    usage_error("sidecar family '" + family + "' has no scripted survivor");
  }
  if (inst.graph.order() != g.order() || inst.graph.edges() != g.edges()) {
    usage_error("graph does not match the family described by " + path);
  }
  return inst;
}

const char* outcome_name(pursuit::Outcome o) { return o == pursuit::Outcome::Capture ? "CAPTURE" : "ROUND_LIMIT"; }

int run_play(const PlayArgs& a) {
  const Graph g = pursuit::io::read_graph_file(a.graph);
  const auto variant = pursuit::parse_variant(a.variant);
  const auto kind = pursuit::parse_pursuer_kind(a.pursuer);
  if (!kind) usage_error("unknown pursuer policy '" + a.pursuer + "'");
  if (a.evader != "optimal" && a.evader != "script-evasion") usage_error("unknown evader policy '" + a.evader + "'");
  if (a.rounds < 1) usage_error("--rounds must be positive");

  const pursuit::DistanceMatrix dist = pursuit::all_pairs_distances(g);
  std::optional<pursuit::GameTable> table;
  auto solved = [&]() -> const pursuit::GameTable& {
    if (!table) table.emplace(pursuit::solve_game(g, variant, a.k));
    return *table;
  };

  std::unique_ptr<pursuit::PursuerPolicy> pursuers;
  switch (*kind) {
    case pursuit::PursuerKind::Outerplanar:
      pursuers = std::make_unique<pursuit::OuterplanarLazyPolicy>(g, false);
      break;
    case pursuit::PursuerKind::OuterplanarUniversal:
      pursuers = std::make_unique<pursuit::OuterplanarLazyPolicy>(g, true);
      break;
    case pursuit::PursuerKind::CutDecomposition:
      pursuers = std::make_unique<pursuit::CutDecompositionPolicy>(g, decomposition_for(g, a.decomp));
      break;
    case pursuit::PursuerKind::CliqueCover:
      pursuers = std::make_unique<pursuit::CliqueCoverPolicy>(g, decomposition_for(g, a.decomp));
      break;
    case pursuit::PursuerKind::Optimal:
      pursuers = std::make_unique<pursuit::OptimalPursuerPolicy>(solved());
      break;
  }

  std::optional<pursuit::GkInstance> instance;
  std::unique_ptr<pursuit::EvaderPolicy> evader;
  if (a.evader == "script-evasion") {
    instance.emplace(instance_from_sidecar(g, a.meta));
    evader = std::make_unique<pursuit::ScriptedEvasionPolicy>(*instance, a.component);
  } else {
    evader = std::make_unique<pursuit::OptimalEvaderPolicy>(solved());
  }

  pursuit::MatchOptions options;
  options.round_limit = a.rounds;
  if (!a.placements.empty()) {
    options.placement = pursuit::PlacementMode::Adversarial;
    options.placements = parse_vertex_list(a.placements);
    if (static_cast<int>(options.placements.size()) != a.k) usage_error("--placements needs exactly --k vertices");
    for (Vertex v : options.placements)
      if (v < 0 || v >= g.order()) usage_error("placement " + std::to_string(v) + " is not a vertex");
  }
  const pursuit::Trace trace = pursuit::play_match(g, dist, variant, a.k, *pursuers, *evader, options);
  emit(pursuit::io::trace_to_jsonl(trace), a.out);

  Json summary{{"outcome", outcome_name(trace.outcome)}, {"rounds", a.rounds}};
  summary["capture_round"] = trace.capture_round >= 0 ? Json(trace.capture_round) : Json(nullptr);
  summary["repeat_round"] = trace.repeat_round ? Json(*trace.repeat_round) : Json(nullptr);
  summary["repeat_of_round"] = trace.repeat_of_round ? Json(*trace.repeat_of_round) : Json(nullptr);
  if (a.json) {
    std::cerr << summary.dump() << '\n';
  } else {
    std::cerr << outcome_name(trace.outcome);
    if (trace.outcome == pursuit::Outcome::Capture) std::cerr << " round " << trace.capture_round;
    if (trace.repeat_round) std::cerr << " repeat at round " << *trace.repeat_round << " of " << *trace.repeat_of_round;
    std::cerr << '\n';
  }
  return trace.outcome == pursuit::Outcome::Capture ? kOk : kRoundLimit;
}

// ---------------------------------------------------------------- decomp

struct DecompArgs {
  std::string graph;
  std::string what;
  std::string decomp;
  bool json = false;
};

Json load_report(const Graph& g, const pursuit::CutDecomposition& d) {
  const auto check = pursuit::validate_cut_decomposition(g, d);
  if (!check) throw Error(ErrorCode::InvalidDecomposition, check.violation);
  const int delta = pursuit::diameter(g);
  const int height = d.height();
  const pursuit::BigInt time = pursuit::time_bound(g, d);
  const pursuit::BigInt time_star = pursuit::time_star(g, d);
  int theta = 0;
  for (const auto& node : d.nodes) theta = std::max(theta, pursuit::clique_cover_number(g, node.container));
  const pursuit::BigInt time_limit = power(pursuit::BigInt(d.cdw()) * (delta - 1) + 1, height + 1);
  const pursuit::BigInt time_star_limit = power(pursuit::BigInt(theta) * (delta + 1), height + 1);
  const int load = pursuit::load(g, d);
  const int load_star = pursuit::load_star(g, d);
  return Json{{"load", load},
              {"load_star", load_star},
              {"time", to_decimal(time)},
              {"time_star", to_decimal(time_star)},
              {"diameter", delta},
              {"height", height},
              {"cdw", d.cdw()},
              {"theta", theta},
              {"time_limit", to_decimal(time_limit)},
              {"time_star_limit", to_decimal(time_star_limit)},
              {"time_within_limit", time <= time_limit},
              {"time_star_within_limit", time_star <= time_star_limit},
              {"load_star_at_most_load", load_star <= load}};
}

int run_decomp(const DecompArgs& a) {
  const Graph g = pursuit::io::read_graph_file(a.graph);
  Json report;
  bool pass = true;
  if (a.what == "treedepth") {
    const auto td = pursuit::treedepth(g);
    report = Json{{"treedepth", td.value},
                  {"tree", pursuit::io::treedepth_tree_to_json(td.tree)},
                  {"decomposition", pursuit::io::decomposition_to_json(pursuit::td_tree_to_cut_decomposition(td.tree))}};
  } else if (a.what == "treewidth") {
    report = Json{{"treewidth", pursuit::treewidth_exact(g)}};
  } else if (a.what == "load") {
    report = load_report(g, decomposition_for(g, a.decomp));
    pass = report["time_within_limit"].get<bool>() && report["time_star_within_limit"].get<bool>() &&
           report["load_star_at_most_load"].get<bool>();
  } else if (a.what == "lemma2") {
    const auto chain = pursuit::check_separator_chain(g);
    report = pursuit::io::separator_chain_to_json(chain);
    pass = chain.holds();
  } else {
    usage_error("unknown decomp report '" + a.what + "'");
  }
  if (a.json || a.what != "treedepth") {
    std::cout << pretty(report);
  } else {
    std::cout << report["treedepth"].get<int>() << '\n' << pretty(report["tree"]);
  }
  return pass ? kOk : kFail;
}

// ---------------------------------------------------------------- visgraph

struct VisArgs {
  std::string polygon;
  std::string format = "json";
  std::string out;
};

int run_visgraph(const VisArgs& a) {
  const auto polygon = pursuit::io::polygon_from_json(pursuit::io::read_json_file(a.polygon));
  const Graph g = pursuit::geometry::visibility_graph(polygon);
  emit(a.format == "edges" ? pursuit::io::graph_to_edge_list(g) : pretty(pursuit::io::graph_to_json(g)), a.out);
  return kOk;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  std::uint64_t seed = 1;
  bool json = false;
  bool timing = true;
};

int run_verify(const VerifyArgs& a) {
  const auto ids = pursuit::verify::select(a.suite);
  if (ids.empty()) usage_error("unknown suite '" + a.suite + "'");
  const auto report = pursuit::verify::run(ids, a.seed, pursuit::verify::builtin_oracles());
  if (a.json) {
    std::cout << pretty(pursuit::verify::report_to_json(report, a.timing));
  } else {
    std::cout << pursuit::verify::report_to_text(report);
  }
  return report.passed() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pursuit-evasion games on graphs: zombies, lazy zombies and cops"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "pursuit 1.0.0");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph (Graph JSON plus a sidecar of distinguished vertices)");
  gen_cmd->add_option("kind", gen.kind, "gk-star, gk-clique, gk-tree, path, cycle, clique, fan, rand-outerplanar, rand-connected")
      ->required()
      ->check(CLI::IsMember({"gk-star", "gk-clique", "gk-tree", "path", "cycle", "clique", "fan", "rand-outerplanar",
                             "rand-connected"}));
  gen_cmd->add_option("--n", gen.n, "Vertex count for the standard families");
  gen_cmd->add_option("--k", gen.k, "Component count for the gk families")->capture_default_str();
  gen_cmd->add_option("--a-star", gen.a_star, "Path length parameter a* of the gadget (gk-star, gk-clique)");
  gen_cmd->add_option("--seed", gen.seed, "Seed for the random families")->capture_default_str();
  gen_cmd->add_option("--edge-prob", gen.edge_probability, "Extra edge probability (rand-connected)")->capture_default_str();
  gen_cmd->add_option("--chord-prob", gen.chord_probability, "Chord keep probability (rand-outerplanar)")
      ->capture_default_str();
  gen_cmd->add_option("--format", gen.format, "json or edges")->check(CLI::IsMember({"json", "edges"}))->capture_default_str();
  gen_cmd->add_option("-o,--out", gen.out, "Graph output file (default stdout)");
  gen_cmd->add_option("--meta", gen.meta, "Sidecar output file (default <out>.meta.json when --out is given)");
  gen_cmd->add_flag("--json", "Accepted for uniformity; output is JSON already");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Exact game number by retrograde analysis");
  solve_cmd->add_option("graph", solve.graph, "Graph file (JSON or edge list)")->required();
  solve_cmd->add_option("--variant", solve.variant, "cops, zombies or lazy")->capture_default_str();
  solve_cmd->add_option("--mode", solve.mode, "chosen or adversarial")->capture_default_str();
  solve_cmd->add_option("--k-max", solve.k_max, "Largest pursuer count tried")->capture_default_str();
  solve_cmd->add_flag("--json", solve.json, "Print the full result as JSON");

  PlayArgs play;
  auto* play_cmd = app.add_subcommand("play", "Play one match and write its trace as JSON lines");
  play_cmd->add_option("graph", play.graph, "Graph file (JSON or edge list)")->required();
  play_cmd->add_option("--variant", play.variant, "cops, zombies or lazy")->capture_default_str();
  play_cmd->add_option("--k", play.k, "Number of pursuers")->capture_default_str();
  play_cmd->add_option("--pursuer", play.pursuer, "thm6, cor1, thm7, thm9 or optimal")->capture_default_str();
  play_cmd->add_option("--evader", play.evader, "optimal or script-evasion")->capture_default_str();
  play_cmd->add_option("--placements", play.placements, "Comma-separated pursuer start vertices (adversarial start)");
  play_cmd->add_option("--rounds", play.rounds, "Round limit")->capture_default_str();
  play_cmd->add_option("--decomp", play.decomp, "Cut decomposition file for thm7/thm9 (default: optimal treedepth)");
  play_cmd->add_option("--meta", play.meta, "Generator sidecar, required by script-evasion");
  play_cmd->add_option("--component", play.component, "Component the scripted survivor hides in (default: first free)");
  play_cmd->add_option("-o,--out", play.out, "Trace output file (default stdout)");
  play_cmd->add_flag("--json", play.json, "Print the outcome summary to stderr as JSON");

  DecompArgs decomp;
  auto* decomp_cmd = app.add_subcommand("decomp", "Treedepth, treewidth, load reports and the separator chain");
  decomp_cmd->add_option("graph", decomp.graph, "Graph file (JSON or edge list)")->required();
  decomp_cmd->add_option("what", decomp.what, "treedepth, treewidth, load or lemma2")
      ->required()
      ->check(CLI::IsMember({"treedepth", "treewidth", "load", "lemma2"}));
  decomp_cmd->add_option("--decomp", decomp.decomp, "Cut decomposition file for load (default: optimal treedepth)");
  decomp_cmd->add_flag("--json", decomp.json, "Print JSON for every report");

  VisArgs vis;
  auto* vis_cmd = app.add_subcommand("visgraph", "Visibility graph of a simple polygon");
  vis_cmd->add_option("polygon", vis.polygon, "Polygon JSON file")->required();
  vis_cmd->add_option("--format", vis.format, "json or edges")->check(CLI::IsMember({"json", "edges"}))->capture_default_str();
  vis_cmd->add_option("-o,--out", vis.out, "Graph output file (default stdout)");
  vis_cmd->add_flag("--json", "Accepted for uniformity; output is JSON already");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the built-in claim checks");
  verify_cmd->add_option("--suite", verify.suite, "all, a suite or claim name, a claim number, or an alias")
      ->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for the random instances")->capture_default_str();
  verify_cmd->add_flag("--json", verify.json, "Print the report as JSON");
  verify_cmd->add_flag("--timing,!--no-timing", verify.timing, "Include runtimes in the JSON report (default on)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen_cmd->parsed()) return run_gen(gen);
    if (solve_cmd->parsed()) return run_solve(solve);
    if (play_cmd->parsed()) return run_play(play);
    if (decomp_cmd->parsed()) return run_decomp(decomp);
    if (vis_cmd->parsed()) return run_visgraph(vis);
    if (verify_cmd->parsed()) return run_verify(verify);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
