#include "pursuit/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pursuit/error.hpp"

namespace pursuit::io {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) parse_error(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) parse_error(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) parse_error(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<Vertex> as_vertices(const Json& j, const char* what) {
  if (!j.is_array()) parse_error(std::string(what) + " must be an array");
  std::vector<Vertex> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(as_int(v, what));
  return out;
}

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string_view center_name(CenterKind c) {
  switch (c) {
    case CenterKind::Star: return "star";
    case CenterKind::Clique: return "clique";
    case CenterKind::Tree: return "tree";
  }
  return "?";
}

}  // namespace

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json j{{"n", g.order()}, {"edges", std::move(edges)}};
  if (!g.labels().empty()) {
    Json labels = Json::object();
    for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
    j["labels"] = std::move(labels);
  }
  return j;
}

Graph graph_from_json(const Json& j) {
  const int n = as_int(field(j, "n"), "n");
  if (n < 0) parse_error("n must be non-negative");
  EdgeList edges;
  const Json& list = field(j, "edges");
  if (!list.is_array()) parse_error("edges must be an array");
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair [u, v]");
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  std::map<Vertex, std::string> labels;
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_object()) parse_error("labels must be an object");
    for (const auto& [key, value] : it->items()) {
      Vertex v = 0;
      try {
        std::size_t used = 0;
        v = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        parse_error("label key '" + key + "' is not a vertex id");
      }
      if (!value.is_string()) parse_error("label values must be strings");
      labels[v] = value.get<std::string>();
    }
  }
  return Graph(n, edges, std::move(labels));
}

Graph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      parse_error(std::string("graph JSON: ") + e.what());
    }
    return graph_from_json(j);
  }
  std::istringstream in{std::string(text)};
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) parse_error("edge list must start with 'n m'");
  EdgeList edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) parse_error("edge list ended after " + std::to_string(i) + " of " + std::to_string(m) + " edges");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string rest;
  if (in >> rest) parse_error("unexpected trailing token '" + rest + "' in edge list");
  return Graph(static_cast<int>(n), edges);
}

std::string graph_to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Json polygon_to_json(const geometry::Polygon& p) {
  Json vertices = Json::array();
  for (const auto& pt : p.vertices) {
    vertices.push_back({geometry::format_rational(pt.x), geometry::format_rational(pt.y)});
  }
  return Json{{"vertices", std::move(vertices)}};
}

geometry::Polygon polygon_from_json(const Json& j) {
  const Json& list = field(j, "vertices");
  if (!list.is_array()) parse_error("vertices must be an array");
  geometry::Polygon p;
  auto coordinate = [](const Json& c) {
    if (c.is_number_integer()) return geometry::Rational(c.get<long long>());
    if (c.is_string()) return geometry::parse_rational(c.get<std::string>());
    parse_error("coordinates must be integers or \"num/den\" strings");
  };
  for (const auto& v : list) {
    if (!v.is_array() || v.size() != 2) parse_error("each vertex must be a pair [x, y]");
    p.vertices.push_back({coordinate(v[0]), coordinate(v[1])});
  }
  return p;
}

Json decomposition_to_json(const CutDecomposition& d) {
  Json nodes = Json::array();
  for (int i = 0; i < d.size(); ++i) {
    const auto& node = d.nodes[static_cast<std::size_t>(i)];
    nodes.push_back({{"id", i}, {"parent", node.parent}, {"container", sorted(node.container)}});
  }
  return Json{{"nodes", std::move(nodes)}};
}

CutDecomposition decomposition_from_json(const Json& j) {
  const Json& list = field(j, "nodes");
  if (!list.is_array()) parse_error("nodes must be an array");
  CutDecomposition d;
  d.nodes.resize(list.size());
  std::vector<bool> seen(list.size(), false);
  for (const auto& node : list) {
    const int id = as_int(field(node, "id"), "node id");
    if (id < 0 || id >= static_cast<int>(list.size())) parse_error("node id " + std::to_string(id) + " out of range");
    if (seen[static_cast<std::size_t>(id)]) parse_error("node id " + std::to_string(id) + " repeated");
    seen[static_cast<std::size_t>(id)] = true;
    const Json& parent = field(node, "parent");
    d.nodes[static_cast<std::size_t>(id)].parent = parent.is_null() ? -1 : as_int(parent, "parent");
    d.nodes[static_cast<std::size_t>(id)].container = as_vertices(field(node, "container"), "container");
  }
  return d;
}

Json treedepth_tree_to_json(const TreedepthTree& t) { return Json{{"parent", t.parent}, {"root", t.root}}; }

TreedepthTree treedepth_tree_from_json(const Json& j) {
  TreedepthTree t;
  t.parent = as_vertices(field(j, "parent"), "parent");
  t.root = as_int(field(j, "root"), "root");
  return t;
}

std::string trace_to_jsonl(const Trace& t) {
  std::string out = Json{{"variant", to_string(t.variant)},
                         {"k", t.k},
                         {"n", t.n},
                         {"placements", t.placements}}
                        .dump();
  out += '\n';
  for (const auto& r : t.records) {
    Json rec{{"round", r.round},
             {"mover", r.mover == Turn::Pursuers ? "P" : "E"},
             {"positions", r.positions},
             {"evader", r.evader},
             {"captured", r.captured}};
    out += rec.dump();
    out += '\n';
  }
  return out;
}

Trace trace_from_jsonl(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Trace t;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      parse_error(std::string("trace line: ") + e.what());
    }
    if (header) {
      const Json& variant = field(j, "variant");
      if (!variant.is_string()) parse_error("variant must be a string");
      try {
        t.variant = parse_variant(variant.get<std::string>());
      } catch (const Error& e) {
        parse_error(e.what());
      }
      t.k = as_int(field(j, "k"), "k");
      t.n = as_int(field(j, "n"), "n");
      t.placements = as_vertices(field(j, "placements"), "placements");
      header = false;
      continue;
    }
    TraceRecord r;
    r.round = as_int(field(j, "round"), "round");
    const Json& mover = field(j, "mover");
    if (mover != "P" && mover != "E") parse_error("mover must be \"P\" or \"E\"");
    r.mover = mover == "P" ? Turn::Pursuers : Turn::Evader;
    r.positions = as_vertices(field(j, "positions"), "positions");
    r.evader = as_int(field(j, "evader"), "evader");
    const Json& captured = field(j, "captured");
    if (!captured.is_boolean()) parse_error("captured must be a boolean");
    r.captured = captured.get<bool>();
    t.records.push_back(std::move(r));
  }
  if (header) parse_error("trace has no header line");
  if (!t.records.empty() && t.records.back().captured) {
    t.outcome = Outcome::Capture;
    t.capture_round = t.records.back().round;
  }
  return t;
}

Json gk_sidecar(const GkInstance& inst) {
  Json components = Json::array();
  for (std::size_t i = 0; i < inst.components.size(); ++i) {
    const auto& c = inst.components[i];
    Json comp{{"index", i}, {"s", c.s}, {"t", c.t}, {"vertices", sorted(c.vertices)}};
    comp["entry"] = c.entry >= 0 ? Json(c.entry) : Json(nullptr);
    components.push_back(std::move(comp));
  }
  Json j{{"family", std::string("gk-") + std::string(center_name(inst.center))},
         {"k", inst.k},
         {"a_star", inst.a_star},
         {"n", inst.graph.order()},
         {"components", std::move(components)},
         {"near_attachment", inst.h.near_attachment},
         {"far_attachment", inst.h.far_attachment}};
  j["c"] = inst.c ? Json(*inst.c) : Json(nullptr);
  if (!inst.tree_vertices.empty()) {
    j["tree_vertices"] = inst.tree_vertices;
    Json leaves = Json::array();
    for (const auto& c : inst.components) leaves.push_back(c.entry);
    j["leaves"] = std::move(leaves);
  }
  return j;
}

Json game_number_to_json(const GameNumberResult& r) {
  Json j{{"variant", to_string(r.variant)},
         {"mode", to_string(r.mode)},
         {"k_max", r.k_max},
         {"witness", r.witness}};
  if (r.value) {
    j["value"] = *r.value;
    j["result"] = std::to_string(*r.value);
  } else {
    j["value"] = nullptr;
    j["result"] = "NONE_UP_TO(" + std::to_string(r.k_max) + ")";
  }
  j["counter_evader"] = r.counter_evader ? Json(*r.counter_evader) : Json(nullptr);
  return j;
}

Json separator_chain_to_json(const SeparatorChainReport& r) {
  return Json{{"n", r.n},
              {"separation_number", r.separation_number},
              {"treedepth", r.treedepth},
              {"separator_sum", r.separator_sum},
              {"treewidth", r.treewidth},
              {"treewidth_bound", r.treewidth_bound},
              {"profile", r.profile},
              {"first_holds", r.first_holds},
              {"second_holds", r.second_holds},
              {"third_holds", r.third_holds},
              {"status", r.holds() ? "PASS" : "FAIL"}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Json read_json_file(const std::filesystem::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    parse_error(path.string() + ": " + e.what());
  }
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) parse_error("cannot write '" + path.string() + "'");
  out << content;
}

}  // namespace pursuit::io
