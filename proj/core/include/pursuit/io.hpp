#pragma once

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <string_view>

#include "pursuit/constructions.hpp"
#include "pursuit/decomposition.hpp"
#include "pursuit/engine.hpp"
#include "pursuit/geometry.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/solver.hpp"

namespace pursuit::io {

using Json = nlohmann::json;  // std::map-backed, so keys serialise sorted

// All parsers throw ParseError on malformed input; structural checks
// (duplicate edges, invalid decompositions, ...) keep their own codes.

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);
/// Accepts Graph JSON or the edge-list text form ("n m" then one "u v" per line).
Graph parse_graph(std::string_view text);
std::string graph_to_edge_list(const Graph& g);

Json polygon_to_json(const geometry::Polygon& p);
geometry::Polygon polygon_from_json(const Json& j);

Json decomposition_to_json(const CutDecomposition& d);
CutDecomposition decomposition_from_json(const Json& j);

Json treedepth_tree_to_json(const TreedepthTree& t);
TreedepthTree treedepth_tree_from_json(const Json& j);

/// Header line, then one line per record.
std::string trace_to_jsonl(const Trace& t);
Trace trace_from_jsonl(std::string_view text);

/// Distinguished vertices of a generated family member.
Json gk_sidecar(const GkInstance& inst);

Json game_number_to_json(const GameNumberResult& r);
Json separator_chain_to_json(const SeparatorChainReport& r);

std::string read_file(const std::filesystem::path& path);
Json read_json_file(const std::filesystem::path& path);
Graph read_graph_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

}  // namespace pursuit::io
