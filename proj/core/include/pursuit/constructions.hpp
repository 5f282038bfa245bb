#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// The lower-bound gadget: an s-t path of length a*+1 and an (a*+3)-cycle
/// sharing exactly the ceil(a*/4)-th path edge counted from t. Path vertices
/// are numbered 0 (= s) .. a*+1 (= t), the remaining cycle vertices follow.
struct ComponentH {
  Graph graph;
  int a_star = 0;
  Vertex s = 0;
  Vertex t = 0;
  std::vector<Vertex> path;   // s .. t
  std::vector<Vertex> cycle;  // cyclic order, starts at the attachment nearer s
  Vertex near_attachment = 0;  // shared-edge endpoint nearer s
  Vertex far_attachment = 0;   // shared-edge endpoint nearer t
};

/// Throws BadParameter unless a_star >= 6 and a_star = 2 (mod 4).
ComponentH component_h(int a_star);

enum class CenterKind { Star, Clique, Tree };

struct GkComponent {
  Vertex s = 0;
  Vertex t = 0;
  Vertex entry = -1;  // leaf l_i for TREE, the centre c for STAR, -1 for CLIQUE
  std::vector<Vertex> vertices;  // V(H_i) in the global numbering, H-local order
};

struct GkInstance {
  Graph graph;
  int k = 0;
  int a_star = 0;
  CenterKind center = CenterKind::Star;
  std::optional<Vertex> c;            // STAR only
  std::vector<Vertex> tree_vertices;  // TREE only, heap order (root first)
  std::vector<GkComponent> components;
  ComponentH h;                       // template copy used for every component

  /// Component index containing v, or -1 for centre/tree vertices.
  int component_of(Vertex v) const;
  /// Global id of vertex `local` (H numbering) inside component i.
  Vertex global(int i, Vertex local) const { return components.at(static_cast<std::size_t>(i)).vertices.at(static_cast<std::size_t>(local)); }
};

GkInstance gk_star(int k, int a_star = 10);
GkInstance gk_clique(int k, int a_star = 6);
/// Binary tree with k leaves and 2k-1 nodes in heap order; a* = 8*ceil(log2 k) + 10.
GkInstance gk_tree(int k);
int gk_tree_a_star(int k);
int ceil_log2(int k);

enum class StandardKind { Path, Cycle, Clique, Fan, RandomOuterplanar, RandomConnected };

StandardKind parse_standard_kind(std::string_view text);

struct StandardOptions {
  std::uint64_t seed = 1;
  double extra_edge_probability = 0.3;  // RANDOM_CONNECTED
  double chord_keep_probability = 0.5;  // RANDOM_OUTERPLANAR
};

/// PATH/CLIQUE need n >= 1, CYCLE/FAN n >= 3. FAN is the path 0..n-2 plus an
/// apex n-1 adjacent to all of it.
Graph standard_graph(StandardKind kind, int n, const StandardOptions& options = {});

/// Scripted survivor: starts next to s_i inside H_i, walks the s-t path to the
/// first cycle attachment, then circles the cycle starting toward its
/// degree-2 neighbour forever.
class ScriptedEvasionPolicy : public EvaderPolicy {
 public:
  /// component < 0 selects the lowest-index component free of pursuers at placement.
  ScriptedEvasionPolicy(const GkInstance& inst, int component = -1);

  std::string name() const override { return "script-evasion"; }
  Vertex place(const MatchContext& ctx, std::span<const Vertex> pursuers) override;
  Vertex move(const MatchContext& ctx, const GameState& state) override;
  std::uint64_t memory_key() const override { return static_cast<std::uint64_t>(step_ < route_prefix_ ? step_ : route_prefix_ + (step_ - route_prefix_) % cycle_len_); }

  int component() const { return chosen_; }

 private:
  const GkInstance& inst_;
  int requested_;
  int chosen_ = -1;
  std::vector<Vertex> route_;  // path prefix followed by one lap of the cycle
  int route_prefix_ = 0;
  int cycle_len_ = 1;
  int step_ = 0;
};

}  // namespace pursuit
