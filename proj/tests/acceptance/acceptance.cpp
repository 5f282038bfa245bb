// Runs criteria 1-13 against the brute-force references in tests/oracles and
// prints one PASS/FAIL line per criterion.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <tuple>

#include "oracles.hpp"
#include "pursuit/verify.hpp"

namespace {

pursuit::verify::Oracles test_oracles() {
  using Key = std::tuple<pursuit::EdgeList, int, pursuit::Variant>;
  auto games = std::make_shared<std::map<Key, std::unique_ptr<oracle::Minimax>>>();
  pursuit::verify::Oracles o;
  o.treedepth = [](const pursuit::Graph& g) { return oracle::treedepth(g); };
  o.treewidth = [](const pursuit::Graph& g) { return oracle::treewidth(g); };
  o.visibility = [](const pursuit::geometry::Polygon& p) { return oracle::visibility_graph(p); };
  o.capture_within = [games](const pursuit::Graph& g, pursuit::Variant v, const pursuit::GameState& s,
                             int depth) -> std::optional<int> {
    Key key{g.edges(), g.order(), v};
    auto it = games->find(key);
    if (it == games->end()) {
      if (games->size() >= 64) games->clear();
      it = games->emplace(std::move(key), std::make_unique<oracle::Minimax>(g, v)).first;
    }
    return it->second->capture_within(s, depth);
  };
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
  const auto oracles = test_oracles();
  bool all = true;
  for (const auto& info : pursuit::verify::claims()) {
    const auto r = pursuit::verify::run_claim(info.id, seed, oracles);
    const bool pass = r.status == pursuit::verify::Status::Pass;
    all = all && pass;
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << r.id << " " << r.name << " (" << r.seconds << "s) "
              << r.measured.dump();
    if (!r.detail.empty()) std::cout << " | " << r.detail;
    std::cout << std::endl;
  }
  return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
