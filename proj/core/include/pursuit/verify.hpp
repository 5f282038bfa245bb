#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/geometry.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/io.hpp"

namespace pursuit::verify {

enum class Status { Pass, Fail, Skipped };
std::string_view to_string(Status s);

struct ClaimResult {
  int id = 0;
  std::string name;   // stable identifier, e.g. "star-lower-bound"
  std::string suite;  // group selected by --suite
  std::string claim;  // one-line statement of what is checked
  Status status = Status::Skipped;
  io::Json measured = io::Json::object();
  std::string detail;  // first counterexample on FAIL
  double seconds = 0;
};

struct VerifyReport {
  std::uint64_t seed = 1;
  std::vector<ClaimResult> claims;
  bool passed() const;  // no FAIL; skipped claims do not count against it
};

/// Independent reference computations the suite compares the library against.
/// Unset members fall back to the built-in references.
struct Oracles {
  std::function<int(const Graph&)> treedepth;
  std::function<int(const Graph&)> treewidth;
  std::function<Graph(const geometry::Polygon&)> visibility;
  /// Least number of turns within which the pursuers force capture from
  /// `state`, searching at most `depth` turns; empty if they cannot.
  std::function<std::optional<int>(const Graph&, Variant, const GameState&, int depth)> capture_within;
};

Oracles builtin_oracles();

struct ClaimInfo {
  int id;
  std::string_view name;
  std::string_view suite;
  std::string_view claim;
};

const std::vector<ClaimInfo>& claims();

/// Maps a --suite argument (suite name, claim name, claim number, or one of
/// the CLI aliases) to claim ids. Empty result: unknown selector.
std::vector<int> select(std::string_view selector);

ClaimResult run_claim(int id, std::uint64_t seed, const Oracles& oracles);
VerifyReport run(const std::vector<int>& ids, std::uint64_t seed, const Oracles& oracles);

/// Sorted-key JSON; `with_timing` false drops the runtimes for byte-stable output.
io::Json report_to_json(const VerifyReport& r, bool with_timing = true);
/// One "PASS|FAIL|SKIPPED <id> <name> ..." line per claim.
std::string report_to_text(const VerifyReport& r);

/// Star-shaped simple polygon with integer coordinates around the origin.
geometry::Polygon random_star_polygon(int n, std::uint64_t seed);
/// Regular-ish convex polygon with rational vertices on a circle of integer points.
geometry::Polygon convex_polygon(int n);

}  // namespace pursuit::verify
