#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "pursuit/graph.hpp"

namespace testing {

inline pursuit::Graph make(int n, std::initializer_list<std::pair<int, int>> edges) {
  const std::vector<std::pair<int, int>> list(edges);
  return pursuit::Graph(n, list);
}

inline pursuit::Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return pursuit::Graph(n, e);
}

inline pursuit::Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return pursuit::Graph(n, e);
}

inline pursuit::Graph clique(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return pursuit::Graph(n, e);
}

/// Path 0..n-2 plus apex n-1 adjacent to every path vertex.
inline pursuit::Graph fan(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 2 < n; ++i) e.emplace_back(i, i + 1);
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, n - 1);
  return pursuit::Graph(n, e);
}

/// Triangles {0,1,2} and {2,3,4} sharing vertex 2.
inline pursuit::Graph bowtie_graph() { return make(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}}); }

}  // namespace testing
