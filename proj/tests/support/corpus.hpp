#pragma once

// Fixed random-graph corpus shared by the unit and acceptance suites.
// Everything is seeded, so expected values frozen in tests stay valid.

#include <vector>

#include "resdim/graph.hpp"
#include "resdim/random_trees.hpp"

namespace corpus {

inline resdim::Graph random_graph(resdim::SplitMix64& rng, int min_n, int max_n) {
  const int n = min_n + static_cast<int>(rng.below(max_n - min_n + 1));
  const int pct = 15 + static_cast<int>(rng.below(71));
  resdim::Graph g(n, false);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (static_cast<int>(rng.below(100)) < pct) g.add_edge(u, v);
  return g;
}

// 200 undirected graphs on 2..10 vertices, seed 0.
inline std::vector<resdim::Graph> graphs200() {
  resdim::SplitMix64 rng(0);
  std::vector<resdim::Graph> out;
  out.reserve(200);
  for (int i = 0; i < 200; ++i) out.push_back(random_graph(rng, 2, 10));
  return out;
}

// 100 out-directed trees on at most 12 vertices, seed 0.
inline std::vector<resdim::Graph> trees100() {
  resdim::SplitMix64 rng(0);
  std::vector<resdim::Graph> out;
  out.reserve(100);
  for (int i = 0; i < 100; ++i) out.push_back(resdim::random_out_tree(rng, 12));
  return out;
}

}  // namespace corpus
