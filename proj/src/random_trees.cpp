#include "resdim/random_trees.hpp"

#include <stdexcept>

namespace resdim {

Graph random_out_tree(SplitMix64& rng, int max_vertices) {
  if (max_vertices < 2) throw std::invalid_argument("random_out_tree needs max_vertices >= 2");
  const int n = 2 + static_cast<int>(rng.below(max_vertices - 1));
  Graph g(n, true);
  for (int v = 1; v < n; ++v) g.add_edge(static_cast<int>(rng.below(v)), v);
  return g;
}

}  // namespace resdim
