#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resdim/graph.hpp"
#include "resdim/solver.hpp"

namespace resdim {

struct BoundReport {
  std::string parameter;
  int lower = 0;
  int upper = 0;
  std::optional<int> exact;
  std::vector<std::string> sources;
};

// ceil(2(n-1) / (delta+3)), the max-degree lower bound on adim.
int maxdeg_lower(int n, int delta);

// [ceil((3n-1)/4) - 1, ceil((3n-1)/4)] for adim(P_2 x P_n). n >= 2.
BoundReport grid2_bounds(int n);

// [n-1, n], shifted up by one when n = 1 mod 3, for adim(P_3 x P_n). n >= 2.
BoundReport grid3_bounds(int n);

struct SandwichReport {
  int ld = 0;
  int adim = 0;
  int bdim = 0;
};

// Solves LD, adim and bdim exactly and checks LD-1 <= adim <= LD and
// bdim <= adim <= n. A violation means a solver bug and throws
// std::logic_error.
SandwichReport check_sandwich(const Graph& g, const SolveOptions& opts = {});

}  // namespace resdim
