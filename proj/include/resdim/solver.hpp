#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "resdim/certificates.hpp"
#include "resdim/graph.hpp"

namespace resdim {

enum class Parameter { kDim, kAdim, kLocatingDominating, kBdim };

const char* parameter_name(Parameter p);

// Subset search is exponential; instances above max_vertices are refused
// with SizeLimitError instead of hanging.
struct SolveOptions {
  int max_vertices = 26;
  // Broadcast search only: give up beyond this total cost and report
  // infeasible. Defaults to adim(g), which always admits a witness.
  std::optional<int> cost_cap;
};

struct SizeLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SolveResult {
  Parameter parameter = Parameter::kDim;
  bool feasible = true;
  int value = -1;
  // Indicator broadcast for the set-valued parameters; arbitrary weights
  // for bdim. Lexicographically smallest witness among optima, so repeated
  // solves return identical certificates.
  Broadcast witness;
  std::uint64_t nodes_explored = 0;

  std::vector<int> witness_set() const { return witness.support(); }
};

SolveResult solve_metric_dimension(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_adjacency_dimension(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_locating_dominating(const Graph& g, const SolveOptions& opts = {});
SolveResult solve_broadcast_dimension(const Graph& g, const SolveOptions& opts = {});

}  // namespace resdim
