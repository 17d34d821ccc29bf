#include "resdim/bounds.hpp"

#include <stdexcept>

namespace resdim {

int maxdeg_lower(int n, int delta) {
  if (n < 1 || delta < 0) throw std::invalid_argument("maxdeg_lower needs n >= 1, delta >= 0");
  // exact integer ceiling; the bound is an off-by-one story
  return (2 * (n - 1) + delta + 2) / (delta + 3);
}

BoundReport grid2_bounds(int n) {
  if (n < 2) throw std::invalid_argument("grid2_bounds needs n >= 2");
  const int upper = (3 * n - 1 + 3) / 4;
  return {"adim(P2 x P" + std::to_string(n) + ")", upper - 1, upper, std::nullopt,
          {"2-row grid bound"}};
}

BoundReport grid3_bounds(int n) {
  if (n < 2) throw std::invalid_argument("grid3_bounds needs n >= 2");
  const int shift = n % 3 == 1 ? 1 : 0;
  return {"adim(P3 x P" + std::to_string(n) + ")", n - 1 + shift, n + shift, std::nullopt,
          {"3-row grid bound"}};
}

SandwichReport check_sandwich(const Graph& g, const SolveOptions& opts) {
  SandwichReport r;
  r.ld = solve_locating_dominating(g, opts).value;
  r.adim = solve_adjacency_dimension(g, opts).value;
  r.bdim = solve_broadcast_dimension(g, opts).value;
  if (!(r.ld - 1 <= r.adim && r.adim <= r.ld))
    throw std::logic_error("sandwich violation: LD-1 <= adim <= LD failed");
  if (!(r.bdim <= r.adim && r.adim <= g.order()))
    throw std::logic_error("sandwich violation: bdim <= adim <= n failed");
  return r;
}

}  // namespace resdim
