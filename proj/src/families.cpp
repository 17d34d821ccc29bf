#include "resdim/families.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace resdim {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Digit j of the k-digit binary string for u_b, 1-indexed from the most
// significant end.
int digit(int b, int j, int k) { return (b >> (k - j)) & 1; }

}  // namespace

Graph make_path(int n) {
  require(n >= 1, "path needs at least one vertex");
  Graph g(n, false);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs at least three vertices");
  Graph g(n, false);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  g.add_edge(0, n - 1);
  return g;
}

Graph make_complete(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  Graph g(n, false);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Grid make_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid dimensions must be positive");
  return {cartesian_product(make_path(rows), make_path(cols)), GridCoords{rows, cols}};
}

Graph make_f_k(int k, bool oriented) {
  require(k >= 1, "f_k requires k >= 1");
  const int us = 1 << k;
  const int n = k + us;
  Graph g(n, oriented);
  auto u_id = [k](int b) { return k + b; };

  // v-side clique
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  // u-side clique; lexicographic order of the strings matches numeric
  // order with the most-significant-first digit convention
  for (int b = 0; b < us; ++b)
    for (int c = b + 1; c < us; ++c) g.add_edge(u_id(b), u_id(c));
  // cross edges, always toward the v side when oriented
  for (int b = 0; b < us; ++b)
    for (int j = 1; j <= k; ++j)
      if (digit(b, j, k)) g.add_edge(u_id(b), j - 1);
  return g;
}

Graph make_r_k(int k, bool oriented) {
  require(k >= 1, "r_k requires k >= 1");
  const int us = 1 << k;
  const int n = k + us;
  if (!oriented) return make_complete(n);

  Graph g(n, true);
  auto u_id = [k](int b) { return k + b; };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
  for (int b = 0; b < us; ++b)
    for (int c = b + 1; c < us; ++c) g.add_edge(u_id(b), u_id(c));
  for (int b = 0; b < us; ++b)
    for (int j = 1; j <= k; ++j) {
      if (digit(b, j, k))
        g.add_edge(u_id(b), j - 1);
      else
        g.add_edge(j - 1, u_id(b));
    }
  return g;
}

Graph make_kary_out_tree(int k, int layers) {
  require(k >= 1 && layers >= 1, "tree requires k >= 1 and layers >= 1");
  long long total = 0, layer_size = 1;
  for (int i = 0; i < layers; ++i) {
    total += layer_size;
    layer_size *= k;
  }
  require(total <= 1'000'000, "tree too large");

  Graph g(static_cast<int>(total), true);
  int next = 1;
  for (int v = 0; next < total; ++v)
    for (int c = 0; c < k && next < total; ++c) g.add_edge(v, next++);
  return g;
}

Graph make_maxdeg_tight(int m, int delta) {
  require(delta >= 2, "maxdeg_tight requires delta >= 2");
  require(delta <= m, "maxdeg_tight requires delta <= m");
  require((delta - 1) * m % 2 == 0, "maxdeg_tight requires (delta-1)*m even");

  const int d = delta - 1;
  // (delta-1)-regular circulant: offsets 1..d/2, plus m/2 when d is odd.
  std::vector<std::pair<int, int>> h_edges;
  for (int off = 1; off <= d / 2; ++off)
    for (int v = 0; v < m; ++v) h_edges.emplace_back(v, (v + off) % m);
  if (d % 2 == 1)
    for (int v = 0; v < m / 2; ++v) h_edges.emplace_back(v, v + m / 2);

  const int n = m + static_cast<int>(h_edges.size()) + m + 1;
  Graph g(n, false);
  int next = m;
  for (auto [u, v] : h_edges) {  // subdivide every H-edge
    g.add_edge(u, next);
    g.add_edge(v, next);
    ++next;
  }
  for (int v = 0; v < m; ++v) g.add_edge(v, next++);  // pendant per original
  // the final vertex stays isolated
  return g;
}

Graph make_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kPath: return make_path(spec.n);
    case Family::kCycle: return make_cycle(spec.n);
    case Family::kComplete: return make_complete(spec.n);
    case Family::kGrid: return make_grid(spec.n, spec.m).graph;
    case Family::kFK: return make_f_k(spec.k, false);
    case Family::kFKOriented: return make_f_k(spec.k, true);
    case Family::kRK: return make_r_k(spec.k, false);
    case Family::kRKOriented: return make_r_k(spec.k, true);
    case Family::kKaryTreeOut: return make_kary_out_tree(spec.k, spec.n);
    case Family::kMaxdegTight: return make_maxdeg_tight(spec.m, spec.delta);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace resdim
