#include "resdim/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace resdim {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed), adj_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be nonnegative");
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || u >= n_ || v < 0 || v >= n_)
    throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  if (has_edge(u, v)) throw std::invalid_argument("duplicate edge");

  auto insert_sorted = [](std::vector<int>& list, int x) {
    list.insert(std::upper_bound(list.begin(), list.end(), x), x);
  };
  insert_sorted(adj_[u], v);
  if (!directed_) insert_sorted(adj_[v], u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (directed_ || u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> distances_from(const Graph& g, int src) {
  std::vector<int> dist(g.order(), kUnreachable);
  dist[src] = 0;
  std::queue<int> q;
  q.push(src);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.out_neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix dm(g.order());
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> row = distances_from(g, s);
    for (int v = 0; v < g.order(); ++v) dm.set(s, v, row[v]);
  }
  return dm;
}

int truncated(int dist, int k) {
  if (dist == kUnreachable) return k + 1;
  return std::min(dist, k + 1);
}

int truncated_distance(const DistanceMatrix& dm, int u, int v, int k) {
  return truncated(dm.at(u, v), k);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  if (g1.is_directed() || g2.is_directed())
    throw std::invalid_argument("cartesian_product requires undirected factors");
  const int n1 = g1.order();
  const int n2 = g2.order();
  Graph p(n1 * n2, false);
  auto id = [n1](int u, int u2) { return u2 * n1 + u; };
  for (int u2 = 0; u2 < n2; ++u2)
    for (int u = 0; u < n1; ++u) {
      for (int v : g1.out_neighbors(u))
        if (u < v) p.add_edge(id(u, u2), id(v, u2));
      for (int v2 : g2.out_neighbors(u2))
        if (u2 < v2) p.add_edge(id(u, u2), id(u, v2));
    }
  return p;
}

int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

}  // namespace resdim
