#pragma once

#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace resdim {

// Distance value for vertex pairs joined by no (directed) path. Compares
// strictly greater than every finite distance, so min(kUnreachable, k+1)
// is always k+1.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Finite simple graph over dense vertex indices 0..n-1. For undirected
// graphs each edge is stored in both adjacency lists and reported once as
// (min, max). Immutable for practical purposes once built: generators add
// edges during construction, everything downstream only reads.
class Graph {
 public:
  Graph(int n, bool directed);

  // Throws std::invalid_argument on self-loops, out-of-range endpoints or
  // duplicate edges.
  void add_edge(int u, int v);

  int order() const { return n_; }
  bool is_directed() const { return directed_; }
  int edge_count() const { return edge_count_; }
  bool has_edge(int u, int v) const;

  std::span<const int> out_neighbors(int v) const { return adj_[v]; }

  // Undirected degree, or out-degree for directed graphs.
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  // Canonical edge list, sorted; undirected edges appear once with u < v.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int n_ = 0;
  bool directed_ = false;
  int edge_count_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Column-major labeling of an n x m grid: vertex 0 is the top-left corner,
// indices walk down each column before moving right one column.
struct GridCoords {
  int rows = 0;
  int cols = 0;

  int index(int row, int col) const { return col * rows + row; }
  std::pair<int, int> coords(int v) const { return {v % rows, v / rows}; }
  int vertex_count() const { return rows * cols; }
};

class DistanceMatrix {
 public:
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kUnreachable) {}

  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
  void set(int u, int v, int dist) { d_[static_cast<size_t>(u) * n_ + v] = dist; }

 private:
  int n_;
  std::vector<int> d_;
};

// Distances from src along edge direction (plain BFS row).
std::vector<int> distances_from(const Graph& g, int src);

DistanceMatrix all_pairs_distances(const Graph& g);

// min(d, k+1) with the unreachable sentinel treated as +infinity.
int truncated(int dist, int k);
int truncated_distance(const DistanceMatrix& dm, int u, int v, int k);

// Cartesian product: (u,u') ~ (v,v') iff u=v and u'~v', or u'=v' and u~v.
// Vertex (u, u') gets index u' * g1.order() + u, so P_rows x P_cols lines
// up with GridCoords. Rejects directed inputs.
Graph cartesian_product(const Graph& g1, const Graph& g2);

int max_degree(const Graph& g);

}  // namespace resdim
