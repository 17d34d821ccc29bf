#pragma once

// Brute-force reference implementations for the four parameters. These stay
// deliberately independent of the library's solver and verifiers: plain BFS
// with a -1 sentinel, validity straight from the definitions, and full
// enumeration of candidate certificates in (size, lex) / (cost, lex) order.

#include <algorithm>
#include <queue>
#include <vector>

#include "resdim/graph.hpp"

namespace naive {

inline std::vector<std::vector<int>> dist(const resdim::Graph& g) {
  const int n = g.order();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    d[s][s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.out_neighbors(u))
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

inline int trunc(int d, int k) { return d < 0 ? k + 1 : std::min(d, k + 1); }

inline bool broadcast_valid(const std::vector<std::vector<int>>& d, const std::vector<int>& w) {
  const int n = static_cast<int>(w.size());
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool ok = false;
      for (int z = 0; z < n && !ok; ++z)
        if (w[z] > 0) ok = trunc(d[z][x], w[z]) != trunc(d[z][y], w[z]);
      if (!ok) return false;
    }
  return true;
}

inline bool adjacency_valid(const std::vector<std::vector<int>>& d, const std::vector<bool>& in) {
  const int n = static_cast<int>(in.size());
  std::vector<int> w(n, 0);
  for (int v = 0; v < n; ++v) w[v] = in[v] ? 1 : 0;
  return broadcast_valid(d, w);
}

inline bool ld_valid(const std::vector<std::vector<int>>& d, const std::vector<bool>& in) {
  const int n = static_cast<int>(in.size());
  std::vector<std::vector<int>> isets;
  for (int v = 0; v < n; ++v) {
    if (in[v]) continue;
    std::vector<int> iset;
    for (int z = 0; z < n; ++z)
      if (in[z] && d[z][v] >= 0 && d[z][v] <= 1) iset.push_back(z);
    if (iset.empty()) return false;
    isets.push_back(iset);
  }
  std::sort(isets.begin(), isets.end());
  return std::adjacent_find(isets.begin(), isets.end()) == isets.end();
}

// Visits all k-subsets of 0..n-1 in lexicographic order.
template <typename Check>
inline bool any_subset(int n, int k, const Check& check) {
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  if (k > n) return false;
  for (;;) {
    if (check(pick)) return true;
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

inline std::vector<bool> as_flags(int n, const std::vector<int>& pick) {
  std::vector<bool> in(n, false);
  for (int v : pick) in[v] = true;
  return in;
}

inline int dim_value(const resdim::Graph& g) {
  const auto d = dist(g);
  const int n = g.order();
  for (int k = 0; k <= n; ++k) {
    bool found = any_subset(n, k, [&](const std::vector<int>& pick) {
      for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
          bool ok = false;
          for (int z : pick)
            if (d[z][x] != d[z][y]) {
              ok = true;
              break;
            }
          if (!ok) return false;
        }
      return true;
    });
    if (found) return k;
  }
  return -1;
}

inline int adim_value(const resdim::Graph& g) {
  const auto d = dist(g);
  const int n = g.order();
  for (int k = 0; k <= n; ++k)
    if (any_subset(n, k,
                   [&](const std::vector<int>& pick) { return adjacency_valid(d, as_flags(n, pick)); }))
      return k;
  return -1;
}

inline int ld_value(const resdim::Graph& g) {
  const auto d = dist(g);
  const int n = g.order();
  for (int k = 0; k <= n; ++k)
    if (any_subset(n, k,
                   [&](const std::vector<int>& pick) { return ld_valid(d, as_flags(n, pick)); }))
      return k;
  return -1;
}

template <typename Check>
inline bool any_weighting(std::vector<int>& w, int i, int left, const Check& check) {
  if (i == static_cast<int>(w.size()) - 1) {
    w[i] = left;
    return check(w);
  }
  for (int x = 0; x <= left; ++x) {
    w[i] = x;
    if (any_weighting(w, i + 1, left - x, check)) return true;
  }
  return false;
}

inline int bdim_value(const resdim::Graph& g) {
  const auto d = dist(g);
  const int n = g.order();
  const int cap = adim_value(g);
  for (int c = 0; c <= cap; ++c) {
    if (n == 0) return 0;
    std::vector<int> w(n, 0);
    if (any_weighting(w, 0, c, [&](const std::vector<int>& ws) { return broadcast_valid(d, ws); }))
      return c;
  }
  return -1;
}

}  // namespace naive
