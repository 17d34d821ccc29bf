#pragma once

#include <span>
#include <utility>
#include <vector>

#include "resdim/graph.hpp"

namespace resdim {

// Vertex -> nonnegative weight assignment. The certificate object for
// broadcast dimension; 0/1-valued broadcasts double as adjacency resolving
// sets via their support.
struct Broadcast {
  std::vector<int> weights;

  Broadcast() = default;
  explicit Broadcast(std::vector<int> w) : weights(std::move(w)) {}

  static Broadcast indicator(int n, std::span<const int> set);

  int cost() const;
  std::vector<int> support() const;
  bool zero_one() const;
};

enum class VerifyMode { kBroadcast, kAdjacencySet, kLocatingDominating };

struct VerificationReport {
  VerifyMode mode = VerifyMode::kBroadcast;
  bool valid = false;
  // Every pair (x, y), x < y, that no support vertex separates; sorted
  // lexicographically. Failures are enumerated exhaustively, not cut off
  // at the first hit.
  std::vector<std::pair<int, int>> undifferentiated;
  // Vertices reached by no support vertex within its weight radius
  // (for locating-domination: vertices outside the set with empty I-set).
  std::vector<int> unseen;
};

// d_{f(z)}(z, x) != d_{f(z)}(z, y). Requires z in supp(f) and x != y.
bool resolves(const DistanceMatrix& dm, const Broadcast& f, int z, int x, int y);

// Checks every vertex pair against the support of f. Directed graphs use
// directed distances from each support vertex. An unseen vertex does not
// invalidate a broadcast; two of them always show up as an
// undifferentiated pair.
VerificationReport verify_broadcast(const Graph& g, const Broadcast& f);

// Same semantics as verify_broadcast with the 0/1 indicator of s, computed
// through 1-neighborhood codes instead of distance rows.
VerificationReport verify_adjacency_set(const Graph& g, std::span<const int> s);

// I(v) = {z in c : d(z, v) <= 1} for v outside c; valid iff all I-sets are
// nonempty and pairwise distinct.
VerificationReport verify_locating_dominating(const Graph& g, std::span<const int> c);

inline int cost(const Broadcast& f) { return f.cost(); }

}  // namespace resdim
