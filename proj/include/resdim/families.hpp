#pragma once

#include <string>

#include "resdim/graph.hpp"

namespace resdim {

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

struct Grid {
  Graph graph;
  GridCoords coords;
};

// P_rows x P_cols with column-major labels.
Grid make_grid(int rows, int cols);

// Two cliques, one on v_1..v_k and one on the 2^k vertices u_b indexed by
// binary strings b, plus a cross edge u_b ~ v_j exactly when digit j of b
// is 1 (digit 1 is the most significant). Vertex layout: v_j at index j-1,
// u_b at index k + value(b).
//
// oriented=true directs every cross edge toward the v side, v_i -> v_j for
// i < j, and u_b -> u_b' when b precedes b' lexicographically.
Graph make_f_k(int k, bool oriented);

// Complete graph on the vertex set of F_k. The oriented version points the
// v_i ~ u_b edge toward v_i exactly when digit i of b is 1; edges inside
// each side fall back to the same lexicographic rule as make_f_k.
Graph make_r_k(int k, bool oriented);

// Complete k-ary tree with the given number of layers, every edge directed
// away from the root, vertices numbered breadth-first from the root.
Graph make_kary_out_tree(int k, int layers);

// Tightness construction for the max-degree lower bound: a (delta-1)-regular
// circulant H on m vertices with every edge subdivided, one pendant leaf per
// original vertex, and one isolated vertex. Order m*(delta+3)/2 + 1.
// Requires delta >= 2, delta <= m, (delta-1)*m even.
Graph make_maxdeg_tight(int m, int delta);

enum class Family {
  kPath,
  kCycle,
  kComplete,
  kGrid,
  kFK,
  kFKOriented,
  kRK,
  kRKOriented,
  kKaryTreeOut,
  kMaxdegTight,
};

struct FamilySpec {
  Family family = Family::kPath;
  int n = 0;      // path/cycle/complete order; grid rows; tree layers
  int m = 0;      // grid cols; maxdeg_tight m
  int k = 0;      // f_k / r_k / tree branching
  int delta = 0;  // maxdeg_tight max degree
};

Graph make_family(const FamilySpec& spec);

}  // namespace resdim
