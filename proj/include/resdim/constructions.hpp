#pragma once

#include <string>
#include <utility>
#include <vector>

#include "resdim/certificates.hpp"
#include "resdim/graph.hpp"

namespace resdim {

// Column strip of a 2- or 3-row grid with weight-1 marks, the unit of
// concatenation for the closed-form grid certificates.
struct BlockPattern {
  int rows = 0;
  int width = 0;
  std::vector<std::pair<int, int>> marks;  // (row, col), sorted
  std::string name;

  int mark_count() const { return static_cast<int>(marks.size()); }
};

// b appended to a, with b's marks shifted right by a.width.
BlockPattern concatenate(const BlockPattern& a, const BlockPattern& b);

struct GridPatternSet2 {
  BlockPattern a, b, c, d, t1, t2, t3, t1_tail, t3_tail;
};

struct GridPatternSet3 {
  BlockPattern g, g1, g2;
};

// The frozen block patterns used by the certificate builders.
const GridPatternSet2& grid2_patterns();
const GridPatternSet3& grid3_patterns();

// Reruns the exhaustive pattern search the frozen constants came from:
// smallest (by mark bitmask, most significant component first) block tuple
// whose eight / three residue assemblies all verify for every n up to 200.
GridPatternSet2 derive_grid2_patterns();
GridPatternSet3 derive_grid3_patterns();

// Adjacency resolving set of P_2 x P_n of size ceil((3n-1)/4), assembled
// from the residue-of-n-mod-8 recipe. n >= 2.
std::vector<int> grid2_certificate(int n);
std::string grid2_recipe(int n);

// Adjacency resolving set of P_3 x P_n of size n + [n = 1 mod 3]. n >= 2.
std::vector<int> grid3_certificate(int n);
std::string grid3_recipe(int n);

// Marks every vertex at even depths (odd layer count) or odd depths (even
// layer count) of the out-directed complete k-ary tree.
std::vector<int> kary_tree_certificate(int k, int layers);

// Closed-form size of the depth-alternating marking: sum of k^d over the
// marked depths. For layers == 1 this yields 1 (the lone root is marked),
// although the empty set already resolves a one-vertex graph.
long long kary_adim_formula(int k, int layers);

// Vertices u such that some pair (u, w) is resolved by v under f and by no
// other support vertex. Requires f(v) > 0.
std::vector<int> crucial_vertices(const Graph& g, const Broadcast& f, int v);

// Rewrites a resolving broadcast on an out-directed tree into a 0/1-valued
// one of no greater cost: walk vertices by increasing depth, and replace
// each weight w > 1 by unit weights on the crucial set of its vertex
// (dropping the child when the crucial set has w+1 members). Every rewrite
// is re-verified; a rewrite that breaks the broadcast, a crucial set larger
// than w+1, or two crucial vertices in one layer raise std::logic_error.
Broadcast tree_broadcast_to_adjacency(const Graph& g, const Broadcast& f);

}  // namespace resdim
