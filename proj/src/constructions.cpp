#include "resdim/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "resdim/families.hpp"

namespace resdim {

BlockPattern concatenate(const BlockPattern& a, const BlockPattern& b) {
  if (a.rows != b.rows) throw std::invalid_argument("concatenate: row counts differ");
  BlockPattern out;
  out.rows = a.rows;
  out.width = a.width + b.width;
  out.marks = a.marks;
  for (auto [r, c] : b.marks) out.marks.emplace_back(r, c + a.width);
  std::sort(out.marks.begin(), out.marks.end());
  out.name = a.name + b.name;
  return out;
}

namespace {

// ----- pattern derivation ---------------------------------------------
//
// The block contents are not pinned anywhere; they are recovered by
// exhaustive search over candidate mark sets, constrained to make every
// residue assembly an adjacency resolving set of the right size for all
// n <= 200. Blocks are encoded as bitmasks with bit index col*rows + row,
// candidates enumerated in increasing mask order, and the first tuple
// that fully validates is committed (struct field order most significant).

constexpr int kMaxWidth = 200;

struct RawBlock {
  int width = 0;
  std::uint32_t bits = 0;
};

BlockPattern to_pattern(int rows, const RawBlock& raw, std::string name) {
  BlockPattern p;
  p.rows = rows;
  p.width = raw.width;
  p.name = std::move(name);
  for (int c = 0; c < raw.width; ++c)
    for (int r = 0; r < rows; ++r)
      if (raw.bits >> (c * rows + r) & 1) p.marks.emplace_back(r, c);
  std::sort(p.marks.begin(), p.marks.end());
  return p;
}

std::vector<std::uint8_t> assemble_columns(int rows, const std::vector<RawBlock>& seq) {
  std::vector<std::uint8_t> cols;
  for (const RawBlock& b : seq)
    for (int c = 0; c < b.width; ++c)
      cols.push_back(static_cast<std::uint8_t>(b.bits >> (c * rows) & ((1 << rows) - 1)));
  return cols;
}

// Adjacency-resolving check on a rows x n grid, specialized for 0/1 marks:
// valid iff the marked closed neighborhoods of the unmarked vertices are
// pairwise distinct (two empty neighborhoods collide, one is fine). Codes
// are packed into 64-bit keys, at most four 10-bit positions each.
bool marks_valid(int rows, const std::vector<std::uint8_t>& cols) {
  const int n = static_cast<int>(cols.size());
  auto marked = [&](int r, int c) {
    return r >= 0 && r < rows && c >= 0 && c < n && (cols[c] >> r & 1);
  };
  std::vector<std::uint64_t> keys;
  keys.reserve(static_cast<size_t>(rows) * n);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < rows; ++r) {
      if (marked(r, c)) continue;
      std::uint64_t key = 0;
      auto push = [&](int rr, int cc) {
        if (marked(rr, cc)) key = key << 10 | static_cast<std::uint64_t>(cc * rows + rr + 1);
      };
      push(r, c - 1);
      push(r - 1, c);
      push(r + 1, c);
      push(r, c + 1);
      keys.push_back(key);
    }
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) == keys.end();
}

bool sequence_valid(int rows, const std::vector<RawBlock>& seq) {
  return marks_valid(rows, assemble_columns(rows, seq));
}

std::vector<std::uint32_t> masks_with_popcount(int bits, int count) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << bits); ++m)
    if (__builtin_popcount(m) == count) out.push_back(m);
  return out;
}

std::vector<RawBlock> repeat_pair(const RawBlock& x, const RawBlock& y, int m) {
  std::vector<RawBlock> seq;
  for (int i = 0; i < m; ++i) {
    seq.push_back(x);
    seq.push_back(y);
  }
  return seq;
}

// Residue assemblies of the two-row table, parameterized by repeat count.
enum class Residue2 { r0, r1, r2, r3, r4, r5, r6, r7 };

struct RawSet2 {
  RawBlock a, b, c, d, t1, t2, t3, t1t, t3t;
};

std::vector<RawBlock> residue2_sequence(const RawSet2& s, int n) {
  const int r = n % 8;
  std::vector<RawBlock> seq;
  switch (r) {
    case 0: seq = repeat_pair(s.c, s.d, n / 8); break;
    case 1: seq = repeat_pair(s.a, s.b, (n - 1) / 8); seq.push_back(s.t1); break;
    case 2: seq = repeat_pair(s.c, s.d, (n - 2) / 8); seq.push_back(s.t2); break;
    case 3: seq = repeat_pair(s.a, s.b, (n - 3) / 8); seq.push_back(s.t3); break;
    case 4: seq = repeat_pair(s.c, s.d, (n - 4) / 8); seq.push_back(s.c); break;
    case 5:
      seq = repeat_pair(s.a, s.b, (n - 5) / 8);
      seq.push_back(s.a);
      seq.push_back(s.t1t);
      break;
    case 6:
      seq = repeat_pair(s.c, s.d, (n - 6) / 8);
      seq.push_back(s.c);
      seq.push_back(s.t2);
      break;
    default:
      seq = repeat_pair(s.a, s.b, (n - 7) / 8);
      seq.push_back(s.a);
      seq.push_back(s.t3t);
      break;
  }
  return seq;
}

bool residue2_full_sweep(const RawSet2& s, int residue) {
  for (int n = 2; n <= kMaxWidth; ++n)
    if (n % 8 == residue && !sequence_valid(2, residue2_sequence(s, n))) return false;
  return true;
}

std::vector<RawBlock> residue3_sequence(const RawBlock& g, const RawBlock& g1,
                                        const RawBlock& g2, int n) {
  std::vector<RawBlock> seq(n / 3, g);
  if (n % 3 == 1) seq.push_back(g1);
  if (n % 3 == 2) seq.push_back(g2);
  return seq;
}

}  // namespace

GridPatternSet2 derive_grid2_patterns() {
  const auto four = masks_with_popcount(8, 3);   // A, B, C, D
  const auto one = masks_with_popcount(2, 1);    // T1, T1~
  const auto two = masks_with_popcount(4, 2);    // T2
  const auto three = masks_with_popcount(6, 2);  // T3, T3~

  RawSet2 s;
  s.a.width = s.b.width = s.c.width = s.d.width = 4;
  s.t1.width = s.t1t.width = 1;
  s.t2.width = 2;
  s.t3.width = s.t3t.width = 3;

  // The AB side (residues 1, 3, 5, 7) and the CD side (0, 2, 4, 6) share
  // no assemblies, so each side is minimized on its own.
  bool found_ab = false;
  for (std::uint32_t a : four) {
    if (found_ab) break;
    s.a.bits = a;
    for (std::uint32_t b : four) {
      s.b.bits = b;

      auto pick = [&](const std::vector<std::uint32_t>& cands, RawBlock& slot, int residue) {
        for (std::uint32_t bits : cands) {
          slot.bits = bits;
          if (residue2_full_sweep(s, residue)) return true;
        }
        return false;
      };
      if (!pick(one, s.t1, 1)) continue;
      if (!pick(three, s.t3, 3)) continue;
      if (!pick(one, s.t1t, 5)) continue;
      if (!pick(three, s.t3t, 7)) continue;
      found_ab = true;
      break;
    }
  }
  if (!found_ab) throw std::logic_error("no valid AB block family exists");

  bool found_cd = false;
  for (std::uint32_t c : four) {
    if (found_cd) break;
    s.c.bits = c;
    if (!sequence_valid(2, {s.c})) continue;
    for (std::uint32_t d : four) {
      s.d.bits = d;
      if (!sequence_valid(2, repeat_pair(s.c, s.d, 1))) continue;
      if (!residue2_full_sweep(s, 0) || !residue2_full_sweep(s, 4)) continue;

      bool t2_ok = false;
      for (std::uint32_t bits : two) {
        s.t2.bits = bits;
        if (residue2_full_sweep(s, 2) && residue2_full_sweep(s, 6)) {
          t2_ok = true;
          break;
        }
      }
      if (!t2_ok) continue;
      found_cd = true;
      break;
    }
  }
  if (!found_cd) throw std::logic_error("no valid CD block family exists");

  GridPatternSet2 out;
  out.a = to_pattern(2, s.a, "A");
  out.b = to_pattern(2, s.b, "B");
  out.c = to_pattern(2, s.c, "C");
  out.d = to_pattern(2, s.d, "D");
  out.t1 = to_pattern(2, s.t1, "T1");
  out.t2 = to_pattern(2, s.t2, "T2");
  out.t3 = to_pattern(2, s.t3, "T3");
  out.t1_tail = to_pattern(2, s.t1t, "T1~");
  out.t3_tail = to_pattern(2, s.t3t, "T3~");
  return out;
}

GridPatternSet3 derive_grid3_patterns() {
  const auto g_cands = masks_with_popcount(9, 3);
  const auto g1_cands = masks_with_popcount(3, 2);
  const auto g2_cands = masks_with_popcount(6, 2);

  RawBlock g{3, 0}, g1{1, 0}, g2{2, 0};
  for (std::uint32_t gb : g_cands) {
    g.bits = gb;
    bool ok = true;
    for (int n = 3; n <= kMaxWidth && ok; n += 3)
      ok = sequence_valid(3, residue3_sequence(g, g1, g2, n));
    if (!ok) continue;

    auto pick = [&](const std::vector<std::uint32_t>& cands, RawBlock& slot, int residue) {
      for (std::uint32_t bits : cands) {
        slot.bits = bits;
        bool all = true;
        for (int n = 2; n <= kMaxWidth && all; ++n)
          if (n % 3 == residue) all = sequence_valid(3, residue3_sequence(g, g1, g2, n));
        if (all) return true;
      }
      return false;
    };
    if (!pick(g1_cands, g1, 1)) continue;
    if (!pick(g2_cands, g2, 2)) continue;

    GridPatternSet3 out;
    out.g = to_pattern(3, g, "G");
    out.g1 = to_pattern(3, g1, "G1");
    out.g2 = to_pattern(3, g2, "G2");
    return out;
  }
  throw std::logic_error("no valid G block family exists");
}

namespace {

BlockPattern literal_block(const char* name, int rows, int width,
                           std::initializer_list<std::pair<int, int>> marks) {
  BlockPattern p;
  p.rows = rows;
  p.width = width;
  p.marks = marks;
  p.name = name;
  return p;
}

}  // namespace

// Frozen output of derive_grid2_patterns / derive_grid3_patterns; the
// regeneration test keeps these in sync with the search.
const GridPatternSet2& grid2_patterns() {
  static const GridPatternSet2 set = {
      literal_block("A", 2, 4, {{0, 0}, {0, 2}, {1, 2}}),
      literal_block("B", 2, 4, {{0, 2}, {1, 0}, {1, 2}}),
      literal_block("C", 2, 4, {{0, 0}, {0, 2}, {1, 1}}),
      literal_block("D", 2, 4, {{0, 1}, {1, 0}, {1, 2}}),
      literal_block("T1", 2, 1, {{0, 0}}),
      literal_block("T2", 2, 2, {{0, 1}, {1, 1}}),
      literal_block("T3", 2, 3, {{0, 0}, {0, 2}}),
      literal_block("T1~", 2, 1, {{1, 0}}),
      literal_block("T3~", 2, 3, {{1, 0}, {1, 2}}),
  };
  return set;
}

const GridPatternSet3& grid3_patterns() {
  static const GridPatternSet3 set = {
      literal_block("G", 3, 3, {{0, 1}, {1, 2}, {2, 1}}),
      literal_block("G1", 3, 1, {{0, 0}, {1, 0}}),
      literal_block("G2", 3, 2, {{0, 1}, {2, 1}}),
  };
  return set;
}

namespace {

std::vector<const BlockPattern*> grid2_blocks(int n, const GridPatternSet2& p) {
  std::vector<const BlockPattern*> seq;
  auto rep = [&](const BlockPattern& x, const BlockPattern& y, int m) {
    for (int i = 0; i < m; ++i) {
      seq.push_back(&x);
      seq.push_back(&y);
    }
  };
  switch (n % 8) {
    case 0: rep(p.c, p.d, n / 8); break;
    case 1: rep(p.a, p.b, (n - 1) / 8); seq.push_back(&p.t1); break;
    case 2: rep(p.c, p.d, (n - 2) / 8); seq.push_back(&p.t2); break;
    case 3: rep(p.a, p.b, (n - 3) / 8); seq.push_back(&p.t3); break;
    case 4: rep(p.c, p.d, (n - 4) / 8); seq.push_back(&p.c); break;
    case 5:
      rep(p.a, p.b, (n - 5) / 8);
      seq.push_back(&p.a);
      seq.push_back(&p.t1_tail);
      break;
    case 6:
      rep(p.c, p.d, (n - 6) / 8);
      seq.push_back(&p.c);
      seq.push_back(&p.t2);
      break;
    default:
      rep(p.a, p.b, (n - 7) / 8);
      seq.push_back(&p.a);
      seq.push_back(&p.t3_tail);
      break;
  }
  return seq;
}

std::vector<const BlockPattern*> grid3_blocks(int n, const GridPatternSet3& p) {
  std::vector<const BlockPattern*> seq(n / 3, &p.g);
  if (n % 3 == 1) seq.push_back(&p.g1);
  if (n % 3 == 2) seq.push_back(&p.g2);
  return seq;
}

std::vector<int> assemble_certificate(int rows, const std::vector<const BlockPattern*>& seq) {
  BlockPattern whole;
  whole.rows = rows;
  for (const BlockPattern* b : seq) whole = concatenate(whole, *b);
  std::vector<int> ids;
  ids.reserve(whole.marks.size());
  for (auto [r, c] : whole.marks) ids.push_back(c * rows + r);
  std::sort(ids.begin(), ids.end());
  return ids;
}

void require_grid_width(int n) {
  if (n < 2) throw std::invalid_argument("grid certificates require n >= 2");
  if (n > kMaxWidth) throw std::invalid_argument("grid certificates are validated up to n = 200");
}

}  // namespace

std::vector<int> grid2_certificate(int n) {
  require_grid_width(n);
  return assemble_certificate(2, grid2_blocks(n, grid2_patterns()));
}

std::string grid2_recipe(int n) {
  require_grid_width(n);
  static const char* kTails[8] = {"", "T1", "T2", "T3", "C", "A T1~", "C T2", "A T3~"};
  const int r = n % 8;
  const bool ab_side = r % 2 == 1;
  const int repeats = (n - r) / 8;
  std::string out;
  if (repeats > 0)
    out = std::string("(") + (ab_side ? "AB" : "CD") + ")^" + std::to_string(repeats);
  if (*kTails[r]) out += (out.empty() ? "" : " ") + std::string(kTails[r]);
  return out;
}

std::vector<int> grid3_certificate(int n) {
  require_grid_width(n);
  return assemble_certificate(3, grid3_blocks(n, grid3_patterns()));
}

std::string grid3_recipe(int n) {
  require_grid_width(n);
  std::string out;
  if (n / 3 > 0) out = "G^" + std::to_string(n / 3);
  if (n % 3 == 1) out += (out.empty() ? "" : " ") + std::string("G1");
  if (n % 3 == 2) out += (out.empty() ? "" : " ") + std::string("G2");
  return out;
}

std::vector<int> kary_tree_certificate(int k, int layers) {
  if (k < 2 || layers < 1) throw std::invalid_argument("kary_tree_certificate needs k >= 2, layers >= 1");
  const int marked_parity = layers % 2 == 1 ? 0 : 1;
  std::vector<int> out;
  long long start = 0, size = 1;
  for (int depth = 0; depth < layers; ++depth) {
    if (depth % 2 == marked_parity)
      for (long long v = start; v < start + size; ++v) out.push_back(static_cast<int>(v));
    start += size;
    size *= k;
  }
  return out;
}

long long kary_adim_formula(int k, int layers) {
  if (k < 2 || layers < 1) throw std::invalid_argument("kary_adim_formula needs k >= 2, layers >= 1");
  const int marked_parity = layers % 2 == 1 ? 0 : 1;
  long long total = 0, power = 1;
  for (int depth = 0; depth < layers; ++depth) {
    if (depth % 2 == marked_parity) total += power;
    power *= k;
  }
  return total;
}

std::vector<int> crucial_vertices(const Graph& g, const Broadcast& f, int v) {
  if (static_cast<int>(f.weights.size()) != g.order())
    throw std::invalid_argument("broadcast length does not match graph order");
  if (v < 0 || v >= g.order() || f.weights[v] <= 0)
    throw std::invalid_argument("crucial_vertices requires f(v) > 0");

  const std::vector<int> supp = f.support();
  std::map<int, std::vector<int>> rows;
  for (int z : supp) rows[z] = distances_from(g, z);

  auto separates = [&](int z, int x, int y) {
    const int w = f.weights[z];
    return truncated(rows[z][x], w) != truncated(rows[z][y], w);
  };

  std::vector<int> crucial;
  for (int u = 0; u < g.order(); ++u) {
    bool is_crucial = false;
    for (int x = 0; x < g.order() && !is_crucial; ++x) {
      if (x == u || !separates(v, u, x)) continue;
      bool someone_else = false;
      for (int z : supp)
        if (z != v && separates(z, u, x)) {
          someone_else = true;
          break;
        }
      is_crucial = !someone_else;
    }
    if (is_crucial) crucial.push_back(u);
  }
  return crucial;
}

namespace {

struct TreeShape {
  std::vector<int> parent;
  std::vector<int> depth;
  std::vector<int> order;  // vertices sorted by (depth, index)
};

TreeShape out_tree_shape(const Graph& g) {
  if (!g.is_directed()) throw std::invalid_argument("expected an out-directed tree");
  const int n = g.order();
  if (g.edge_count() != n - 1) throw std::invalid_argument("expected an out-directed tree");

  TreeShape t;
  t.parent.assign(n, -1);
  for (int u = 0; u < n; ++u)
    for (int v : g.out_neighbors(u)) {
      if (t.parent[v] != -1) throw std::invalid_argument("vertex has two parents");
      t.parent[v] = u;
    }
  int root = -1;
  for (int v = 0; v < n; ++v)
    if (t.parent[v] == -1) {
      if (root != -1) throw std::invalid_argument("tree has two roots");
      root = v;
    }
  if (root == -1) throw std::invalid_argument("tree has no root");

  const std::vector<int> dist = distances_from(g, root);
  t.depth.assign(n, 0);
  for (int v = 0; v < n; ++v) {
    if (dist[v] == kUnreachable) throw std::invalid_argument("tree is not rooted at one vertex");
    t.depth[v] = dist[v];
  }
  t.order.resize(n);
  for (int v = 0; v < n; ++v) t.order[v] = v;
  std::sort(t.order.begin(), t.order.end(),
            [&](int x, int y) { return std::pair(t.depth[x], x) < std::pair(t.depth[y], y); });
  return t;
}

}  // namespace

Broadcast tree_broadcast_to_adjacency(const Graph& g, const Broadcast& f0) {
  const TreeShape tree = out_tree_shape(g);
  if (!verify_broadcast(g, f0).valid)
    throw std::invalid_argument("input broadcast does not resolve the tree");

  Broadcast f = f0;
  for (;;) {
    int v = -1;
    for (int u : tree.order)
      if (f.weights[u] > 1) {
        v = u;
        break;
      }
    if (v == -1) break;

    const int w = f.weights[v];
    const std::vector<int> crucial = crucial_vertices(g, f, v);
    if (static_cast<int>(crucial.size()) > w + 1)
      throw std::logic_error("crucial set larger than weight + 1");
    std::map<int, int> per_layer;
    for (int u : crucial)
      if (++per_layer[tree.depth[u]] > 1)
        throw std::logic_error("two crucial vertices in one layer");

    int child = -1;
    for (int u : crucial)
      if (tree.parent[u] == v) child = u;

    f.weights[v] = 0;
    const bool drop_child = static_cast<int>(crucial.size()) == w + 1 && child != -1;
    for (int u : crucial) {
      if (drop_child && u == child) continue;
      f.weights[u] = 1;
    }

    if (!verify_broadcast(g, f).valid)
      throw std::logic_error("rewrite produced a non-resolving broadcast");
  }

  if (f.cost() > f0.cost()) throw std::logic_error("transformation increased total weight");
  return f;
}

}  // namespace resdim
