#include "resdim/certificates.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace resdim {

Broadcast Broadcast::indicator(int n, std::span<const int> set) {
  Broadcast f(std::vector<int>(n, 0));
  for (int v : set) {
    if (v < 0 || v >= n) throw std::invalid_argument("set member out of range");
    f.weights[v] = 1;
  }
  return f;
}

int Broadcast::cost() const { return std::accumulate(weights.begin(), weights.end(), 0); }

std::vector<int> Broadcast::support() const {
  std::vector<int> s;
  for (int v = 0; v < static_cast<int>(weights.size()); ++v)
    if (weights[v] > 0) s.push_back(v);
  return s;
}

bool Broadcast::zero_one() const {
  return std::all_of(weights.begin(), weights.end(), [](int w) { return w == 0 || w == 1; });
}

namespace {

void check_broadcast_shape(const Graph& g, const Broadcast& f) {
  if (static_cast<int>(f.weights.size()) != g.order())
    throw std::invalid_argument("broadcast length does not match graph order");
  for (int w : f.weights)
    if (w < 0) throw std::invalid_argument("broadcast weights must be nonnegative");
}

std::vector<bool> member_flags(const Graph& g, std::span<const int> s) {
  std::vector<bool> in(g.order(), false);
  for (int v : s) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("set member out of range");
    if (in[v]) throw std::invalid_argument("duplicate set member");
    in[v] = true;
  }
  return in;
}

// codes[v] = sorted list of set members z with d(z, v) <= 1.
std::vector<std::vector<int>> radius1_codes(const Graph& g, std::span<const int> s) {
  std::vector<int> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::vector<int>> codes(g.order());
  for (int z : sorted) {
    codes[z].push_back(z);
    for (int v : g.out_neighbors(z)) codes[v].push_back(z);
  }
  return codes;
}

std::vector<std::pair<int, int>> pairs_with_equal_codes(
    const std::vector<std::vector<int>>& codes, const std::vector<bool>& member) {
  std::map<std::vector<int>, std::vector<int>> groups;
  for (int v = 0; v < static_cast<int>(codes.size()); ++v)
    if (!member[v]) groups[codes[v]].push_back(v);
  std::vector<std::pair<int, int>> bad;
  for (const auto& [code, verts] : groups)
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j) bad.emplace_back(verts[i], verts[j]);
  std::sort(bad.begin(), bad.end());
  return bad;
}

}  // namespace

bool resolves(const DistanceMatrix& dm, const Broadcast& f, int z, int x, int y) {
  if (z < 0 || z >= dm.n() || f.weights.at(z) <= 0)
    throw std::invalid_argument("resolving vertex must carry positive weight");
  if (x == y) throw std::invalid_argument("resolves requires a pair of distinct vertices");
  const int k = f.weights[z];
  return truncated_distance(dm, z, x, k) != truncated_distance(dm, z, y, k);
}

VerificationReport verify_broadcast(const Graph& g, const Broadcast& f) {
  check_broadcast_shape(g, f);
  const int n = g.order();
  VerificationReport report;
  report.mode = VerifyMode::kBroadcast;

  const std::vector<int> supp = f.support();
  std::vector<std::vector<int>> rows;
  rows.reserve(supp.size());
  for (int z : supp) rows.push_back(distances_from(g, z));

  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      bool separated = false;
      for (size_t i = 0; i < supp.size() && !separated; ++i) {
        const int k = f.weights[supp[i]];
        separated = truncated(rows[i][x], k) != truncated(rows[i][y], k);
      }
      if (!separated) report.undifferentiated.emplace_back(x, y);
    }

  for (int v = 0; v < n; ++v) {
    bool reached = false;
    for (size_t i = 0; i < supp.size() && !reached; ++i)
      reached = rows[i][v] != kUnreachable && rows[i][v] <= f.weights[supp[i]];
    if (!reached) report.unseen.push_back(v);
  }

  report.valid = report.undifferentiated.empty();
  return report;
}

VerificationReport verify_adjacency_set(const Graph& g, std::span<const int> s) {
  const std::vector<bool> member = member_flags(g, s);
  const auto codes = radius1_codes(g, s);

  VerificationReport report;
  report.mode = VerifyMode::kAdjacencySet;
  report.undifferentiated = pairs_with_equal_codes(codes, member);
  for (int v = 0; v < g.order(); ++v)
    if (codes[v].empty()) report.unseen.push_back(v);
  report.valid = report.undifferentiated.empty();
  return report;
}

VerificationReport verify_locating_dominating(const Graph& g, std::span<const int> c) {
  const std::vector<bool> member = member_flags(g, c);
  const auto codes = radius1_codes(g, c);

  VerificationReport report;
  report.mode = VerifyMode::kLocatingDominating;
  report.undifferentiated = pairs_with_equal_codes(codes, member);
  for (int v = 0; v < g.order(); ++v)
    if (!member[v] && codes[v].empty()) report.unseen.push_back(v);
  report.valid = report.undifferentiated.empty() && report.unseen.empty();
  return report;
}

}  // namespace resdim
