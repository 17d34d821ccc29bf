#include "resdim/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

namespace resdim {
namespace {

// Small bitset over the solve universe (vertex pairs, plus one domination
// element per vertex for LD).
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int bits) : words_((bits + 63) / 64, 0) {}

  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  ElementSet& operator|=(const ElementSet& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  bool covers_with(const ElementSet& extra, const ElementSet& target) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] | extra.words_[i]) != target.words_[i]) return false;
    return true;
  }

  bool equals(const ElementSet& o) const { return words_ == o.words_; }

 private:
  std::vector<std::uint64_t> words_;
};

int pair_count(int n) { return n * (n - 1) / 2; }

// Pairs (x, y), x < y, numbered lexicographically.
int pair_id(int n, int x, int y) { return x * n - x * (x + 1) / 2 + (y - x - 1); }

struct CoverProblem {
  int n = 0;
  int elements = 0;
  std::vector<ElementSet> cover;  // per candidate vertex
  ElementSet full;
};

// Iterative-deepening subset search. Candidates are tried in increasing
// index with include-before-skip branching, so the first full cover found
// at the optimal size is the lexicographically smallest witness.
class SubsetSearch {
 public:
  explicit SubsetSearch(const CoverProblem& p) : p_(p) {
    suffix_.assign(p_.n + 1, ElementSet(p_.elements));
    for (int i = p_.n - 1; i >= 0; --i) {
      suffix_[i] = suffix_[i + 1];
      suffix_[i] |= p_.cover[i];
    }
  }

  std::optional<std::vector<int>> run(int k) {
    chosen_.clear();
    ElementSet covered(p_.elements);
    if (dfs(0, k, covered)) return chosen_;
    return std::nullopt;
  }

  std::uint64_t nodes = 0;

 private:
  bool dfs(int i, int slots, const ElementSet& covered) {
    ++nodes;
    if (slots == 0) return covered.equals(p_.full);
    if (p_.n - i < slots) return false;
    if (!covered.covers_with(suffix_[i], p_.full)) return false;

    ElementSet with = covered;
    with |= p_.cover[i];
    chosen_.push_back(i);
    if (dfs(i + 1, slots - 1, with)) return true;
    chosen_.pop_back();
    return dfs(i + 1, slots, covered);
  }

  const CoverProblem& p_;
  std::vector<ElementSet> suffix_;
  std::vector<int> chosen_;
};

CoverProblem build_set_problem(const Graph& g, const DistanceMatrix& dm, Parameter param) {
  const int n = g.order();
  CoverProblem p;
  p.n = n;
  p.elements = pair_count(n) + (param == Parameter::kLocatingDominating ? n : 0);
  p.full = ElementSet(p.elements);
  for (int e = 0; e < p.elements; ++e) p.full.set(e);

  p.cover.assign(n, ElementSet(p.elements));
  for (int z = 0; z < n; ++z) {
    ElementSet& c = p.cover[z];
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y) {
        bool covered = false;
        switch (param) {
          case Parameter::kDim:
            covered = dm.at(z, x) != dm.at(z, y);
            break;
          case Parameter::kAdim:
            covered = truncated_distance(dm, z, x, 1) != truncated_distance(dm, z, y, 1);
            break;
          case Parameter::kLocatingDominating:
            // Membership exempts a pair; otherwise z must 1-reach exactly
            // one endpoint.
            covered = z == x || z == y ||
                      (dm.at(z, x) <= 1) != (dm.at(z, y) <= 1);
            break;
          case Parameter::kBdim:
            break;
        }
        if (covered) c.set(pair_id(n, x, y));
      }
    if (param == Parameter::kLocatingDominating)
      for (int v = 0; v < n; ++v)
        if (z == v || dm.at(z, v) <= 1) c.set(pair_count(n) + v);
  }
  return p;
}

SolveResult solve_set_parameter(const Graph& g, Parameter param, const SolveOptions& opts) {
  if (g.order() > opts.max_vertices)
    throw SizeLimitError("graph order " + std::to_string(g.order()) +
                         " exceeds solver limit " + std::to_string(opts.max_vertices));

  const DistanceMatrix dm = all_pairs_distances(g);
  const CoverProblem p = build_set_problem(g, dm, param);
  SubsetSearch search(p);

  SolveResult result;
  result.parameter = param;

  ElementSet everything(p.elements);
  for (int z = 0; z < p.n; ++z) everything |= p.cover[z];
  if (!everything.equals(p.full)) {
    result.feasible = false;
    result.nodes_explored = search.nodes;
    return result;
  }

  for (int k = 0; k <= g.order(); ++k) {
    if (auto s = search.run(k)) {
      result.value = k;
      result.witness = Broadcast::indicator(g.order(), *s);
      result.nodes_explored = search.nodes;
      return result;
    }
  }
  result.feasible = false;  // unreachable: the full vertex set always covers
  result.nodes_explored = search.nodes;
  return result;
}

// Weight assignments enumerated in lexicographic order of the weight
// vector, iterative deepening on total cost.
class BroadcastSearch {
 public:
  BroadcastSearch(const Graph& g, const DistanceMatrix& dm, int max_cost)
      : n_(g.order()), elements_(pair_count(n_)), full_(elements_), max_cost_(max_cost) {
    for (int e = 0; e < elements_; ++e) full_.set(e);

    cap_.assign(n_, 1);
    for (int v = 0; v < n_; ++v) {
      int ecc = 0;
      for (int u = 0; u < n_; ++u)
        if (dm.at(v, u) != kUnreachable) ecc = std::max(ecc, dm.at(v, u));
      // A weight of 1 already differs from absence (support membership),
      // so the no-loss cap is max(eccentricity, 1).
      cap_[v] = std::min(std::max(ecc, 1), max_cost_);
    }

    cover_.assign(n_, {});
    for (int v = 0; v < n_; ++v) {
      cover_[v].reserve(cap_[v]);
      for (int w = 1; w <= cap_[v]; ++w) {
        ElementSet c(elements_);
        for (int x = 0; x < n_; ++x)
          for (int y = x + 1; y < n_; ++y)
            if (truncated(dm.at(v, x), w) != truncated(dm.at(v, y), w))
              c.set(pair_id(n_, x, y));
        cover_[v].push_back(std::move(c));
      }
    }

    // suffix_[i][r]: union over z >= i of cover(z, min(cap_z, r)); a
    // superset of anything a budget of r can still cover.
    suffix_.assign(n_ + 1, std::vector<ElementSet>(max_cost_ + 1, ElementSet(elements_)));
    for (int i = n_ - 1; i >= 0; --i)
      for (int r = 0; r <= max_cost_; ++r) {
        suffix_[i][r] = suffix_[i + 1][r];
        if (r > 0) suffix_[i][r] |= cover_[i][std::min(cap_[i], r) - 1];
      }

    cap_suffix_.assign(n_ + 1, 0);
    for (int i = n_ - 1; i >= 0; --i) cap_suffix_[i] = cap_suffix_[i + 1] + cap_[i];
  }

  std::optional<std::vector<int>> run(int cost) {
    weights_.assign(n_, 0);
    ElementSet covered(elements_);
    if (dfs(0, cost, covered)) return weights_;
    return std::nullopt;
  }

  std::uint64_t nodes = 0;

 private:
  bool dfs(int i, int budget, const ElementSet& covered) {
    ++nodes;
    if (i == n_) return budget == 0 && covered.equals(full_);
    if (budget > cap_suffix_[i]) return false;
    if (!covered.covers_with(suffix_[i][budget], full_)) return false;

    const int top = std::min(cap_[i], budget);
    for (int w = 0; w <= top; ++w) {
      weights_[i] = w;
      if (w == 0) {
        if (dfs(i + 1, budget, covered)) return true;
      } else {
        ElementSet with = covered;
        with |= cover_[i][w - 1];
        if (dfs(i + 1, budget - w, with)) return true;
      }
    }
    weights_[i] = 0;
    return false;
  }

  int n_;
  int elements_;
  ElementSet full_;
  int max_cost_;
  std::vector<int> cap_;
  std::vector<std::vector<ElementSet>> cover_;
  std::vector<std::vector<ElementSet>> suffix_;
  std::vector<int> cap_suffix_;
  std::vector<int> weights_;
};

}  // namespace

const char* parameter_name(Parameter p) {
  switch (p) {
    case Parameter::kDim: return "dim";
    case Parameter::kAdim: return "adim";
    case Parameter::kLocatingDominating: return "ld";
    case Parameter::kBdim: return "bdim";
  }
  return "?";
}

SolveResult solve_metric_dimension(const Graph& g, const SolveOptions& opts) {
  return solve_set_parameter(g, Parameter::kDim, opts);
}

SolveResult solve_adjacency_dimension(const Graph& g, const SolveOptions& opts) {
  return solve_set_parameter(g, Parameter::kAdim, opts);
}

SolveResult solve_locating_dominating(const Graph& g, const SolveOptions& opts) {
  return solve_set_parameter(g, Parameter::kLocatingDominating, opts);
}

SolveResult solve_broadcast_dimension(const Graph& g, const SolveOptions& opts) {
  if (g.order() > opts.max_vertices)
    throw SizeLimitError("graph order " + std::to_string(g.order()) +
                         " exceeds solver limit " + std::to_string(opts.max_vertices));

  SolveResult result;
  result.parameter = Parameter::kBdim;

  int cap;
  if (opts.cost_cap) {
    cap = *opts.cost_cap;
  } else {
    SolveResult adim = solve_adjacency_dimension(g, opts);
    if (!adim.feasible) {
      result.feasible = false;
      return result;
    }
    cap = adim.value;
  }

  const DistanceMatrix dm = all_pairs_distances(g);
  BroadcastSearch search(g, dm, std::max(cap, 1));
  for (int c = 0; c <= cap; ++c) {
    if (auto w = search.run(c)) {
      result.value = c;
      result.witness = Broadcast(std::move(*w));
      result.nodes_explored = search.nodes;
      return result;
    }
  }
  result.feasible = false;
  result.nodes_explored = search.nodes;
  return result;
}

}  // namespace resdim
