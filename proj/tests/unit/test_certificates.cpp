#include <stdexcept>
#include <vector>

#include "doctest.h"

#include "corpus.hpp"
#include "naive.hpp"
#include "resdim/certificates.hpp"
#include "resdim/families.hpp"

using namespace resdim;

namespace {

Broadcast weights(std::vector<int> w) { return Broadcast(std::move(w)); }

}  // namespace

TEST_CASE("resolves") {
  auto p3 = make_path(3);
  auto dm3 = all_pairs_distances(p3);
  CHECK(resolves(dm3, weights({1, 0, 0}), 0, 1, 2));

  auto p4 = make_path(4);
  auto dm4 = all_pairs_distances(p4);
  CHECK(!resolves(dm4, weights({1, 0, 0, 0}), 0, 2, 3));  // both truncate to 2

  CHECK_THROWS_AS(resolves(dm3, weights({1, 0, 0}), 1, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(resolves(dm3, weights({1, 0, 0}), 0, 2, 2), std::invalid_argument);
}

TEST_CASE("verify_broadcast") {
  SUBCASE("triangle with two unit weights") {
    auto r = verify_broadcast(make_complete(3), weights({1, 1, 0}));
    CHECK(r.valid);
    CHECK(r.unseen.empty());
    CHECK(naive::broadcast_valid(naive::dist(make_complete(3)), {1, 1, 0}));
  }
  SUBCASE("empty support leaves every pair undifferentiated") {
    auto r = verify_broadcast(make_path(4), weights({0, 0, 0, 0}));
    CHECK(!r.valid);
    CHECK(r.undifferentiated.size() == 6);
    CHECK(r.undifferentiated.front() == std::pair{0, 1});
    CHECK(r.undifferentiated.back() == std::pair{2, 3});
  }
  SUBCASE("directed path resolved from its source") {
    Graph g(4, true);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto r = verify_broadcast(g, weights({3, 0, 0, 0}));
    CHECK(r.valid);
    CHECK(r.unseen.empty());
  }
  SUBCASE("length mismatch is rejected") {
    CHECK_THROWS_AS(verify_broadcast(make_path(3), weights({1, 0})), std::invalid_argument);
  }
}

TEST_CASE("verify_adjacency_set") {
  SUBCASE("two adjacent vertices resolve the 4-cycle") {
    std::vector<int> s{0, 1};
    CHECK(verify_adjacency_set(make_cycle(4), s).valid);
    CHECK(naive::adjacency_valid(naive::dist(make_cycle(4)), naive::as_flags(4, s)));
  }
  SUBCASE("the middle of P5 leaves the end pairs colliding") {
    std::vector<int> s{2};
    auto r = verify_adjacency_set(make_path(5), s);
    CHECK(!r.valid);
    CHECK(r.undifferentiated == std::vector<std::pair<int, int>>{{0, 4}, {1, 3}});
    CHECK(!naive::adjacency_valid(naive::dist(make_path(5)), naive::as_flags(5, s)));
  }
  SUBCASE("the full vertex set always works") {
    SplitMix64 rng(7);
    for (int t = 0; t < 10; ++t) {
      Graph g = corpus::random_graph(rng, 2, 8);
      std::vector<int> all(g.order());
      for (int v = 0; v < g.order(); ++v) all[v] = v;
      CHECK(verify_adjacency_set(g, all).valid);
    }
  }
}

TEST_CASE("verify_locating_dominating") {
  SUBCASE("two vertices of the triangle") {
    std::vector<int> c{0, 1};
    CHECK(verify_locating_dominating(make_complete(3), c).valid);
  }
  SUBCASE("one end of P3 leaves the far end unseen") {
    std::vector<int> c{0};
    auto r = verify_locating_dominating(make_path(3), c);
    CHECK(!r.valid);
    CHECK(r.unseen == std::vector<int>{2});
  }
  SUBCASE("the middle pair of P4") {
    std::vector<int> c{1, 2};
    auto r = verify_locating_dominating(make_path(4), c);
    CHECK(r.valid);
    CHECK(r.unseen.empty());
  }
}

// Single marks inside a 2xN grid block leave the pairs four and five
// positions later colliding, no matter how the border is filled.
TEST_CASE("single mark in a 2x4 grid block") {
  Grid grid = make_grid(2, 6);
  // block = vertices 2..9 (columns 2..5 in 1-indexed terms), border marked
  SUBCASE("mark on the block corner") {
    std::vector<int> s{2, 0, 1, 10, 11};
    auto r = verify_adjacency_set(grid.graph, s);
    CHECK(!r.valid);
    CHECK(std::find(r.undifferentiated.begin(), r.undifferentiated.end(), std::pair{6, 7}) !=
          r.undifferentiated.end());
  }
  SUBCASE("mark one column in") {
    std::vector<int> s{4, 0, 1, 10, 11};
    auto r = verify_adjacency_set(grid.graph, s);
    CHECK(!r.valid);
    CHECK(std::find(r.undifferentiated.begin(), r.undifferentiated.end(), std::pair{5, 6}) !=
          r.undifferentiated.end());
  }
}

TEST_CASE("cost") {
  CHECK(weights({0, 0, 0}).cost() == 0);
  CHECK(weights({1, 1, 0, 1}).cost() == 3);
  CHECK(weights({3, 0, 0, 0}).cost() == 3);
}

TEST_CASE("certificate properties on random graphs") {
  SplitMix64 rng(99);
  for (int t = 0; t < 40; ++t) {
    Graph g = corpus::random_graph(rng, 2, 9);
    std::vector<int> s;
    for (int v = 0; v < g.order(); ++v)
      if (rng.below(2)) s.push_back(v);

    auto adjacency = verify_adjacency_set(g, s);
    auto broadcast = verify_broadcast(g, Broadcast::indicator(g.order(), s));
    CHECK(adjacency.valid == broadcast.valid);
    CHECK(adjacency.undifferentiated == broadcast.undifferentiated);
    CHECK(adjacency.unseen == broadcast.unseen);

    auto ld = verify_locating_dominating(g, s);
    if (ld.valid) CHECK(adjacency.valid);

    if (broadcast.valid) {
      CHECK(broadcast.unseen.size() <= 1);
      // adding weight anywhere keeps a broadcast valid
      Broadcast f = Broadcast::indicator(g.order(), s);
      f.weights[rng.below(g.order())] += 1 + static_cast<int>(rng.below(3));
      CHECK(verify_broadcast(g, f).valid);
    }
  }
}
