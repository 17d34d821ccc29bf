#include <stdexcept>

#include "doctest.h"

#include "corpus.hpp"
#include "naive.hpp"
#include "resdim/bounds.hpp"
#include "resdim/families.hpp"
#include "resdim/solver.hpp"

using namespace resdim;

TEST_CASE("metric dimension") {
  auto p5 = solve_metric_dimension(make_path(5));
  CHECK(p5.value == 1);
  CHECK(p5.witness_set() == std::vector<int>{0});

  CHECK(naive::dim_value(make_complete(4)) == 3);
  CHECK(solve_metric_dimension(make_complete(4)).value == 3);

  CHECK(naive::dim_value(make_cycle(6)) == 2);
  CHECK(solve_metric_dimension(make_cycle(6)).value == 2);
}

TEST_CASE("adjacency dimension") {
  CHECK(naive::adim_value(make_cycle(4)) == 2);
  CHECK(solve_adjacency_dimension(make_cycle(4)).value == 2);

  auto grid = solve_adjacency_dimension(make_grid(2, 4).graph);
  CHECK(grid.value == 3);  // inside [ceil(11/4)-1, ceil(11/4)]
  CHECK(grid.value == naive::adim_value(make_grid(2, 4).graph));

  Graph star(4, true);
  star.add_edge(0, 1);
  star.add_edge(0, 2);
  star.add_edge(0, 3);
  CHECK(naive::adim_value(star) == 3);
  CHECK(solve_adjacency_dimension(star).value == 3);
}

TEST_CASE("locating-dominating number") {
  CHECK(naive::ld_value(make_path(4)) == 2);
  CHECK(solve_locating_dominating(make_path(4)).value == 2);
  CHECK(solve_locating_dominating(make_complete(3)).value == 2);
  CHECK(solve_locating_dominating(make_grid(2, 4).graph).value >= 3);
}

TEST_CASE("broadcast dimension") {
  CHECK(solve_broadcast_dimension(make_complete(4)).value == 3);

  auto p5 = solve_broadcast_dimension(make_path(5));
  CHECK(p5.value == 2);
  CHECK(p5.value == naive::bdim_value(make_path(5)));
  CHECK(p5.witness.weights == std::vector<int>{0, 0, 1, 0, 1});

  Graph dpath(4, true);
  dpath.add_edge(0, 1);
  dpath.add_edge(1, 2);
  dpath.add_edge(2, 3);
  CHECK(naive::bdim_value(dpath) == 2);
  CHECK(solve_broadcast_dimension(dpath).value == 2);
}

TEST_CASE("single vertex and empty certificates") {
  Graph one(1, false);
  CHECK(solve_adjacency_dimension(one).value == 0);
  CHECK(solve_metric_dimension(one).value == 0);
  CHECK(solve_broadcast_dimension(one).value == 0);
  CHECK(solve_locating_dominating(one).value == 1);
}

TEST_CASE("solver matches the naive oracle on random graphs") {
  SplitMix64 rng(21);
  for (int t = 0; t < 12; ++t) {
    Graph g = corpus::random_graph(rng, 2, 8);
    CAPTURE(t);
    CHECK(solve_metric_dimension(g).value == naive::dim_value(g));
    CHECK(solve_adjacency_dimension(g).value == naive::adim_value(g));
    CHECK(solve_locating_dominating(g).value == naive::ld_value(g));
    CHECK(solve_broadcast_dimension(g).value == naive::bdim_value(g));
  }
}

TEST_CASE("witnesses verify and solves are deterministic") {
  SplitMix64 rng(22);
  for (int t = 0; t < 8; ++t) {
    Graph g = corpus::random_graph(rng, 2, 9);
    auto a1 = solve_adjacency_dimension(g);
    auto a2 = solve_adjacency_dimension(g);
    CHECK(a1.witness.weights == a2.witness.weights);
    CHECK(verify_adjacency_set(g, a1.witness_set()).valid);

    auto b1 = solve_broadcast_dimension(g);
    auto b2 = solve_broadcast_dimension(g);
    CHECK(b1.witness.weights == b2.witness.weights);
    CHECK(verify_broadcast(g, b1.witness).valid);

    auto d = solve_metric_dimension(g);
    auto dm = all_pairs_distances(g);
    for (int x = 0; x < g.order(); ++x)
      for (int y = x + 1; y < g.order(); ++y) {
        bool ok = false;
        for (int z : d.witness_set())
          if (dm.at(z, x) != dm.at(z, y)) ok = true;
        CHECK(ok);
      }

    auto l = solve_locating_dominating(g);
    CHECK(verify_locating_dominating(g, l.witness_set()).valid);
  }
}

TEST_CASE("sandwich and degree bounds hold on random graphs") {
  SplitMix64 rng(23);
  for (int t = 0; t < 15; ++t) {
    Graph g = corpus::random_graph(rng, 2, 9);
    auto s = check_sandwich(g);  // throws on violation
    CHECK(s.bdim <= s.adim);
    CHECK(s.adim <= g.order());
    CHECK(s.adim >= maxdeg_lower(g.order(), max_degree(g)));
  }
}

TEST_CASE("feasibility flag stays true even on directed graphs") {
  SplitMix64 rng(24);
  for (int t = 0; t < 10; ++t) {
    const int n = 2 + static_cast<int>(rng.below(6));
    Graph g(n, true);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && rng.below(100) < 40 && !g.has_edge(u, v)) g.add_edge(u, v);
    CHECK(solve_adjacency_dimension(g).feasible);
    CHECK(solve_broadcast_dimension(g).feasible);
  }
}

TEST_CASE("size limit and cost cap") {
  CHECK_THROWS_AS(solve_adjacency_dimension(make_path(27)), SizeLimitError);
  SolveOptions wide;
  wide.max_vertices = 30;
  CHECK(solve_metric_dimension(make_path(27), wide).value == 1);

  SolveOptions capped;
  capped.cost_cap = 2;
  auto r = solve_broadcast_dimension(make_complete(4), capped);
  CHECK(!r.feasible);
}
