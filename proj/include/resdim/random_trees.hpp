#pragma once

#include <cstdint>

#include "resdim/graph.hpp"

namespace resdim {

// Deterministic across platforms; std::uniform_int_distribution is not.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound)
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

// Uniform-parent random out-directed tree: order drawn from
// [2, max_vertices], each vertex v >= 1 attached below a uniformly chosen
// earlier vertex, edges parent -> child.
Graph random_out_tree(SplitMix64& rng, int max_vertices);

}  // namespace resdim
