#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "hypercc/hypergraph.hpp"
#include "hypercc/testkit/random.hpp"

namespace hypercc::test {

inline Hypergraph make(const std::vector<std::vector<std::string>>& edges) {
  return Hypergraph::build(edges).graph;
}

// Seeded corpus shared by the property tests: n <= 8, m <= 12, sizes 2..4.
inline Hypergraph corpus_graph(std::uint64_t seed) {
  testkit::Rng pick(seed ^ 0x5eedULL);
  testkit::RandomHypergraphSpec spec;
  spec.n = static_cast<std::uint32_t>(pick.between(4, 8));
  spec.min_size = 2;
  spec.max_size = static_cast<std::uint32_t>(pick.between(2, 4));
  spec.m = static_cast<std::uint32_t>(pick.between(1, 12));
  std::uint32_t distinct = 0;  // sum of C(n, s) over the allowed sizes
  for (std::uint32_t s = spec.min_size; s <= spec.max_size; ++s) {
    std::uint32_t c = 1;
    for (std::uint32_t i = 0; i < s; ++i) c = c * (spec.n - i) / (i + 1);
    distinct += c;
  }
  spec.m = std::min(spec.m, distinct);
  spec.seed = seed;
  return testkit::random_hypergraph(spec);
}

}  // namespace hypercc::test
