#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "hypercc/hypergraph.hpp"

namespace hypercc::testkit {

// Draws from std::mt19937_64 (bit-exact across standard libraries); bounded
// integers use rejection sampling, never std::uniform_int_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  // Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // k distinct values from [0, n), sorted ascending (partial Fisher-Yates).
  std::vector<std::uint32_t> subset(std::uint32_t n, std::uint32_t k);

 private:
  std::mt19937_64 engine_;
};

struct RandomHypergraphSpec {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t min_size = 2;
  std::uint32_t max_size = 2;
  std::uint64_t seed = 0;
};

// Samples each hyperedge size uniformly from [min_size, max_size], then a
// uniform node subset of that size, redrawing duplicates within a bounded
// budget. Node i is labelled std::to_string(i); all n nodes exist even when
// some are isolated. Throws InvalidInput for an invalid or infeasible spec.
Hypergraph random_hypergraph(const RandomHypergraphSpec& spec);

// G(n, p) simple graph as size-2 hyperedges plus the raw pair list.
struct RandomSimpleGraph {
  Hypergraph graph;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
};
RandomSimpleGraph random_simple_graph(std::uint32_t n, double p, std::uint64_t seed);

}  // namespace hypercc::testkit
