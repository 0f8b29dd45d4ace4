#include "hypercc/testkit/random.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "hypercc/error.hpp"

namespace hypercc::testkit {
namespace {

// C(n, k) saturating at 2^63.
std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  constexpr std::uint64_t kCap = 1ULL << 63;
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c >= kCap) return kCap;
  }
  return static_cast<std::uint64_t>(c);
}

std::vector<std::string> numeric_labels(std::uint32_t n) {
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return labels;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::vector<std::uint32_t> Rng::subset(std::uint32_t n, std::uint32_t k) {
  std::vector<std::uint32_t> pool(n);
  std::iota(pool.begin(), pool.end(), 0U);
  for (std::uint32_t i = 0; i < k; ++i) {
    const auto j = i + static_cast<std::uint32_t>(below(n - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

Hypergraph random_hypergraph(const RandomHypergraphSpec& spec) {
  if (spec.min_size < 2 || spec.min_size > spec.max_size || spec.max_size > spec.n) {
    throw InvalidInput("random hypergraph needs 2 <= min_size <= max_size <= n");
  }
  std::uint64_t possible = 0;
  for (std::uint32_t s = spec.min_size; s <= spec.max_size; ++s) possible += choose(spec.n, s);
  if (spec.m > possible) throw InvalidInput("random hypergraph: m exceeds the number of distinct edges");

  Rng rng(spec.seed);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::vector<NodeId>> edges;
  edges.reserve(spec.m);
  const std::uint64_t budget = 1000 + 64ULL * spec.m;
  std::uint64_t draws = 0;
  while (edges.size() < spec.m) {
    if (++draws > budget) throw InvalidInput("random hypergraph: retry budget exhausted");
    const auto size = static_cast<std::uint32_t>(rng.between(spec.min_size, spec.max_size));
    auto members = rng.subset(spec.n, size);
    if (seen.insert(members).second) edges.emplace_back(members.begin(), members.end());
  }
  return Hypergraph::from_indexed(numeric_labels(spec.n), std::move(edges));
}

RandomSimpleGraph random_simple_graph(std::uint32_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  RandomSimpleGraph out;
  std::vector<std::vector<NodeId>> edges;
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (rng.unit() < p) {
        out.pairs.emplace_back(u, v);
        edges.push_back({u, v});
      }
    }
  }
  out.graph = Hypergraph::from_indexed(numeric_labels(n), std::move(edges));
  return out;
}

}  // namespace hypercc::testkit
