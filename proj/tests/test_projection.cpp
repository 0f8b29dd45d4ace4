#include <sstream>

#include "doctest.h"
#include "hypercc/projection.hpp"
#include "hypercc/testkit/oracle.hpp"
#include "test_util.hpp"

using namespace hypercc;
using hypercc::test::make;

TEST_CASE("weights take the smallest covering hyperedge") {
  const auto h = make({{"u", "w"}, {"u", "w", "x"}});
  const auto p = weighted_projection(h);
  CHECK(p.weight(h.id_of("u"), h.id_of("w")) == 1.0);
  CHECK(p.weight(h.id_of("w"), h.id_of("u")) == 1.0);
  CHECK(p.weight(h.id_of("u"), h.id_of("x")) == 0.5);
}

TEST_CASE("single triple has weight one half everywhere") {
  const auto h = make({{"a", "b", "c"}});
  const auto p = weighted_projection(h);
  CHECK(p.num_pairs() == 3);
  for (NodeId u = 0; u < 3; ++u) {
    for (NodeId v = 0; v < 3; ++v) CHECK(p.weight(u, v) == (u == v ? 0.0 : 0.5));
  }
}

TEST_CASE("clique expansion") {
  SUBCASE("triple becomes a triangle") {
    const auto h = make({{"a", "b", "c"}});
    const auto a = clique_expansion(h);
    CHECK(a.adjacent(0, 1));
    CHECK(a.adjacent(1, 2));
    CHECK(a.adjacent(0, 2));
    CHECK_FALSE(a.adjacent(0, 0));
  }
  SUBCASE("wedge stays a path") {
    const auto h = make({{"a", "b"}, {"a", "c"}});
    const auto a = clique_expansion(h);
    CHECK(a.degree(h.id_of("a")) == 2);
    CHECK_FALSE(a.adjacent(h.id_of("b"), h.id_of("c")));
  }
}

TEST_CASE("pair coverage counts") {
  const auto vi = make({{"a", "b", "c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}});
  CHECK(pair_coverage(vi).count(vi.id_of("a"), vi.id_of("b")) == 2);
  const auto iii = make({{"a", "b", "c"}});
  const auto cov = pair_coverage(iii);
  CHECK(cov.count(iii.id_of("b"), iii.id_of("c")) == 1);
  CHECK(PairCoverage::edge_covers(iii, 0, 1, 2));
  CHECK(cov.count(0, 0) == 0);
}

TEST_CASE("size cap skips large hyperedges") {
  const auto h = make({{"a", "b"}, {"a", "c", "d", "e"}});
  const auto capped = clique_expansion(h, {.max_edge_size = 3});
  CHECK(capped.num_pairs() == 1);
  CHECK(clique_expansion(h).num_pairs() == 7);
}

TEST_CASE("projection matches brute force on random hypergraphs") {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    CAPTURE(seed);
    const auto h = test::corpus_graph(seed);
    const auto p = weighted_projection(h);
    const auto a = clique_expansion(h);
    const auto c = pair_coverage(h);
    bool all_pairs = true;
    for (EdgeId e = 0; e < h.num_edges(); ++e) all_pairs = all_pairs && h.edge_size(e) == 2;
    for (NodeId u = 0; u < h.num_nodes(); ++u) {
      for (NodeId v = 0; v < h.num_nodes(); ++v) {
        const double w = testkit::naive_weight(h, u, v);
        CHECK(p.weight(u, v) == w);
        CHECK(c.count(u, v) == (u == v ? 0 : testkit::naive_cover_count(h, u, v)));
        // support equality
        CHECK(a.adjacent(u, v) == (w > 0.0));
        CHECK((c.count(u, v) >= 1) == (w > 0.0));
        if (all_pairs && w > 0.0) CHECK(w == 1.0);
      }
    }
  }
}

TEST_CASE("adding a hyperedge never lowers a weight") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto h = test::corpus_graph(seed);
    auto edges = h.edge_lists();
    testkit::Rng rng(seed * 31);
    const auto size = static_cast<std::uint32_t>(rng.between(2, std::min<std::size_t>(4, h.num_nodes())));
    auto extra = rng.subset(static_cast<std::uint32_t>(h.num_nodes()), size);
    edges.emplace_back(extra.begin(), extra.end());
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    const auto bigger = Hypergraph::from_indexed(h.labels(), edges);
    const auto before = weighted_projection(h);
    const auto after = weighted_projection(bigger);
    for (NodeId u = 0; u < h.num_nodes(); ++u) {
      for (NodeId v : before.neighbors(u)) CHECK(after.weight(u, v) >= before.weight(u, v));
    }
  }
}

TEST_CASE("weights csv uses labels") {
  const auto h = make({{"x", "y", "z"}, {"x", "y"}});
  std::ostringstream out;
  write_weights_csv(out, h, weighted_projection(h));
  CHECK(out.str() == "u,v,weight\nx,y,1\nx,z,0.5\ny,z,0.5\n");
}
