#include <algorithm>
#include <map>

#include "doctest.h"
#include "hypercc/error.hpp"
#include "hypercc/hypergraph.hpp"
#include "test_util.hpp"

using namespace hypercc;
using hypercc::test::make;

namespace {

// Hyperedges as sorted label lists, sorted; identifies a hypergraph up to ids.
std::vector<std::vector<std::string>> canonical(const Hypergraph& h) {
  std::vector<std::vector<std::string>> out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<std::string> labels;
    for (NodeId v : h.edge(e)) labels.push_back(h.label(v));
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("build collapses identical hyperedges") {
  const auto r = Hypergraph::build({{"a", "b"}, {"b", "a"}});
  CHECK(r.graph.num_edges() == 1);
  CHECK(r.duplicates_removed == 1);
  CHECK(r.graph.num_nodes() == 2);
}

TEST_CASE("single hyperedge statistics") {
  const auto h = make({{"a", "b", "c"}});
  const auto s = summary_stats(h);
  CHECK(s.nodes == 3);
  CHECK(s.edges == 1);
  CHECK(s.bipartite_edges == 3);
  CHECK(s.avg_degree == 1.0);
  CHECK(s.avg_edge_size == 3.0);
}

TEST_CASE("build rejects empty input and empty edges") {
  CHECK_THROWS_WITH_AS(Hypergraph::build({}), "empty hypergraph", InvalidInput);
  CHECK_THROWS_AS(Hypergraph::build({{"a"}, {}}), InvalidInput);
}

TEST_CASE("build collapses repeated labels inside an edge") {
  const auto h = make({{"a", "a", "b"}});
  CHECK(h.edge_size(0) == 2);
}

TEST_CASE("ids follow natural label order") {
  const auto h = make({{"10", "9", "x"}, {"2", "b"}});
  CHECK(h.labels() == std::vector<std::string>{"2", "9", "10", "b", "x"});
  CHECK(h.id_of("10") == 2);
  CHECK_THROWS_AS(h.id_of("nope"), InvalidInput);
}

TEST_CASE("natural_label_less") {
  CHECK(natural_label_less("9", "10"));
  CHECK_FALSE(natural_label_less("10", "9"));
  CHECK(natural_label_less("10", "a"));
  CHECK(natural_label_less("a", "b"));
  CHECK(natural_label_less("007", "7"));  // equal value, tie broken by text
}

TEST_CASE("singleton hyperedges are kept") {
  const auto h = make({{"a"}, {"a", "b"}});
  CHECK(h.num_edges() == 2);
  CHECK(neighbors(h, h.id_of("a")) == std::vector<NodeId>{h.id_of("b")});
}

TEST_CASE("neighbors") {
  SUBCASE("all co-members of a triple") {
    const auto h = make({{"a", "b", "c"}});
    CHECK(neighbors(h, h.id_of("a")) == std::vector<NodeId>{h.id_of("b"), h.id_of("c")});
  }
  SUBCASE("single pair") {
    const auto h = make({{"a", "b"}});
    CHECK(neighbors(h, h.id_of("a")) == std::vector<NodeId>{h.id_of("b")});
  }
  SUBCASE("wedge leaf") {
    const auto h = make({{"a", "b"}, {"a", "c"}});
    CHECK(neighbors(h, h.id_of("b")) == std::vector<NodeId>{h.id_of("a")});
  }
  SUBCASE("invalid id") {
    const auto h = make({{"a", "b"}});
    CHECK_THROWS_AS(neighbors(h, 7), InvalidInput);
  }
}

TEST_CASE("largest connected component") {
  SUBCASE("connected input is unchanged") {
    const auto h = make({{"a", "b", "c"}, {"c", "d"}});
    const auto l = largest_connected_component(h);
    CHECK(canonical(l) == canonical(h));
    CHECK(l.num_nodes() == h.num_nodes());
  }
  SUBCASE("keeps the bigger component") {
    const auto h = make({{"a", "b"}, {"b", "c"}, {"x", "y"}});
    const auto l = largest_connected_component(h);
    CHECK(l.num_nodes() == 3);
    CHECK(l.num_edges() == 2);
    CHECK(l.labels() == std::vector<std::string>{"a", "b", "c"});
  }
  SUBCASE("ties go to the smallest minimum label") {
    const auto h = make({{"b", "c"}, {"d", "a"}});
    const auto l = largest_connected_component(h);
    CHECK(l.labels() == std::vector<std::string>{"a", "d"});
  }
  SUBCASE("numeric ties compare numerically") {
    const auto h = make({{"10", "11"}, {"9", "12"}});
    const auto l = largest_connected_component(h);
    CHECK(l.labels() == std::vector<std::string>{"9", "12"});
  }
}

TEST_CASE("from_indexed validates its input") {
  CHECK_THROWS_AS(Hypergraph::from_indexed({"a", "b"}, {{0, 2}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph::from_indexed({"a", "b"}, {{0, 1}, {1, 0}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph::from_indexed({"a", "b"}, {{0, 0}}), InvalidInput);
  CHECK_THROWS_AS(Hypergraph::from_indexed({"a", "a"}, {{0, 1}}), InvalidInput);
}

TEST_CASE("structural invariants on random hypergraphs") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto h = test::corpus_graph(seed);
    CAPTURE(seed);

    // incidence is the inverse of membership and both sides count the incidences
    std::size_t sum_inc = 0;
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      sum_inc += h.degree(v);
      for (EdgeId e : h.incident(v)) CHECK(h.edge_contains(e, v));
    }
    std::size_t sum_sizes = 0;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      sum_sizes += h.edge_size(e);
      const auto m = h.edge(e);
      CHECK(std::is_sorted(m.begin(), m.end()));
      CHECK(std::adjacent_find(m.begin(), m.end()) == m.end());
      for (NodeId v : m) {
        const auto inc = h.incident(v);
        CHECK(std::binary_search(inc.begin(), inc.end(), e));
      }
    }
    CHECK(sum_inc == sum_sizes);
    CHECK(sum_sizes == h.num_incidences());

    const auto s = summary_stats(h);
    CHECK(s.avg_degree * static_cast<double>(s.nodes) == doctest::Approx(static_cast<double>(s.bipartite_edges)));
    CHECK(s.avg_edge_size * static_cast<double>(s.edges) ==
          doctest::Approx(static_cast<double>(s.bipartite_edges)));

    // neighbour symmetry
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      for (NodeId u : neighbors(h, v)) {
        const auto back = neighbors(h, u);
        CHECK(std::binary_search(back.begin(), back.end(), v));
      }
    }

    // LCC idempotence
    const auto l1 = largest_connected_component(h);
    const auto l2 = largest_connected_component(l1);
    CHECK(canonical(l1) == canonical(l2));
    CHECK(l1.labels() == l2.labels());
  }
}

TEST_CASE("build is invariant under edge order and relabelling") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto h = test::corpus_graph(seed);
    std::vector<std::vector<std::string>> raw;
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      std::vector<std::string> labels;
      for (NodeId v : h.edge(e)) labels.push_back(h.label(v));
      raw.push_back(std::move(labels));
    }
    auto shuffled = raw;
    testkit::Rng rng(seed);
    for (std::size_t i = shuffled.size(); i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    CHECK(canonical(make(raw)) == canonical(make(shuffled)));

    // relabel x -> "n" + x, a bijection
    auto renamed = raw;
    for (auto& e : renamed) {
      for (auto& l : e) l = "n" + l;
    }
    auto r = make(renamed);
    auto c = canonical(r);
    for (auto& e : c) {
      for (auto& l : e) l = l.substr(1);
      std::sort(e.begin(), e.end());
    }
    std::sort(c.begin(), c.end());
    CHECK(c == canonical(make(raw)));
  }
}
