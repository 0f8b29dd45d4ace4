#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hypercc/error.hpp"
#include "hypercc/ingest.hpp"
#include "test_util.hpp"

using namespace hypercc;
namespace fs = std::filesystem;

namespace {

RawEdgeList benson(const std::string& nverts, const std::string& simplices) {
  std::istringstream a(nverts), b(simplices);
  return parse_benson(a, b);
}

RawEdgeList edgelist(const std::string& text) {
  std::istringstream in(text);
  return parse_edgelist(in);
}

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("hypercc_ingest_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("benson streams") {
  SUBCASE("sizes split the member stream") {
    const auto raw = benson("2\n3\n", "1\n2\n1\n2\n3\n");
    CHECK(raw.edges == std::vector<std::vector<std::string>>{{"1", "2"}, {"1", "2", "3"}});
  }
  SUBCASE("short member stream") {
    CHECK_THROWS_AS(benson("2\n", "1\n"), ParseError);
    try {
      benson("2\n", "1\n");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("shorter than declared") != std::string::npos);
    }
  }
  SUBCASE("long member stream") { CHECK_THROWS_AS(benson("1\n", "1\n2\n"), ParseError); }
  SUBCASE("non-integer member") { CHECK_THROWS_AS(benson("2\n", "1\nx\n"), ParseError); }
  SUBCASE("bad size line") {
    CHECK_THROWS_AS(benson("0\n", ""), ParseError);
    CHECK_THROWS_AS(benson("2 3\n", "1\n2\n"), ParseError);
    CHECK_THROWS_AS(benson("-1\n", "1\n"), ParseError);
    CHECK_THROWS_AS(benson("99999999999999999999999\n", "1\n"), ParseError);
  }
  SUBCASE("members may share lines and blank lines are skipped") {
    const auto raw = benson("2\n\n1\n", "4 5\n\n6\n");
    CHECK(raw.edges == std::vector<std::vector<std::string>>{{"4", "5"}, {"6"}});
  }
}

TEST_CASE("edge lists") {
  const auto raw = edgelist("# header\na b c\n\n d,e\tf  # trailing\nx x y\n");
  CHECK(raw.edges == std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"d", "e", "f"}, {"x", "y"}});
  CHECK(raw.warnings.size() == 1);
  CHECK(edgelist("a b\r\n").edges == std::vector<std::vector<std::string>>{{"a", "b"}});
}

TEST_CASE("input format names") {
  CHECK(parse_input_format("benson") == InputFormat::kBenson);
  CHECK(parse_input_format("edgelist") == InputFormat::kEdgeList);
  CHECK_THROWS_AS(parse_input_format("csv"), InvalidInput);
}

TEST_CASE("preprocess example") {
  RawEdgeList raw;
  raw.edges = {{"a", "b"}, {"a", "b"}, {"c"}};
  const auto p = preprocess(raw, {.drop_singletons = true, .take_lcc = true});
  CHECK(p.graph.num_edges() == 1);
  CHECK(p.provenance.duplicates_removed == 1);
  CHECK(p.provenance.singletons_removed == 1);
  CHECK(p.provenance.balanced());

  const auto keep = preprocess(raw, {.drop_singletons = false, .take_lcc = true});
  CHECK(keep.graph.num_edges() == 1);
  CHECK(keep.provenance.edges_dropped_by_lcc == 1);
  CHECK(keep.provenance.nodes_dropped_by_lcc == 1);

  const auto all = preprocess(raw, {.drop_singletons = false, .take_lcc = false});
  CHECK(all.graph.num_edges() == 2);
  CHECK(all.graph.num_nodes() == 3);
}

TEST_CASE("preprocess errors") {
  RawEdgeList raw;
  raw.edges = {{"a"}, {"b"}};
  CHECK_THROWS_WITH_AS(preprocess(raw, {.drop_singletons = true}), "no nodes after preprocessing", InvalidInput);
  RawEdgeList none;
  CHECK_THROWS_AS(preprocess(none), InvalidInput);
}

TEST_CASE("preprocess is idempotent and its provenance balances") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    CAPTURE(seed);
    auto raw = to_raw(test::corpus_graph(seed));
    // add noise: a repeat, a singleton, a detached pair
    raw.edges.push_back(raw.edges.front());
    raw.edges.push_back({"s"});
    raw.edges.push_back({"p", "q"});
    for (bool drop : {false, true}) {
      const PreprocessOptions opts{.drop_singletons = drop, .take_lcc = true};
      const auto once = preprocess(raw, opts);
      CHECK(once.provenance.balanced());
      CHECK(once.provenance.duplicates_removed >= 1);
      const auto twice = preprocess(to_raw(once.graph), opts);
      CHECK(twice.graph.edge_lists() == once.graph.edge_lists());
      CHECK(twice.graph.labels() == once.graph.labels());
      CHECK(twice.provenance.duplicates_removed == 0);
      CHECK(twice.provenance.edges_dropped_by_lcc == 0);
    }
  }
}

TEST_CASE("benson round trip") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto h = test::corpus_graph(seed);
    std::ostringstream nv, sx;
    write_benson(nv, sx, h);
    const auto back = preprocess(benson(nv.str(), sx.str()), {.take_lcc = false});
    // isolated nodes do not survive serialisation
    std::vector<std::string> used;
    for (NodeId v = 0; v < h.num_nodes(); ++v) {
      if (h.degree(v) > 0) used.push_back(h.label(v));
    }
    CHECK(back.graph.labels() == used);
    CHECK(back.graph.num_edges() == h.num_edges());
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      std::vector<std::string> a, b;
      for (NodeId v : h.edge(e)) a.push_back(h.label(v));
      for (NodeId v : back.graph.edge(e)) b.push_back(back.graph.label(v));
      CHECK(a == b);
    }

    std::ostringstream el;
    write_edgelist(el, h);
    CHECK(edgelist(el.str()).edges == to_raw(h).edges);
  }
}

TEST_CASE("benson path resolution and file reading") {
  const auto dir = scratch_dir("paths") / "toy";
  fs::create_directories(dir);
  std::ofstream(dir / "toy-nverts.txt") << "2\n3\n";
  std::ofstream(dir / "toy-simplices.txt") << "1\n2\n1\n2\n3\n";
  const auto expect = std::make_pair(dir / "toy-nverts.txt", dir / "toy-simplices.txt");
  CHECK(resolve_benson_paths(dir) == expect);
  CHECK(resolve_benson_paths(dir / "toy") == expect);
  CHECK(resolve_benson_paths(dir / "toy-nverts.txt") == expect);
  const auto raw = read_input(dir, InputFormat::kBenson);
  CHECK(raw.edges.size() == 2);
  CHECK(raw.paths.size() == 2);
  CHECK_THROWS_AS(read_input(dir / "missing", InputFormat::kBenson), ParseError);
  CHECK_THROWS_AS(read_input(dir / "missing.txt", InputFormat::kEdgeList), ParseError);
}

TEST_CASE("restrict_edge_size") {
  const auto h = test::make({{"a", "b"}, {"a", "b", "c", "d"}, {"c", "d", "e"}});
  CHECK(restrict_edge_size(h, 3).num_edges() == 2);
  CHECK(restrict_edge_size(h, 3).num_nodes() == h.num_nodes());
  CHECK(restrict_edge_size(h, 0).num_edges() == 3);
}
