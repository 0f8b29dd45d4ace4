#include "hypercc/motifs.hpp"

#include <algorithm>

#include "hypercc/clustering.hpp"
#include "hypercc/error.hpp"
#include "hypercc/projection.hpp"
#include "parallel.hpp"

namespace hypercc {
namespace {

using Triple = std::array<NodeId, 3>;

Triple sorted_triple(NodeId a, NodeId b, NodeId c) {
  Triple t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

std::uint64_t pair_key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

// Number of hyperedges holding all of u, v, w: intersection of incidence lists.
std::size_t edges_containing(const Hypergraph& h, NodeId u, NodeId v, NodeId w) {
  auto a = h.incident(u);
  auto b = h.incident(v);
  auto c = h.incident(w);
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::size_t count = 0;
  while (i < a.size() && j < b.size() && k < c.size()) {
    const EdgeId m = std::max({a[i], b[j], c[k]});
    if (a[i] < m) ++i;
    else if (b[j] < m) ++j;
    else if (c[k] < m) ++k;
    else {
      ++count;
      ++i;
      ++j;
      ++k;
    }
  }
  return count;
}

// Size-2 and size-3 hyperedges as sorted lookup tables.
struct SmallEdges {
  std::vector<std::uint64_t> pairs;
  std::vector<Triple> triples;

  explicit SmallEdges(const Hypergraph& h) {
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
      const auto m = h.edge(e);
      if (m.size() == 2) pairs.push_back(pair_key(m[0], m[1]));
      else if (m.size() == 3) triples.push_back({m[0], m[1], m[2]});
    }
    std::sort(pairs.begin(), pairs.end());
    std::sort(triples.begin(), triples.end());
  }

  bool has_pair(NodeId u, NodeId v) const {
    return std::binary_search(pairs.begin(), pairs.end(), pair_key(u, v));
  }
  bool has_triple(const Triple& t) const { return std::binary_search(triples.begin(), triples.end(), t); }
};

// Pattern classification of one candidate triple under each rule.
class SubsetClassifier {
 public:
  explicit SubsetClassifier(const Hypergraph& h) : small_(h) {}
  std::optional<MotifClass> operator()(NodeId u, NodeId v, NodeId w) const {
    const bool triple = small_.has_triple(sorted_triple(u, v, w));
    const int pairs = small_.has_pair(u, v) + small_.has_pair(v, w) + small_.has_pair(u, w);
    return classify_pattern(triple, pairs);
  }

 private:
  SmallEdges small_;
};

class IntersectClassifier {
 public:
  IntersectClassifier(const Hypergraph& h, const PairCoverage& cov) : h_(h), cov_(cov) {}
  std::optional<MotifClass> operator()(NodeId u, NodeId v, NodeId w) const {
    const std::size_t all = edges_containing(h_, u, v, w);
    // A pair survives the intersection when some hyperedge holds it but not the third node.
    const int pairs = (cov_.count(u, v) > all) + (cov_.count(v, w) > all) + (cov_.count(u, w) > all);
    return classify_pattern(all > 0, pairs);
  }

 private:
  const Hypergraph& h_;
  const PairCoverage& cov_;
};

// Visits every triple with at least two adjacent pairs in `cand` exactly once:
// open wedges at their unique centre, closed triangles at their smallest node.
template <typename Classifier>
void census_centre(const SimpleAdjacency& cand, const Classifier& classify, NodeId v,
                   std::array<std::uint64_t, 6>& counts) {
  const auto nbrs = cand.neighbors(v);
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    const NodeId u = nbrs[a];
    const auto nu = cand.neighbors(u);
    auto it = nu.begin();
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      const NodeId w = nbrs[b];
      it = std::lower_bound(it, nu.end(), w);
      const bool closed = it != nu.end() && *it == w;
      if (closed && u < v) continue;
      if (const auto m = classify(u, v, w)) ++counts[static_cast<std::size_t>(*m)];
    }
  }
}

template <typename Classifier>
MotifCensus run_census(const Hypergraph& h, const SimpleAdjacency& cand, const Classifier& classify,
                       bool serial, int threads) {
  MotifCensus census;
  const auto n = static_cast<std::int64_t>(h.num_nodes());
  if (serial) {
    for (std::int64_t v = 0; v < n; ++v) census_centre(cand, classify, static_cast<NodeId>(v), census.counts);
  } else {
#pragma omp parallel num_threads(detail::resolve_threads(threads))
    {
      std::array<std::uint64_t, 6> local{};
#pragma omp for schedule(dynamic, 8) nowait
      for (std::int64_t v = 0; v < n; ++v) census_centre(cand, classify, static_cast<NodeId>(v), local);
#pragma omp critical(hypercc_census_merge)
      for (std::size_t c = 0; c < local.size(); ++c) census.counts[c] += local[c];
    }
  }
  for (auto c : census.counts) census.triples_examined += c;
  return census;
}

MotifCensus census_impl(const Hypergraph& h, InductionRule rule, bool serial, int threads) {
  if (rule == InductionRule::kSubset) {
    const auto cand = SimpleAdjacency::from(h, ProjectionOptions{.max_edge_size = 3});
    return run_census(h, cand, SubsetClassifier(h), serial, threads);
  }
  const auto table = detail::build_pair_table(h);
  const auto cand = SimpleAdjacency::from(table);
  const auto cov = PairCoverage::from(table);
  return run_census(h, cand, IntersectClassifier(h, cov), serial, threads);
}

}  // namespace

std::string_view motif_name(MotifClass m) {
  static constexpr std::array<std::string_view, 6> kNames = {"I", "II", "III", "IV", "V", "VI"};
  return kNames[static_cast<std::size_t>(m)];
}

std::string_view induction_name(InductionRule r) {
  return r == InductionRule::kSubset ? "subset" : "intersect";
}

InductionRule parse_induction(std::string_view name) {
  if (name == "subset") return InductionRule::kSubset;
  if (name == "intersect") return InductionRule::kIntersect;
  throw InvalidInput("unknown motif induction rule '" + std::string(name) + "'");
}

std::optional<MotifClass> classify_pattern(bool has_triple, int pair_edges) {
  if (has_triple) {
    switch (pair_edges) {
      case 0: return MotifClass::kIII;
      case 1: return MotifClass::kIV;
      case 2: return MotifClass::kV;
      case 3: return MotifClass::kVI;
      default: break;
    }
    throw InvalidInput("a triple holds at most three pair edges");
  }
  if (pair_edges == 2) return MotifClass::kI;
  if (pair_edges == 3) return MotifClass::kII;
  return std::nullopt;
}

std::optional<MotifClass> classify_triple(const Hypergraph& h, std::span<const NodeId> triple,
                                          InductionRule rule) {
  if (triple.size() != 3) throw InvalidInput("a motif triple needs exactly three nodes");
  for (NodeId v : triple) h.check_node(v);
  const Triple t = sorted_triple(triple[0], triple[1], triple[2]);
  if (t[0] == t[1] || t[1] == t[2]) throw InvalidInput("motif triple nodes must be distinct");

  bool has_triple = false;
  std::array<bool, 3> pair{};  // {t0,t1}, {t1,t2}, {t0,t2}
  std::vector<EdgeId> touching;
  for (NodeId v : t) {
    for (EdgeId e : h.incident(v)) touching.push_back(e);
  }
  std::sort(touching.begin(), touching.end());
  touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
  for (EdgeId e : touching) {
    const bool in0 = h.edge_contains(e, t[0]);
    const bool in1 = h.edge_contains(e, t[1]);
    const bool in2 = h.edge_contains(e, t[2]);
    const std::size_t inside = static_cast<std::size_t>(in0) + in1 + in2;
    if (rule == InductionRule::kSubset && h.edge_size(e) != inside) continue;
    if (inside == 3) has_triple = true;
    else if (inside == 2) pair[in0 && in1 ? 0 : in1 && in2 ? 1 : 2] = true;
  }
  return classify_pattern(has_triple, pair[0] + pair[1] + pair[2]);
}

MotifCensus census_order3(const Hypergraph& h, InductionRule rule, int threads) {
  return census_impl(h, rule, false, threads);
}

MotifCensus census_order3_serial(const Hypergraph& h, InductionRule rule) {
  return census_impl(h, rule, true, 1);
}

std::vector<MotifFixture> canonical_fixtures() {
  using Edges = std::vector<std::vector<std::string>>;
  struct Spec {
    RootedPattern pattern;
    Edges edges;
    const char* root;
  };
  const std::vector<Spec> specs = {
      {{MotifClass::kI, RootedMotif::kI, "I"}, {{"a", "b"}, {"a", "c"}}, "a"},
      {{MotifClass::kII, RootedMotif::kII, "II"}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}, "a"},
      {{MotifClass::kIII, RootedMotif::kIII, "III"}, {{"a", "b", "c"}}, "a"},
      {{MotifClass::kIV, RootedMotif::kIVa, "IV-a"}, {{"a", "b", "c"}, {"a", "b"}}, "a"},
      {{MotifClass::kIV, RootedMotif::kIVb, "IV-b"}, {{"a", "b", "c"}, {"a", "b"}}, "c"},
      {{MotifClass::kV, RootedMotif::kV, "V"}, {{"a", "b", "c"}, {"a", "b"}, {"a", "c"}}, "a"},
      {{MotifClass::kVI, RootedMotif::kVI, "VI"},
       {{"a", "b", "c"}, {"a", "b"}, {"a", "c"}, {"b", "c"}},
       "a"},
  };
  std::vector<MotifFixture> out;
  out.reserve(specs.size());
  for (const auto& s : specs) {
    auto g = Hypergraph::build(s.edges).graph;
    const NodeId root = g.id_of(s.root);
    out.push_back({s.pattern, std::move(g), root});
  }
  return out;
}

Table1 table1_matrix() {
  Table1 t;
  const auto fixtures = canonical_fixtures();
  for (std::size_t c = 0; c < fixtures.size(); ++c) {
    const auto& f = fixtures[c];
    t.columns[c] = f.pattern.name;
    const auto table = detail::build_pair_table(f.graph);
    const auto proj = WeightedProjection::from(table);
    const auto cov = PairCoverage::from(table);
    const auto adj = SimpleAdjacency::from(table);
    t.values[0][c] = cc_opsahl(f.graph, cov, f.root);
    t.values[1][c] = cc_zhou(f.graph, adj, f.root);
    t.values[2][c] = cc_baseline(adj, f.root);
    t.values[3][c] = cc_proposed(proj, f.root);
  }
  return t;
}

}  // namespace hypercc
