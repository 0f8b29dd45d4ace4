#include "hypercc/clustering.hpp"

#include <algorithm>
#include <cstdint>

#include "hypercc/error.hpp"
#include "parallel.hpp"
#include "hypercc/summation.hpp"

namespace hypercc {
namespace {

void check_node(std::size_t n, NodeId v) {
  if (v >= n) {
    throw InvalidInput("node id " + std::to_string(v) + " out of range (N=" + std::to_string(n) + ")");
  }
}

// Sorted set difference a \ b.
void difference(Hyperedge a, Hyperedge b, std::vector<NodeId>& out) {
  out.clear();
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
}

// |{w in targets : w adjacent to every u in sources}|; 0 for empty sources.
std::size_t common_neighbours_within(const SimpleAdjacency& adj, const std::vector<NodeId>& sources,
                                     const std::vector<NodeId>& targets) {
  if (sources.empty()) return 0;
  std::size_t count = 0;
  for (NodeId w : targets) {
    if (adj.degree(w) < sources.size()) continue;
    bool all = true;
    for (NodeId u : sources) {
      if (!adj.adjacent(w, u)) {
        all = false;
        break;
      }
    }
    if (all) ++count;
  }
  return count;
}

struct Indices {
  WeightedProjection proj;
  PairCoverage cov;
  SimpleAdjacency adj;
};

Indices build_indices(const Hypergraph& h) {
  const auto table = detail::build_pair_table(h);
  return {WeightedProjection::from(table), PairCoverage::from(table), SimpleAdjacency::from(table)};
}

CCRecord evaluate(const Hypergraph& h, const Indices& idx, DefinitionSet defs, NodeId v) {
  CCRecord r;
  r.node = v;
  if (defs.has(Definition::kProposed)) r.proposed = cc_proposed(idx.proj, v);
  if (defs.has(Definition::kOpsahl)) r.opsahl = cc_opsahl(h, idx.cov, v);
  if (defs.has(Definition::kZhou)) r.zhou = cc_zhou(h, idx.adj, v);
  if (defs.has(Definition::kBaseline)) r.baseline = cc_baseline(idx.adj, v);
  return r;
}

void fill_averages(CCReport& report) {
  for (Definition d : report.definitions.members()) {
    const auto col = report.column(d);
    const double mean = col.empty() ? 0.0 : pairwise_sum(col) / static_cast<double>(col.size());
    switch (d) {
      case Definition::kProposed: report.averages.proposed = mean; break;
      case Definition::kOpsahl: report.averages.opsahl = mean; break;
      case Definition::kZhou: report.averages.zhou = mean; break;
      case Definition::kBaseline: report.averages.baseline = mean; break;
    }
  }
}

}  // namespace

std::string_view definition_name(Definition d) {
  switch (d) {
    case Definition::kProposed: return "proposed";
    case Definition::kOpsahl: return "opsahl";
    case Definition::kZhou: return "zhou";
    case Definition::kBaseline: return "baseline";
  }
  return "?";
}

DefinitionSet DefinitionSet::parse(std::string_view list) {
  unsigned bits = 0;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const auto comma = std::min(list.find(',', pos), list.size());
    const auto name = list.substr(pos, comma - pos);
    if (name == "all") {
      bits = kAll;
    } else {
      bool found = false;
      for (Definition d : kAllDefinitions) {
        if (name == definition_name(d)) {
          bits |= static_cast<unsigned>(d);
          found = true;
        }
      }
      if (!found) throw InvalidInput("unknown definition '" + std::string(name) + "'");
    }
    pos = comma + 1;
  }
  return DefinitionSet(bits);
}

std::vector<Definition> DefinitionSet::members() const {
  std::vector<Definition> out;
  for (Definition d : kAllDefinitions) {
    if (has(d)) out.push_back(d);
  }
  return out;
}

double CCRecord::value(Definition d) const {
  switch (d) {
    case Definition::kProposed: return proposed;
    case Definition::kOpsahl: return opsahl;
    case Definition::kZhou: return zhou;
    case Definition::kBaseline: return baseline;
  }
  return 0.0;
}

double CCAverages::value(Definition d) const {
  switch (d) {
    case Definition::kProposed: return proposed;
    case Definition::kOpsahl: return opsahl;
    case Definition::kZhou: return zhou;
    case Definition::kBaseline: return baseline;
  }
  return 0.0;
}

std::vector<double> CCReport::column(Definition d) const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.value(d));
  return out;
}

double cc_proposed(const WeightedProjection& proj, NodeId v) {
  check_node(proj.num_nodes(), v);
  const auto nbrs = proj.neighbors(v);
  const auto wv = proj.weights(v);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;

  // For each neighbour i (position a), walk the later neighbours j of v in
  // ascending order, accumulating W_vj for the potential weight and
  // W_vj * W_ij for the realised one. Both sums visit the same terms in the
  // same order, so realised <= potential holds in floating point too.
  std::vector<double> realised(k - 1);
  std::vector<double> potential(k - 1);
  for (std::size_t a = 0; a + 1 < k; ++a) {
    const NodeId i = nbrs[a];
    const auto ni = proj.neighbors(i);
    const auto wi = proj.weights(i);
    auto it = std::upper_bound(ni.begin(), ni.end(), i);
    double num = 0.0;
    double den = 0.0;
    for (std::size_t b = a + 1; b < k; ++b) {
      const NodeId j = nbrs[b];
      den += wv[b];
      while (it != ni.end() && *it < j) ++it;
      if (it != ni.end() && *it == j) {
        num += wv[b] * wi[static_cast<std::size_t>(it - ni.begin())];
      }
    }
    realised[a] = wv[a] * num;
    potential[a] = wv[a] * den;
  }
  const double den = pairwise_sum(potential);
  return den > 0.0 ? pairwise_sum(realised) / den : 0.0;
}

OpsahlPathCount opsahl_paths(const Hypergraph& h, const PairCoverage& cov, NodeId v) {
  h.check_node(v);
  OpsahlPathCount count;
  const auto inc = h.incident(v);
  for (std::size_t p = 0; p < inc.size(); ++p) {
    const EdgeId e1 = inc[p];
    const auto m1 = h.edge(e1);
    for (std::size_t q = p + 1; q < inc.size(); ++q) {
      const EdgeId e2 = inc[q];
      const auto m2 = h.edge(e2);
      for (NodeId u : m1) {
        if (u == v) continue;
        const bool u_in_e2 = h.edge_contains(e2, u);
        for (NodeId w : m2) {
          if (w == v || w == u) continue;
          ++count.total;
          std::uint32_t covering = cov.count(u, w);
          if (covering == 0) continue;
          // e1 already holds u, e2 already holds w.
          if (std::binary_search(m1.begin(), m1.end(), w)) --covering;
          if (u_in_e2) --covering;
          if (covering > 0) ++count.closed;
        }
      }
    }
  }
  return count;
}

double cc_opsahl(const Hypergraph& h, const PairCoverage& cov, NodeId v) {
  const auto paths = opsahl_paths(h, cov, v);
  return paths.total == 0 ? 0.0 : static_cast<double>(paths.closed) / static_cast<double>(paths.total);
}

double extra_overlap(const Hypergraph& h, const SimpleAdjacency& adj, EdgeId ei, EdgeId ej) {
  std::vector<NodeId> dij;
  std::vector<NodeId> dji;
  difference(h.edge(ei), h.edge(ej), dij);
  difference(h.edge(ej), h.edge(ei), dji);
  const std::size_t denom = dij.size() + dji.size();
  if (denom == 0) return 0.0;
  const std::size_t num = common_neighbours_within(adj, dij, dji) + common_neighbours_within(adj, dji, dij);
  return static_cast<double>(num) / static_cast<double>(denom);
}

double cc_zhou(const Hypergraph& h, const SimpleAdjacency& adj, NodeId v) {
  h.check_node(v);
  const auto inc = h.incident(v);
  const std::size_t k = inc.size();
  if (k < 2) return 0.0;
  std::vector<double> partial(k - 1);
  std::vector<NodeId> dij;
  std::vector<NodeId> dji;
  for (std::size_t p = 0; p + 1 < k; ++p) {
    double s = 0.0;
    for (std::size_t q = p + 1; q < k; ++q) {
      const auto ei = h.edge(inc[p]);
      const auto ej = h.edge(inc[q]);
      difference(ei, ej, dij);
      difference(ej, ei, dji);
      const std::size_t num =
          common_neighbours_within(adj, dij, dji) + common_neighbours_within(adj, dji, dij);
      if (num > 0) s += static_cast<double>(num) / static_cast<double>(dij.size() + dji.size());
    }
    partial[p] = s;
  }
  const double pairs = static_cast<double>(k) * static_cast<double>(k - 1) / 2.0;
  return pairwise_sum(partial) / pairs;
}

double cc_zhou(const Hypergraph& h, NodeId v) {
  h.check_node(v);
  return cc_zhou(h, SimpleAdjacency::from(h), v);
}

double cc_baseline(const SimpleAdjacency& adj, NodeId v) {
  check_node(adj.num_nodes(), v);
  const auto nbrs = adj.neighbors(v);
  const std::size_t k = nbrs.size();
  if (k < 2) return 0.0;
  std::uint64_t links = 0;
  for (std::size_t a = 0; a < k; ++a) {
    const auto nu = adj.neighbors(nbrs[a]);
    // Count neighbours of v after position a that are also adjacent to nbrs[a].
    auto it = std::upper_bound(nu.begin(), nu.end(), nbrs[a]);
    for (std::size_t b = a + 1; b < k && it != nu.end(); ++b) {
      while (it != nu.end() && *it < nbrs[b]) ++it;
      if (it != nu.end() && *it == nbrs[b]) ++links;
    }
  }
  return 2.0 * static_cast<double>(links) / (static_cast<double>(k) * static_cast<double>(k - 1));
}

CCReport cc_all(const Hypergraph& h, const CCOptions& opts) {
  const Indices idx = build_indices(h);
  CCReport report;
  report.definitions = opts.definitions;
  report.records.resize(h.num_nodes());
  const auto n = static_cast<std::int64_t>(h.num_nodes());
  const int threads = detail::resolve_threads(opts.threads);
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (std::int64_t v = 0; v < n; ++v) {
    report.records[v] = evaluate(h, idx, opts.definitions, static_cast<NodeId>(v));
  }
  fill_averages(report);
  return report;
}

CCReport cc_all_serial(const Hypergraph& h, const CCOptions& opts) {
  const Indices idx = build_indices(h);
  CCReport report;
  report.definitions = opts.definitions;
  report.records.reserve(h.num_nodes());
  for (NodeId v = 0; v < h.num_nodes(); ++v) report.records.push_back(evaluate(h, idx, opts.definitions, v));
  fill_averages(report);
  return report;
}

}  // namespace hypercc
