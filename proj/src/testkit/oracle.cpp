#include "hypercc/testkit/oracle.hpp"

#include <algorithm>
#include <iterator>
#include <set>

#include "hypercc/error.hpp"

namespace hypercc::testkit {
namespace {

using NodeSet = std::set<NodeId>;

NodeSet members(const Hypergraph& h, EdgeId e) {
  const auto m = h.edge(e);
  return {m.begin(), m.end()};
}

bool holds(const NodeSet& s, NodeId v) { return s.count(v) != 0; }

void check(const Hypergraph& h, NodeId v) {
  if (v >= h.num_nodes()) throw InvalidInput("oracle: node id out of range");
}

// {u : u != x, some hyperedge holds both}.
NodeSet neighbourhood(const Hypergraph& h, NodeId x) {
  NodeSet out;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto s = members(h, e);
    if (!holds(s, x)) continue;
    for (NodeId u : s) {
      if (u != x) out.insert(u);
    }
  }
  return out;
}

// Intersection of N(u) over u in U; empty for empty U.
NodeSet common_neighbourhood(const Hypergraph& h, const NodeSet& U) {
  if (U.empty()) return {};
  NodeSet acc = neighbourhood(h, *U.begin());
  for (NodeId u : U) {
    const NodeSet n = neighbourhood(h, u);
    NodeSet next;
    std::set_intersection(acc.begin(), acc.end(), n.begin(), n.end(), std::inserter(next, next.end()));
    acc = std::move(next);
  }
  return acc;
}

NodeSet minus(const NodeSet& a, const NodeSet& b) {
  NodeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::size_t intersection_size(const NodeSet& a, const NodeSet& b) {
  std::size_t n = 0;
  for (NodeId x : a) n += holds(b, x);
  return n;
}

}  // namespace

double naive_weight(const Hypergraph& h, NodeId u, NodeId v) {
  if (u == v) return 0.0;
  double w = 0.0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto s = members(h, e);
    if (holds(s, u) && holds(s, v)) w = std::max(w, 1.0 / static_cast<double>(s.size() - 1));
  }
  return w;
}

std::uint32_t naive_cover_count(const Hypergraph& h, NodeId u, NodeId v) {
  std::uint32_t c = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto s = members(h, e);
    c += holds(s, u) && holds(s, v);
  }
  return c;
}

double naive_cc_proposed(const Hypergraph& h, NodeId v) {
  check(h, v);
  std::vector<NodeId> nv;
  for (NodeId u = 0; u < h.num_nodes(); ++u) {
    if (naive_weight(h, u, v) > 0.0) nv.push_back(u);
  }
  double num = 0.0;
  double den = 0.0;
  for (NodeId i : nv) {
    for (NodeId j : nv) {
      if (i == j) continue;
      const double wiv = naive_weight(h, i, v);
      const double wvj = naive_weight(h, v, j);
      num += wiv * wvj * naive_weight(h, i, j);
      den += wiv * wvj * 1.0;
    }
  }
  return den > 0.0 ? num / den : 0.0;
}

OpsahlPathCount naive_opsahl_paths(const Hypergraph& h, NodeId v) {
  check(h, v);
  OpsahlPathCount c;
  const auto n = static_cast<NodeId>(h.num_nodes());
  const auto m = static_cast<EdgeId>(h.num_edges());
  std::vector<NodeSet> sets;
  for (EdgeId e = 0; e < m; ++e) sets.push_back(members(h, e));
  for (NodeId u = 0; u < n; ++u) {
    for (EdgeId e1 = 0; e1 < m; ++e1) {
      for (EdgeId e2 = 0; e2 < m; ++e2) {
        for (NodeId w = 0; w < n; ++w) {
          if (u == v || w == v || u == w || e1 == e2) continue;
          const auto& s1 = sets[e1];
          const auto& s2 = sets[e2];
          if (!(holds(s1, u) && holds(s1, v) && holds(s2, v) && holds(s2, w))) continue;
          ++c.total;
          for (EdgeId e3 = 0; e3 < m; ++e3) {
            if (e3 == e1 || e3 == e2) continue;
            const auto& s3 = sets[e3];
            if (holds(s3, u) && holds(s3, w)) {
              ++c.closed;
              break;
            }
          }
        }
      }
    }
  }
  return c;
}

double naive_cc_opsahl(const Hypergraph& h, NodeId v) {
  const auto c = naive_opsahl_paths(h, v);
  return c.total == 0 ? 0.0 : static_cast<double>(c.closed) / static_cast<double>(c.total);
}

double naive_extra_overlap(const Hypergraph& h, EdgeId ei, EdgeId ej) {
  const auto si = members(h, ei);
  const auto sj = members(h, ej);
  const NodeSet dij = minus(si, sj);
  const NodeSet dji = minus(sj, si);
  const double denom = static_cast<double>(dij.size() + dji.size());
  if (denom == 0.0) return 0.0;
  const double num = static_cast<double>(intersection_size(common_neighbourhood(h, dij), dji) +
                                         intersection_size(common_neighbourhood(h, dji), dij));
  return num / denom;
}

double naive_cc_zhou(const Hypergraph& h, NodeId v) {
  check(h, v);
  std::vector<EdgeId> mv;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (holds(members(h, e), v)) mv.push_back(e);
  }
  if (mv.size() <= 1) return 0.0;
  double sum = 0.0;
  for (std::size_t a = 0; a < mv.size(); ++a) {
    for (std::size_t b = a + 1; b < mv.size(); ++b) sum += naive_extra_overlap(h, mv[a], mv[b]);
  }
  const double k = static_cast<double>(mv.size());
  return sum / (k * (k - 1.0) / 2.0);
}

double naive_cc_baseline(const Hypergraph& h, NodeId v) {
  check(h, v);
  const std::size_t n = h.num_nodes();
  std::vector<std::vector<int>> A(n, std::vector<int>(n, 0));
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (NodeId a : h.edge(e)) {
      for (NodeId b : h.edge(e)) {
        if (a != b) A[a][b] = 1;
      }
    }
  }
  double k = 0.0;
  for (std::size_t u = 0; u < n; ++u) k += A[u][v];
  if (k < 2.0) return 0.0;
  // The ordered double sum visits each neighbour pair twice.
  double closed = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t w = 0; w < n; ++w) closed += A[u][v] * A[v][w] * A[u][w];
  }
  return closed / (k * (k - 1.0));
}

double naive_cc(Definition d, const Hypergraph& h, NodeId v) {
  switch (d) {
    case Definition::kProposed: return naive_cc_proposed(h, v);
    case Definition::kOpsahl: return naive_cc_opsahl(h, v);
    case Definition::kZhou: return naive_cc_zhou(h, v);
    case Definition::kBaseline: return naive_cc_baseline(h, v);
  }
  return 0.0;
}

MotifCensus naive_census(const Hypergraph& h, InductionRule rule) {
  MotifCensus census;
  const auto n = static_cast<NodeId>(h.num_nodes());
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      for (NodeId c = b + 1; c < n; ++c) {
        const NodeSet T = {a, b, c};
        // Distinct restrictions of hyperedges to T that keep at least two nodes.
        std::set<NodeSet> induced;
        for (EdgeId e = 0; e < h.num_edges(); ++e) {
          const auto s = members(h, e);
          NodeSet in;
          std::set_intersection(s.begin(), s.end(), T.begin(), T.end(), std::inserter(in, in.end()));
          if (rule == InductionRule::kSubset && in.size() != s.size()) continue;
          if (in.size() >= 2) induced.insert(in);
        }
        const bool triple = induced.count(T) != 0;
        const std::size_t pairs = induced.size() - (triple ? 1 : 0);
        int cls = -1;
        if (triple) cls = 2 + static_cast<int>(pairs);  // III..VI
        else if (pairs == 2) cls = 0;                    // I
        else if (pairs == 3) cls = 1;                    // II
        if (cls >= 0) {
          ++census.counts[static_cast<std::size_t>(cls)];
          ++census.triples_examined;
        }
      }
    }
  }
  return census;
}

double watts_strogatz(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                      std::uint32_t v) {
  std::vector<std::set<std::uint32_t>> adj(n);
  for (const auto& [a, b] : pairs) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  const std::vector<std::uint32_t> nb(adj[v].begin(), adj[v].end());
  const double k = static_cast<double>(nb.size());
  if (nb.size() < 2) return 0.0;
  double links = 0.0;
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) links += adj[nb[i]].count(nb[j]);
  }
  return links / (k * (k - 1.0) / 2.0);
}

}  // namespace hypercc::testkit
