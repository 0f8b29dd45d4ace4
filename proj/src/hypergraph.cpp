#include "hypercc/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "hypercc/error.hpp"

namespace hypercc {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_leading_zeros(std::string_view s) {
  const auto pos = s.find_first_not_of('0');
  return pos == std::string_view::npos ? s.substr(s.size() - 1) : s.substr(pos);
}

struct VectorHash {
  std::size_t operator()(const std::vector<NodeId>& v) const noexcept {
    std::size_t h = v.size();
    for (NodeId x : v) h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // The smaller root wins so representatives are the minimum id of each set.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent_[b] = a;
    else parent_[a] = b;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

bool natural_label_less(std::string_view a, std::string_view b) {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na && nb) {
    const auto sa = strip_leading_zeros(a);
    const auto sb = strip_leading_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
    return a < b;
  }
  if (na != nb) return na;
  return a < b;
}

BuildResult Hypergraph::build(const std::vector<std::vector<std::string>>& raw_edges) {
  if (raw_edges.empty()) throw InvalidInput("empty hypergraph");

  std::vector<std::string> labels;
  {
    std::unordered_set<std::string_view> seen;
    for (const auto& edge : raw_edges) {
      for (const auto& l : edge) {
        if (seen.insert(l).second) labels.push_back(l);
      }
    }
  }
  std::sort(labels.begin(), labels.end(),
            [](const std::string& a, const std::string& b) { return natural_label_less(a, b); });
  std::unordered_map<std::string_view, NodeId> index;
  index.reserve(labels.size());
  for (NodeId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

  BuildResult result;
  std::vector<std::vector<NodeId>> edges;
  edges.reserve(raw_edges.size());
  std::unordered_set<std::vector<NodeId>, VectorHash> unique;
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    std::vector<NodeId> members;
    members.reserve(raw_edges[i].size());
    for (const auto& l : raw_edges[i]) members.push_back(index.at(l));
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    if (members.empty()) {
      throw InvalidInput("hyperedge " + std::to_string(i) + " has no members");
    }
    if (unique.insert(members).second) {
      edges.push_back(std::move(members));
    } else {
      ++result.duplicates_removed;
    }
  }
  result.graph = from_indexed(std::move(labels), std::move(edges));
  return result;
}

Hypergraph Hypergraph::from_indexed(std::vector<std::string> labels,
                                    std::vector<std::vector<NodeId>> edges) {
  Hypergraph h;
  h.labels_ = std::move(labels);
  h.label_index_.reserve(h.labels_.size());
  for (NodeId i = 0; i < h.labels_.size(); ++i) {
    if (!h.label_index_.emplace(h.labels_[i], i).second) {
      throw InvalidInput("duplicate node label '" + h.labels_[i] + "'");
    }
  }

  const std::size_t n = h.labels_.size();
  std::unordered_set<std::vector<NodeId>, VectorHash> unique;
  h.edge_offsets_.reserve(edges.size() + 1);
  h.edge_offsets_.push_back(0);
  std::vector<std::size_t> degree(n, 0);
  for (auto& e : edges) {
    if (e.empty()) throw InvalidInput("empty hyperedge");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw InvalidInput("hyperedge lists a node twice");
    }
    if (e.back() >= n) throw InvalidInput("hyperedge references unknown node id");
    if (!unique.insert(e).second) throw InvalidInput("duplicate hyperedge");
    for (NodeId v : e) ++degree[v];
    h.edge_members_.insert(h.edge_members_.end(), e.begin(), e.end());
    h.edge_offsets_.push_back(h.edge_members_.size());
  }

  h.incidence_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) h.incidence_offsets_[v + 1] = h.incidence_offsets_[v] + degree[v];
  h.incidence_.resize(h.edge_members_.size());
  std::vector<std::size_t> cursor(h.incidence_offsets_.begin(), h.incidence_offsets_.end() - 1);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    for (NodeId v : h.edge(e)) h.incidence_[cursor[v]++] = e;
  }
  return h;
}

bool Hypergraph::edge_contains(EdgeId e, NodeId v) const {
  const auto members = edge(e);
  return std::binary_search(members.begin(), members.end(), v);
}

NodeId Hypergraph::id_of(std::string_view label) const {
  const auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) throw InvalidInput("unknown node label '" + std::string(label) + "'");
  return it->second;
}

void Hypergraph::check_node(NodeId v) const {
  if (!valid(v)) {
    throw InvalidInput("node id " + std::to_string(v) + " out of range (N=" +
                       std::to_string(num_nodes()) + ")");
  }
}

std::vector<std::vector<NodeId>> Hypergraph::edge_lists() const {
  std::vector<std::vector<NodeId>> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) {
    const auto m = edge(e);
    out.emplace_back(m.begin(), m.end());
  }
  return out;
}

std::vector<NodeId> neighbors(const Hypergraph& h, NodeId v) {
  h.check_node(v);
  std::vector<NodeId> out;
  for (EdgeId e : h.incident(v)) {
    for (NodeId u : h.edge(e)) {
      if (u != v) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::size_t> connected_components(const Hypergraph& h) {
  DisjointSets sets(h.num_nodes());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto members = h.edge(e);
    for (std::size_t i = 1; i < members.size(); ++i) sets.unite(members[0], members[i]);
  }
  std::vector<std::size_t> comp(h.num_nodes());
  for (NodeId v = 0; v < h.num_nodes(); ++v) comp[v] = sets.find(v);
  return comp;
}

Hypergraph largest_connected_component(const Hypergraph& h) {
  const std::size_t n = h.num_nodes();
  if (n == 0) return h;
  const auto comp = connected_components(h);

  std::vector<std::size_t> size(n, 0);
  std::vector<NodeId> min_label_node(n);
  for (NodeId v = 0; v < n; ++v) {
    const auto c = comp[v];
    if (size[c] == 0 || natural_label_less(h.label(v), h.label(min_label_node[c]))) {
      min_label_node[c] = v;
    }
    ++size[c];
  }
  std::size_t best = comp[0];
  for (NodeId v = 0; v < n; ++v) {
    const auto c = comp[v];
    if (c != v) continue;  // visit each root once
    if (size[c] > size[best] ||
        (size[c] == size[best] &&
         natural_label_less(h.label(min_label_node[c]), h.label(min_label_node[best])))) {
      best = c;
    }
  }

  constexpr auto kDropped = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(n, kDropped);
  std::vector<std::string> labels;
  labels.reserve(size[best]);
  for (NodeId v = 0; v < n; ++v) {
    if (comp[v] == best) {
      remap[v] = static_cast<NodeId>(labels.size());
      labels.push_back(h.label(v));
    }
  }
  std::vector<std::vector<NodeId>> edges;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto members = h.edge(e);
    if (comp[members[0]] != best) continue;
    std::vector<NodeId> mapped;
    mapped.reserve(members.size());
    for (NodeId v : members) mapped.push_back(remap[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::from_indexed(std::move(labels), std::move(edges));
}

SummaryStats summary_stats(const Hypergraph& h) {
  SummaryStats s;
  s.nodes = h.num_nodes();
  s.edges = h.num_edges();
  s.bipartite_edges = h.num_incidences();
  s.avg_degree = s.nodes ? static_cast<double>(s.bipartite_edges) / static_cast<double>(s.nodes) : 0.0;
  s.avg_edge_size = s.edges ? static_cast<double>(s.bipartite_edges) / static_cast<double>(s.edges) : 0.0;
  return s;
}

}  // namespace hypercc
