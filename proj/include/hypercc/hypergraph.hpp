#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace hypercc {

// Dense node index in 0..N-1.
using NodeId = std::uint32_t;
// Dense hyperedge index in 0..M-1.
using EdgeId = std::uint32_t;

// Members of one hyperedge, strictly increasing.
using Hyperedge = std::span<const NodeId>;

// Orders labels numerically when both are non-negative integers, lexicographically
// otherwise (numeric labels sort before non-numeric ones).
bool natural_label_less(std::string_view a, std::string_view b);

struct SummaryStats {
  std::size_t nodes = 0;            // N
  std::size_t edges = 0;            // M
  std::size_t bipartite_edges = 0;  // sum of hyperedge sizes
  double avg_degree = 0.0;          // bipartite_edges / N
  double avg_edge_size = 0.0;       // bipartite_edges / M
};

struct BuildResult;

// Immutable simple hypergraph. Nodes carry an external label; hyperedges are
// stored in CSR form alongside the inverse (node -> incident hyperedges) index.
class Hypergraph {
 public:
  // Builds from labelled hyperedges. Labels inside an edge are deduplicated,
  // identical hyperedges are collapsed (first occurrence kept), and node ids are
  // assigned in natural label order.
  static BuildResult build(const std::vector<std::vector<std::string>>& raw_edges);

  // Builds from already-indexed hyperedges over `labels` (id i has label
  // labels[i]). Nodes need not appear in any edge. Every edge must be non-empty,
  // contain valid ids, and be distinct from all others as a set.
  static Hypergraph from_indexed(std::vector<std::string> labels,
                                 std::vector<std::vector<NodeId>> edges);

  Hypergraph() = default;

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }
  std::size_t num_incidences() const { return edge_members_.size(); }

  Hyperedge edge(EdgeId e) const {
    return {edge_members_.data() + edge_offsets_[e], edge_offsets_[e + 1] - edge_offsets_[e]};
  }
  std::size_t edge_size(EdgeId e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }

  // Incident hyperedges of v in increasing id order.
  std::span<const EdgeId> incident(NodeId v) const {
    return {incidence_.data() + incidence_offsets_[v],
            incidence_offsets_[v + 1] - incidence_offsets_[v]};
  }
  std::size_t degree(NodeId v) const { return incident(v).size(); }

  bool edge_contains(EdgeId e, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }
  // Throws InvalidInput when the label is unknown.
  NodeId id_of(std::string_view label) const;

  bool valid(NodeId v) const { return v < num_nodes(); }
  // Throws InvalidInput unless v is a valid id.
  void check_node(NodeId v) const;

  // Copies every hyperedge out as a sorted id vector.
  std::vector<std::vector<NodeId>> edge_lists() const;

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::vector<std::size_t> edge_offsets_;
  std::vector<NodeId> edge_members_;
  std::vector<std::size_t> incidence_offsets_;
  std::vector<EdgeId> incidence_;
};

struct BuildResult {
  Hypergraph graph;
  std::size_t duplicates_removed = 0;
};

// All u != v sharing at least one hyperedge with v, sorted.
std::vector<NodeId> neighbors(const Hypergraph& h, NodeId v);

// Component id per node (connectivity through shared hyperedges); components
// are numbered by their smallest node id.
std::vector<std::size_t> connected_components(const Hypergraph& h);

// Induced sub-hypergraph on the largest connected component, ids re-densified
// preserving relative order. Ties go to the component whose smallest label is
// smallest in natural order.
Hypergraph largest_connected_component(const Hypergraph& h);

SummaryStats summary_stats(const Hypergraph& h);

}  // namespace hypercc
