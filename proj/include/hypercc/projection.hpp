#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hypercc/hypergraph.hpp"

namespace hypercc {

struct ProjectionOptions {
  // Hyperedges larger than this are ignored when enumerating pairs. 0 keeps all.
  std::size_t max_edge_size = 0;
};

namespace detail {

// Every covered node pair (u < v) in ascending key order with the smallest
// covering hyperedge size and the number of covering hyperedges.
struct PairTable {
  std::size_t num_nodes = 0;
  std::vector<std::uint64_t> keys;  // (u << 32) | v
  std::vector<std::uint32_t> min_size;
  std::vector<std::uint32_t> cover_count;
};

PairTable build_pair_table(const Hypergraph& h, const ProjectionOptions& opts = {});

// Symmetric adjacency in CSR form; rows sorted ascending. `slot` maps each row
// entry back to its PairTable index so per-pair payloads can be gathered.
struct SymmetricCsr {
  std::vector<std::size_t> offsets;
  std::vector<NodeId> targets;
  std::vector<std::size_t> slot;

  static SymmetricCsr from(const PairTable& table);

  std::span<const NodeId> row(NodeId v) const {
    return {targets.data() + offsets[v], offsets[v + 1] - offsets[v]};
  }
  // Position of `v` inside the CSR arrays, or npos.
  std::size_t find(NodeId u, NodeId v) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

}  // namespace detail

// Weighted graph where W_uv is the largest 1/(|e|-1) over hyperedges e
// containing both u and v. Uncovered pairs have weight 0 and are not stored.
class WeightedProjection {
 public:
  static WeightedProjection from(const Hypergraph& h, const ProjectionOptions& opts = {});
  static WeightedProjection from(const detail::PairTable& table);

  std::size_t num_nodes() const { return csr_.offsets.empty() ? 0 : csr_.offsets.size() - 1; }
  std::size_t num_pairs() const { return csr_.targets.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const { return csr_.row(v); }
  std::span<const double> weights(NodeId v) const {
    return {weights_.data() + csr_.offsets[v], csr_.offsets[v + 1] - csr_.offsets[v]};
  }
  double weight(NodeId u, NodeId v) const;

  bool valid(NodeId v) const { return v < num_nodes(); }

 private:
  detail::SymmetricCsr csr_;
  std::vector<double> weights_;
};

// Number of hyperedges covering each covered pair.
class PairCoverage {
 public:
  static PairCoverage from(const Hypergraph& h, const ProjectionOptions& opts = {});
  static PairCoverage from(const detail::PairTable& table);

  std::size_t num_nodes() const { return csr_.offsets.empty() ? 0 : csr_.offsets.size() - 1; }
  std::size_t num_pairs() const { return csr_.targets.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const { return csr_.row(v); }
  std::uint32_t count(NodeId u, NodeId v) const;

  // Whether hyperedge e holds both u and v; O(log |e|).
  static bool edge_covers(const Hypergraph& h, EdgeId e, NodeId u, NodeId v) {
    return h.edge_contains(e, u) && h.edge_contains(e, v);
  }

 private:
  detail::SymmetricCsr csr_;
  std::vector<std::uint32_t> counts_;
};

// 0/1 clique expansion.
class SimpleAdjacency {
 public:
  static SimpleAdjacency from(const Hypergraph& h, const ProjectionOptions& opts = {});
  static SimpleAdjacency from(const detail::PairTable& table);

  std::size_t num_nodes() const { return csr_.offsets.empty() ? 0 : csr_.offsets.size() - 1; }
  std::size_t num_pairs() const { return csr_.targets.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const { return csr_.row(v); }
  std::size_t degree(NodeId v) const { return csr_.offsets[v + 1] - csr_.offsets[v]; }
  bool adjacent(NodeId u, NodeId v) const { return csr_.find(u, v) != detail::SymmetricCsr::npos; }

  bool valid(NodeId v) const { return v < num_nodes(); }

 private:
  detail::SymmetricCsr csr_;
};

WeightedProjection weighted_projection(const Hypergraph& h, const ProjectionOptions& opts = {});
SimpleAdjacency clique_expansion(const Hypergraph& h, const ProjectionOptions& opts = {});
PairCoverage pair_coverage(const Hypergraph& h, const ProjectionOptions& opts = {});

// Writes `u,v,weight` rows (u < v by id, original labels) preceded by a header.
void write_weights_csv(std::ostream& out, const Hypergraph& h, const WeightedProjection& proj);

}  // namespace hypercc
