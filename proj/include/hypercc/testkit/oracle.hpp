#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hypercc/clustering.hpp"
#include "hypercc/hypergraph.hpp"
#include "hypercc/motifs.hpp"

// Brute-force reference semantics. Everything here works from the hyperedge
// lists with plain loops and std::set algebra; nothing calls the projection,
// coverage, or census kernels.
namespace hypercc::testkit {

// Largest 1/(|e|-1) over hyperedges holding both u and v; 0 if none or u == v.
double naive_weight(const Hypergraph& h, NodeId u, NodeId v);

// Number of hyperedges holding both u and v.
std::uint32_t naive_cover_count(const Hypergraph& h, NodeId u, NodeId v);

double naive_cc_proposed(const Hypergraph& h, NodeId v);

// Ordered enumeration of all (u, e1, v, e2, w) tuples.
OpsahlPathCount naive_opsahl_paths(const Hypergraph& h, NodeId v);
double naive_cc_opsahl(const Hypergraph& h, NodeId v);

double naive_extra_overlap(const Hypergraph& h, EdgeId ei, EdgeId ej);
double naive_cc_zhou(const Hypergraph& h, NodeId v);

double naive_cc_baseline(const Hypergraph& h, NodeId v);

double naive_cc(Definition d, const Hypergraph& h, NodeId v);

// Classifies every one of the C(N,3) triples by scanning all hyperedges.
MotifCensus naive_census(const Hypergraph& h, InductionRule rule = InductionRule::kSubset);

// Local clustering of node v in the simple graph given by an explicit pair list.
double watts_strogatz(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs,
                      std::uint32_t v);

}  // namespace hypercc::testkit
