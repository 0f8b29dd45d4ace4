#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypercc/hypergraph.hpp"
#include "hypercc/projection.hpp"

namespace hypercc {

enum class Definition : unsigned {
  kProposed = 1U << 0,
  kOpsahl = 1U << 1,
  kZhou = 1U << 2,
  kBaseline = 1U << 3,
};

std::string_view definition_name(Definition d);

// Subset of the four definitions; defaults to all of them.
class DefinitionSet {
 public:
  static constexpr unsigned kAll = 0xF;

  DefinitionSet() = default;
  explicit DefinitionSet(unsigned bits) : bits_(bits & kAll) {}

  // Comma-separated names: proposed, opsahl, zhou, baseline, or "all".
  // Throws InvalidInput on an unknown or empty name.
  static DefinitionSet parse(std::string_view list);

  bool has(Definition d) const { return (bits_ & static_cast<unsigned>(d)) != 0; }
  unsigned bits() const { return bits_; }
  // Selected definitions in canonical column order.
  std::vector<Definition> members() const;

 private:
  unsigned bits_ = kAll;
};

inline constexpr Definition kAllDefinitions[] = {Definition::kProposed, Definition::kOpsahl,
                                                 Definition::kZhou, Definition::kBaseline};

struct OpsahlPathCount {
  std::uint64_t total = 0;   // 4-paths centred on the node
  std::uint64_t closed = 0;  // ... whose end points are covered by a third hyperedge
};

struct CCRecord {
  NodeId node = 0;
  double proposed = 0.0;
  double opsahl = 0.0;
  double zhou = 0.0;
  double baseline = 0.0;

  double value(Definition d) const;
};

struct CCAverages {
  double proposed = 0.0;
  double opsahl = 0.0;
  double zhou = 0.0;
  double baseline = 0.0;

  double value(Definition d) const;
};

struct CCReport {
  DefinitionSet definitions;
  std::vector<CCRecord> records;  // ordered by node id
  CCAverages averages;            // means over every node, zeros included

  std::vector<double> column(Definition d) const;
};

// Ratio of realised to potential triangle weight around v in the weighted
// projection. 0 when v has fewer than two neighbours.
double cc_proposed(const WeightedProjection& proj, NodeId v);

// 4-paths u-e1-v-e2-w through two distinct incident hyperedges with three
// distinct nodes, and how many of them are closed by a hyperedge other than
// e1 and e2 covering {u, w}.
OpsahlPathCount opsahl_paths(const Hypergraph& h, const PairCoverage& cov, NodeId v);
double cc_opsahl(const Hypergraph& h, const PairCoverage& cov, NodeId v);

// Extra overlap of two distinct hyperedges. Symmetric in its arguments.
double extra_overlap(const Hypergraph& h, const SimpleAdjacency& adj, EdgeId ei, EdgeId ej);

// Mean extra overlap over all pairs of hyperedges incident to v; 0 when v is in
// fewer than two hyperedges.
double cc_zhou(const Hypergraph& h, const SimpleAdjacency& adj, NodeId v);
// Convenience overload; builds the clique expansion on every call.
double cc_zhou(const Hypergraph& h, NodeId v);

// Watts-Strogatz coefficient on the clique expansion; 0 when deg(v) < 2.
double cc_baseline(const SimpleAdjacency& adj, NodeId v);

struct CCOptions {
  DefinitionSet definitions;
  // OpenMP team size for cc_all; 0 uses the runtime default.
  int threads = 0;
};

// Evaluates the selected definitions at every node, in parallel over nodes.
// Output is identical for every thread count.
CCReport cc_all(const Hypergraph& h, const CCOptions& opts = {});

// Single-threaded reference for cc_all.
CCReport cc_all_serial(const Hypergraph& h, const CCOptions& opts = {});

}  // namespace hypercc
