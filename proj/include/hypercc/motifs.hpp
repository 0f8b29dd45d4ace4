#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "hypercc/hypergraph.hpp"

namespace hypercc {

// Connected 3-node patterns over pair and triple hyperedges.
enum class MotifClass : std::uint8_t {
  kI,    // two pair edges (open wedge)
  kII,   // three pair edges (triangle)
  kIII,  // triple edge only
  kIV,   // triple edge + one pair edge
  kV,    // triple edge + two pair edges
  kVI,   // triple edge + three pair edges
};

inline constexpr std::array<MotifClass, 6> kMotifClasses = {
    MotifClass::kI, MotifClass::kII, MotifClass::kIII, MotifClass::kIV, MotifClass::kV, MotifClass::kVI};

std::string_view motif_name(MotifClass m);

// Which hyperedges shape the pattern induced on a triple T.
enum class InductionRule {
  kSubset,     // e contributes only when e is a subset of T
  kIntersect,  // e contributes its intersection with T when that has >= 2 nodes
};

std::string_view induction_name(InductionRule r);
// "subset" or "intersect"; throws InvalidInput otherwise.
InductionRule parse_induction(std::string_view name);

// Pattern with or without the triple edge and with 0..3 distinct pair edges;
// nullopt when those do not connect all three nodes.
std::optional<MotifClass> classify_pattern(bool has_triple, int pair_edges);

// Classifies the pattern induced on three distinct nodes. Throws InvalidInput
// unless `triple` holds exactly three distinct valid ids.
std::optional<MotifClass> classify_triple(const Hypergraph& h, std::span<const NodeId> triple,
                                          InductionRule rule = InductionRule::kSubset);

struct MotifCensus {
  std::array<std::uint64_t, 6> counts{};
  std::uint64_t triples_examined = 0;  // connected triples; equals the sum of counts

  std::uint64_t count(MotifClass m) const { return counts[static_cast<std::size_t>(m)]; }
  bool operator==(const MotifCensus&) const = default;
};

// Counts connected triples by class, generating candidates from wedges of the
// relevant pair graph instead of all C(N,3) subsets. Parallel over wedge centres.
MotifCensus census_order3(const Hypergraph& h, InductionRule rule = InductionRule::kSubset,
                          int threads = 0);

// Single-threaded reference for census_order3.
MotifCensus census_order3_serial(const Hypergraph& h, InductionRule rule = InductionRule::kSubset);

enum class RootedMotif : std::uint8_t { kI, kII, kIII, kIVa, kIVb, kV, kVI };

struct RootedPattern {
  MotifClass motif;
  RootedMotif variant;
  std::string_view name;  // column heading: I, II, III, IV-a, IV-b, V, VI
};

struct MotifFixture {
  RootedPattern pattern;
  Hypergraph graph;  // nodes a, b, c
  NodeId root;
};

// The seven rooted order-3 fixtures in column order I, II, III, IV-a, IV-b, V, VI.
std::vector<MotifFixture> canonical_fixtures();

struct Table1 {
  // Row order: Opsahl, Zhou, baseline, proposed.
  static constexpr std::array<std::string_view, 4> kRowNames = {"C_Opsahl", "C_Zhou", "C_baseline",
                                                                "C_proposed"};
  std::array<std::string_view, 7> columns{};
  std::array<std::array<double, 7>, 4> values{};
};

// Evaluates all four coefficients at the root of each canonical fixture.
Table1 table1_matrix();

}  // namespace hypercc
