#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypercc/clustering.hpp"

namespace hypercc {

// Product-moment correlation, nullopt when either sample has zero variance.
// Throws InvalidInput when lengths differ or fewer than two samples are given.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys);

struct HistogramSpec {
  std::size_t bins = 20;  // equal-width bins over [0, 1], last bin closed on the right
};

struct Histogram {
  std::vector<double> edges;  // bins + 1 boundaries
  std::vector<std::uint64_t> counts;
};

// Throws InvalidInput for bins < 1 or values outside [0, 1].
Histogram histogram(std::span<const double> values, const HistogramSpec& spec = {});

// Correlation of each existing definition with the proposed one, over all nodes.
struct CorrelationReport {
  std::optional<double> rho_op;  // (C_Opsahl, C_proposed)
  std::optional<double> rho_zp;  // (C_Zhou, C_proposed)
  std::optional<double> rho_sp;  // (C_baseline, C_proposed)
};

// Needs all four definitions in `report`.
CorrelationReport correlate(const CCReport& report);

}  // namespace hypercc
