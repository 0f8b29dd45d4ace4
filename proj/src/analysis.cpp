#include "hypercc/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "hypercc/error.hpp"

namespace hypercc {

// Single pass with running co-moments (Welford); stable for long columns.
std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw InvalidInput("pearson: sample lengths differ");
  if (xs.size() < 2) throw InvalidInput("pearson: need at least two samples");
  double mean_x = 0.0;
  double mean_y = 0.0;
  double m2x = 0.0;
  double m2y = 0.0;
  double cxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    const double dx = xs[i] - mean_x;
    const double dy = ys[i] - mean_y;
    mean_x += dx / n;
    mean_y += dy / n;
    m2x += dx * (xs[i] - mean_x);
    m2y += dy * (ys[i] - mean_y);
    cxy += dx * (ys[i] - mean_y);
  }
  if (m2x <= 0.0 || m2y <= 0.0) return std::nullopt;
  return std::clamp(cxy / std::sqrt(m2x * m2y), -1.0, 1.0);
}

Histogram histogram(std::span<const double> values, const HistogramSpec& spec) {
  if (spec.bins < 1) throw InvalidInput("histogram needs at least one bin");
  Histogram h;
  h.edges.resize(spec.bins + 1);
  for (std::size_t i = 0; i <= spec.bins; ++i) {
    h.edges[i] = static_cast<double>(i) / static_cast<double>(spec.bins);
  }
  h.counts.assign(spec.bins, 0);
  for (double x : values) {
    if (!(x >= 0.0 && x <= 1.0)) throw InvalidInput("histogram value outside [0, 1]");
    auto bin = std::min(static_cast<std::size_t>(x * static_cast<double>(spec.bins)), spec.bins - 1);
    // Snap to the stored edges so bins are exactly [edges[i], edges[i+1]).
    while (bin > 0 && x < h.edges[bin]) --bin;
    while (bin + 1 < spec.bins && x >= h.edges[bin + 1]) ++bin;
    ++h.counts[bin];
  }
  return h;
}

CorrelationReport correlate(const CCReport& report) {
  if (report.definitions.bits() != DefinitionSet::kAll) {
    throw InvalidInput("correlation needs all four definitions");
  }
  const auto proposed = report.column(Definition::kProposed);
  return {pearson(report.column(Definition::kOpsahl), proposed),
          pearson(report.column(Definition::kZhou), proposed),
          pearson(report.column(Definition::kBaseline), proposed)};
}

}  // namespace hypercc
