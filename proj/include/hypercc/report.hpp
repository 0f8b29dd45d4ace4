#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "hypercc/analysis.hpp"
#include "hypercc/clustering.hpp"
#include "hypercc/hypergraph.hpp"
#include "hypercc/ingest.hpp"
#include "hypercc/motifs.hpp"

namespace hypercc {

using Json = nlohmann::ordered_json;

Json to_json(const SummaryStats& s);
Json to_json(const Provenance& p);
Json to_json(const MotifCensus& c);
Json to_json(const CorrelationReport& c);
Json to_json(const Table1& t);
// Per-node records keyed by label plus the averages of the selected columns.
Json to_json(const Hypergraph& h, const CCReport& r);
Json to_json(const Histogram& hist);

void write_stats_csv(std::ostream& out, const SummaryStats& s, const Provenance& p);

// node_label followed by the selected c_* columns, then a `#average` footer row.
void write_cc_csv(std::ostream& out, const Hypergraph& h, const CCReport& r, bool footer = true);

void write_census_csv(std::ostream& out, const MotifCensus& c);

// definition,bin,lower,upper,count
void write_histogram_csv(std::ostream& out, Definition d, const Histogram& hist, bool header = true);

void write_correlation_csv(std::ostream& out, const CorrelationReport& c);

void write_table1_csv(std::ostream& out, const Table1& t);
// Aligned text table, one line per definition, decimals then exact fractions.
void write_table1_text(std::ostream& out, const Table1& t);

// Smallest-denominator fraction p/q (q <= 64) within 1e-12 of x, else the decimal.
std::string fraction_string(double x);
// Decimal rendering with 12 significant digits.
std::string decimal12(double x);

std::string format_optional(const std::optional<double>& x);

}  // namespace hypercc
