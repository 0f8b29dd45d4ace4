#include "hypercc/report.hpp"

#include <cmath>
#include <ostream>

#include <fmt/format.h>

#include "hypercc/format.hpp"

namespace hypercc {
namespace {

Json optional_json(const std::optional<double>& x) { return x ? Json(*x) : Json(nullptr); }

}  // namespace

std::string fraction_string(double x) {
  for (long q = 1; q <= 64; ++q) {
    const double p = std::round(x * static_cast<double>(q));
    if (std::abs(p / static_cast<double>(q) - x) <= 1e-12) {
      if (q == 1) return fmt::format("{}", static_cast<long>(p));
      return fmt::format("{}/{}", static_cast<long>(p), q);
    }
  }
  return decimal12(x);
}

std::string decimal12(double x) {
  if (x == 0.0) return "0";
  return fmt::format("{:.12g}", x);
}

std::string format_optional(const std::optional<double>& x) { return x ? format_real(*x) : "undefined"; }

Json to_json(const SummaryStats& s) {
  Json j;
  j["N"] = s.nodes;
  j["M"] = s.edges;
  j["bipartite_edges"] = s.bipartite_edges;
  j["avg_degree"] = s.avg_degree;
  j["avg_edge_size"] = s.avg_edge_size;
  return j;
}

Json to_json(const Provenance& p) {
  Json j;
  j["raw_edge_count"] = p.raw_edge_count;
  j["in_edge_duplicates"] = p.in_edge_duplicates;
  j["singletons_removed"] = p.singletons_removed;
  j["duplicates_removed"] = p.duplicates_removed;
  j["edges_dropped_by_lcc"] = p.edges_dropped_by_lcc;
  j["nodes_dropped_by_lcc"] = p.nodes_dropped_by_lcc;
  j["N"] = p.nodes;
  j["M"] = p.edges;
  j["bipartite_edges"] = p.bipartite_edges;
  return j;
}

Json to_json(const MotifCensus& c) {
  Json counts;
  for (MotifClass m : kMotifClasses) counts[std::string(motif_name(m))] = c.count(m);
  Json j;
  j["counts"] = std::move(counts);
  j["triples_examined"] = c.triples_examined;
  return j;
}

Json to_json(const CorrelationReport& c) {
  Json j;
  j["rho_OP"] = optional_json(c.rho_op);
  j["rho_ZP"] = optional_json(c.rho_zp);
  j["rho_SP"] = optional_json(c.rho_sp);
  return j;
}

Json to_json(const Table1& t) {
  Json j;
  j["columns"] = Json::array();
  for (auto c : t.columns) j["columns"].push_back(std::string(c));
  Json rows;
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    Json values = Json::array();
    Json exact = Json::array();
    for (double x : t.values[r]) {
      values.push_back(x);
      exact.push_back(fraction_string(x));
    }
    rows[std::string(Table1::kRowNames[r])] = {{"values", std::move(values)}, {"exact", std::move(exact)}};
  }
  j["rows"] = std::move(rows);
  return j;
}

Json to_json(const Hypergraph& h, const CCReport& r) {
  const auto defs = r.definitions.members();
  Json nodes = Json::array();
  for (const auto& rec : r.records) {
    Json row;
    row["node"] = h.label(rec.node);
    for (Definition d : defs) row["c_" + std::string(definition_name(d))] = rec.value(d);
    nodes.push_back(std::move(row));
  }
  Json averages;
  for (Definition d : defs) averages["c_" + std::string(definition_name(d))] = r.averages.value(d);
  Json j;
  j["nodes"] = std::move(nodes);
  j["averages"] = std::move(averages);
  return j;
}

Json to_json(const Histogram& hist) {
  Json j;
  j["edges"] = hist.edges;
  j["counts"] = hist.counts;
  return j;
}

void write_stats_csv(std::ostream& out, const SummaryStats& s, const Provenance& p) {
  out << "N,M,bipartite_edges,avg_degree,avg_edge_size,raw_edge_count,in_edge_duplicates,"
         "singletons_removed,duplicates_removed,edges_dropped_by_lcc,nodes_dropped_by_lcc\n";
  out << s.nodes << ',' << s.edges << ',' << s.bipartite_edges << ',' << format_real(s.avg_degree) << ','
      << format_real(s.avg_edge_size) << ',' << p.raw_edge_count << ',' << p.in_edge_duplicates << ','
      << p.singletons_removed << ',' << p.duplicates_removed << ',' << p.edges_dropped_by_lcc << ','
      << p.nodes_dropped_by_lcc << '\n';
}

void write_cc_csv(std::ostream& out, const Hypergraph& h, const CCReport& r, bool footer) {
  const auto defs = r.definitions.members();
  out << "node_label";
  for (Definition d : defs) out << ",c_" << definition_name(d);
  out << '\n';
  for (const auto& rec : r.records) {
    out << csv_field(h.label(rec.node));
    for (Definition d : defs) out << ',' << format_real(rec.value(d));
    out << '\n';
  }
  if (footer) {
    out << "#average";
    for (Definition d : defs) out << ',' << format_real(r.averages.value(d));
    out << '\n';
  }
}

void write_census_csv(std::ostream& out, const MotifCensus& c) {
  out << "motif_class,count\n";
  for (MotifClass m : kMotifClasses) out << motif_name(m) << ',' << c.count(m) << '\n';
}

void write_histogram_csv(std::ostream& out, Definition d, const Histogram& hist, bool header) {
  if (header) out << "definition,bin,lower,upper,count\n";
  for (std::size_t b = 0; b < hist.counts.size(); ++b) {
    out << definition_name(d) << ',' << b << ',' << format_real(hist.edges[b]) << ','
        << format_real(hist.edges[b + 1]) << ',' << hist.counts[b] << '\n';
  }
}

void write_correlation_csv(std::ostream& out, const CorrelationReport& c) {
  out << "pair,rho\n";
  out << "opsahl_proposed," << format_optional(c.rho_op) << '\n';
  out << "zhou_proposed," << format_optional(c.rho_zp) << '\n';
  out << "baseline_proposed," << format_optional(c.rho_sp) << '\n';
}

void write_table1_csv(std::ostream& out, const Table1& t) {
  out << "definition";
  for (auto c : t.columns) out << ',' << c;
  out << '\n';
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    out << Table1::kRowNames[r];
    for (double x : t.values[r]) out << ',' << decimal12(x);
    out << '\n';
  }
}

void write_table1_text(std::ostream& out, const Table1& t) {
  out << fmt::format("{:<12}", "");
  for (auto c : t.columns) out << fmt::format("{:>16}", c);
  out << '\n';
  for (std::size_t r = 0; r < t.values.size(); ++r) {
    out << fmt::format("{:<12}", Table1::kRowNames[r]);
    for (double x : t.values[r]) out << fmt::format("{:>16}", decimal12(x));
    out << '\n';
    out << fmt::format("{:<12}", "");
    for (double x : t.values[r]) out << fmt::format("{:>16}", fraction_string(x));
    out << '\n';
  }
}

}  // namespace hypercc
