// hypercc: clustering coefficients and order-3 motif censuses for hypergraphs.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "hypercc/analysis.hpp"
#include "hypercc/clustering.hpp"
#include "hypercc/error.hpp"
#include "hypercc/format.hpp"
#include "hypercc/ingest.hpp"
#include "hypercc/motifs.hpp"
#include "hypercc/report.hpp"
#include "hypercc/testkit/oracle.hpp"

namespace fs = std::filesystem;
using namespace hypercc;

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kParse = 3, kCompute = 4 };

struct Options {
  std::string input;
  std::string format = "benson";
  bool drop_singletons = false;
  bool no_lcc = false;
  std::size_t max_edge_size = 0;
  std::string only = "all";
  std::size_t bins = 20;
  std::string induction = "subset";
  bool json = false;
  std::string out;
  int threads = 0;
  bool oracle = false;
};

constexpr double kOracleTol = 1e-12;

struct Loaded {
  Hypergraph graph;
  Provenance provenance;
  RawEdgeList raw;
};

Loaded load(const Options& o) {
  auto raw = read_input(o.input, parse_input_format(o.format));
  for (const auto& w : raw.warnings) std::cerr << "warning: " << w << '\n';
  auto pre = preprocess(raw, {.drop_singletons = o.drop_singletons, .take_lcc = !o.no_lcc});
  Hypergraph g = o.max_edge_size ? restrict_edge_size(pre.graph, o.max_edge_size) : std::move(pre.graph);
  raw.edges.clear();
  return {std::move(g), pre.provenance, std::move(raw)};
}

Json input_json(const Options& o, const Loaded& in) {
  Json j;
  j["paths"] = in.raw.paths;
  j["format"] = o.format;
  j["drop_singletons"] = o.drop_singletons;
  j["lcc"] = !o.no_lcc;
  j["max_edge_size"] = o.max_edge_size;
  j["provenance"] = to_json(in.provenance);
  return j;
}

// Files under --out; the directory is created on demand.
class OutDir {
 public:
  explicit OutDir(const std::string& dir) : dir_(dir) {
    if (dir_.empty()) return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error("cannot create output directory '" + dir + "': " + ec.message());
  }
  bool enabled() const { return !dir_.empty(); }

  template <typename Fn>
  void write(const std::string& name, Fn&& fn) const {
    const auto path = dir_ / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path.string() + "'");
    fn(f);
    if (!f) throw Error("write failed for '" + path.string() + "'");
  }
  void write_json(const std::string& name, const Json& j) const {
    write(name, [&](std::ostream& f) { f << j.dump(2) << '\n'; });
  }

 private:
  fs::path dir_;
};

void oracle_check_cc(const Hypergraph& h, const CCReport& r) {
  std::size_t checked = 0;
  for (const auto& rec : r.records) {
    for (Definition d : r.definitions.members()) {
      const double expect = testkit::naive_cc(d, h, rec.node);
      if (!(std::abs(rec.value(d) - expect) <= kOracleTol)) {
        throw InvalidInput(fmt::format("oracle mismatch: {} at node {}: kernel {} vs oracle {}", definition_name(d),
                                       h.label(rec.node), format_real(rec.value(d)), format_real(expect)));
      }
      ++checked;
    }
  }
  std::cerr << fmt::format("oracle: {} node values agree within {}\n", checked, kOracleTol);
}

void oracle_check_census(const Hypergraph& h, InductionRule rule, const MotifCensus& c) {
  if (testkit::naive_census(h, rule) != c) throw InvalidInput("oracle mismatch: motif census differs");
  std::cerr << "oracle: motif census agrees\n";
}

CCReport run_cc(const Options& o, const Hypergraph& h, DefinitionSet defs) {
  auto r = cc_all(h, {.definitions = defs, .threads = o.threads});
  if (o.oracle) oracle_check_cc(h, r);
  return r;
}

void print_averages(std::ostream& out, const CCReport& r) {
  for (Definition d : r.definitions.members()) {
    out << fmt::format("average c_{} {}\n", definition_name(d), format_real(r.averages.value(d)));
  }
}

int cmd_stats(const Options& o) {
  const auto in = load(o);
  const auto s = summary_stats(in.graph);
  const OutDir out(o.out);
  Json j;
  j["input"] = input_json(o, in);
  j["stats"] = to_json(s);
  if (out.enabled()) {
    out.write("stats.csv", [&](std::ostream& f) { write_stats_csv(f, s, in.provenance); });
    out.write_json("stats.json", j);
  }
  if (o.json) {
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  const auto& p = in.provenance;
  std::cout << fmt::format("N {}\nM {}\nbipartite_edges {}\navg_degree {}\navg_edge_size {}\n", s.nodes, s.edges,
                           s.bipartite_edges, format_real(s.avg_degree), format_real(s.avg_edge_size));
  std::cout << fmt::format(
      "raw_edges {} in_edge_duplicates {} singletons_removed {} duplicates_removed {} "
      "lcc_dropped_edges {} lcc_dropped_nodes {}\n",
      p.raw_edge_count, p.in_edge_duplicates, p.singletons_removed, p.duplicates_removed, p.edges_dropped_by_lcc,
      p.nodes_dropped_by_lcc);
  return kOk;
}

int cmd_cc(const Options& o, DefinitionSet defs) {
  const auto in = load(o);
  const auto r = run_cc(o, in.graph, defs);
  const OutDir out(o.out);
  Json j;
  j["input"] = input_json(o, in);
  j["cc"] = to_json(in.graph, r);
  if (out.enabled()) {
    out.write("cc.csv", [&](std::ostream& f) { write_cc_csv(f, in.graph, r); });
    out.write_json("cc.json", j);
  }
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else if (out.enabled()) {
    print_averages(std::cout, r);
  } else {
    write_cc_csv(std::cout, in.graph, r);
  }
  return kOk;
}

int cmd_motifs(const Options& o) {
  const auto in = load(o);
  const auto rule = parse_induction(o.induction);
  const auto c = census_order3(in.graph, rule, o.threads);
  if (o.oracle) oracle_check_census(in.graph, rule, c);
  const OutDir out(o.out);
  Json j;
  j["input"] = input_json(o, in);
  j["induction"] = std::string(induction_name(rule));
  j["census"] = to_json(c);
  if (out.enabled()) {
    out.write("motifs.csv", [&](std::ostream& f) { write_census_csv(f, c); });
    out.write_json("motifs.json", j);
  }
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_census_csv(std::cout, c);
  }
  return kOk;
}

constexpr std::string_view kScatterScript = R"(# Scatter plots of each coefficient against c_proposed.
import csv
import matplotlib.pyplot as plt

rows = list(csv.DictReader(open("scatter.csv")))
y = [float(r["c_proposed"]) for r in rows]
fig, axes = plt.subplots(1, 3, figsize=(12, 4))
for ax, name in zip(axes, ["c_opsahl", "c_zhou", "c_baseline"]):
    ax.scatter([float(r[name]) for r in rows], y, s=6)
    ax.set_xlabel(name)
    ax.set_ylabel("c_proposed")
fig.tight_layout()
fig.savefig("scatter.png", dpi=150)
)";

constexpr std::string_view kHistogramScript = R"(# Bar chart per definition from the long-format histogram CSV.
import csv
from collections import defaultdict
import matplotlib.pyplot as plt

series = defaultdict(list)
for r in csv.DictReader(open("histogram.csv")):
    series[r["definition"]].append((float(r["lower"]), float(r["upper"]), int(r["count"])))
fig, axes = plt.subplots(1, len(series), figsize=(4 * len(series), 3.5), squeeze=False)
for ax, (name, bins) in zip(axes[0], series.items()):
    ax.bar([lo for lo, _, _ in bins], [c for _, _, c in bins],
           width=[hi - lo for lo, hi, _ in bins], align="edge")
    ax.set_title(name)
fig.tight_layout()
fig.savefig("histogram.png", dpi=150)
)";

int cmd_correlate(const Options& o) {
  const auto in = load(o);
  const auto r = run_cc(o, in.graph, DefinitionSet{});
  const auto c = correlate(r);
  const OutDir out(o.out);
  Json j;
  j["input"] = input_json(o, in);
  j["correlation"] = to_json(c);
  if (out.enabled()) {
    out.write("scatter.csv", [&](std::ostream& f) { write_cc_csv(f, in.graph, r, false); });
    out.write("correlation.csv", [&](std::ostream& f) { write_correlation_csv(f, c); });
    out.write_json("correlation.json", j);
    out.write("plot_scatter.py", [&](std::ostream& f) { f << kScatterScript; });
  }
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    write_correlation_csv(std::cout, c);
  }
  return kOk;
}

int cmd_hist(const Options& o, DefinitionSet defs) {
  const auto in = load(o);
  const auto r = run_cc(o, in.graph, defs);
  std::ostringstream csv;
  Json hists;
  bool header = true;
  for (Definition d : defs.members()) {
    const auto col = r.column(d);
    const auto hist = histogram(col, {.bins = o.bins});
    write_histogram_csv(csv, d, hist, header);
    header = false;
    hists[std::string(definition_name(d))] = to_json(hist);
  }
  const OutDir out(o.out);
  Json j;
  j["input"] = input_json(o, in);
  j["bins"] = o.bins;
  j["histograms"] = std::move(hists);
  if (out.enabled()) {
    out.write("histogram.csv", [&](std::ostream& f) { f << csv.str(); });
    out.write_json("histogram.json", j);
    out.write("plot_histogram.py", [&](std::ostream& f) { f << kHistogramScript; });
  }
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << csv.str();
  }
  return kOk;
}

int cmd_table1(const Options& o) {
  const auto t = table1_matrix();
  if (o.oracle) {
    const auto fx = canonical_fixtures();
    const Definition rows[] = {Definition::kOpsahl, Definition::kZhou, Definition::kBaseline, Definition::kProposed};
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < fx.size(); ++c) {
        if (!(std::abs(testkit::naive_cc(rows[r], fx[c].graph, fx[c].root) - t.values[r][c]) <= kOracleTol)) {
          throw InvalidInput(fmt::format("oracle mismatch: {} column {}", Table1::kRowNames[r], t.columns[c]));
        }
      }
    }
    std::cerr << "oracle: 28 entries agree\n";
  }
  const OutDir out(o.out);
  if (out.enabled()) {
    out.write("table1.csv", [&](std::ostream& f) { write_table1_csv(f, t); });
    out.write_json("table1.json", to_json(t));
  }
  if (o.json) {
    std::cout << to_json(t).dump(2) << '\n';
  } else {
    write_table1_text(std::cout, t);
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o, bool needs_input) {
  if (needs_input) {
    sub->add_option("input", o.input, "Dataset: Benson prefix, its -nverts.txt file, or its directory; or an edge list")
        ->required();
    sub->add_option("--format", o.format, "Input layout")
        ->check(CLI::IsMember({"benson", "edgelist"}))
        ->capture_default_str();
    sub->add_flag("--drop-singletons", o.drop_singletons, "Remove size-1 hyperedges before deduplication");
    sub->add_flag("--no-lcc", o.no_lcc, "Keep every component instead of the largest one");
    sub->add_option("--max-edge-size", o.max_edge_size, "Ignore hyperedges larger than this (0: no limit)");
    sub->add_option("--threads", o.threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  }
  sub->add_flag("--json", o.json, "Print JSON on stdout");
  sub->add_option("--out", o.out, "Directory for CSV, JSON, and plot-script files");
  sub->add_flag("--oracle", o.oracle, "Cross-check results against the brute-force reference (small inputs)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local clustering coefficients and order-3 motif censuses for hypergraphs"};
  app.require_subcommand(1);
  Options o;

  auto* stats = app.add_subcommand("stats", "Node, hyperedge, and incidence counts with preprocessing provenance");
  auto* cc = app.add_subcommand("cc", "Per-node clustering coefficients and their averages");
  auto* motifs = app.add_subcommand("motifs", "Census of connected order-3 motifs");
  auto* corr = app.add_subcommand("correlate", "Pearson correlation of each coefficient with c_proposed");
  auto* hist = app.add_subcommand("hist", "Histogram of each coefficient over [0, 1]");
  auto* table1 = app.add_subcommand("table1", "Coefficients at the root of the seven rooted order-3 motifs");
  for (auto* s : {stats, cc, motifs, corr, hist}) add_common(s, o, true);
  add_common(table1, o, false);

  const auto defs_check = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          DefinitionSet::parse(s);
        } catch (const InvalidInput& e) {
          return e.what();
        }
        return {};
      },
      "DEFS");
  for (auto* s : {cc, hist}) {
    s->add_option("--only", o.only, "Comma-separated subset of proposed,opsahl,zhou,baseline")
        ->check(defs_check)
        ->capture_default_str();
  }
  hist->add_option("--bins", o.bins, "Equal-width bins on [0, 1]")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20))
      ->capture_default_str();
  motifs->add_option("--motif-induction", o.induction, "Which hyperedges shape a triple's pattern")
      ->check(CLI::IsMember({"subset", "intersect"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*stats) return cmd_stats(o);
    if (*cc) return cmd_cc(o, DefinitionSet::parse(o.only));
    if (*motifs) return cmd_motifs(o);
    if (*corr) return cmd_correlate(o);
    if (*hist) return cmd_hist(o, DefinitionSet::parse(o.only));
    if (*table1) return cmd_table1(o);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCompute;
  }
  return kUsage;
}
