#include "hypercc/ingest.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "hypercc/error.hpp"

namespace hypercc {
namespace {

bool is_unsigned_integer(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::ifstream open_or_throw(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw ParseError("cannot open '" + p.string() + "'");
  return in;
}

// Removes repeated labels inside one edge, keeping first occurrences.
std::size_t dedupe_labels(std::vector<std::string>& edge) {
  std::unordered_set<std::string> seen;
  std::vector<std::string> kept;
  kept.reserve(edge.size());
  for (auto& l : edge) {
    if (seen.insert(l).second) kept.push_back(std::move(l));
  }
  const std::size_t removed = edge.size() - kept.size();
  edge = std::move(kept);
  return removed;
}

}  // namespace

InputFormat parse_input_format(std::string_view name) {
  if (name == "benson") return InputFormat::kBenson;
  if (name == "edgelist") return InputFormat::kEdgeList;
  throw InvalidInput("unknown input format '" + std::string(name) + "'");
}

RawEdgeList parse_benson(std::istream& nverts, std::istream& simplices) {
  RawEdgeList raw;
  raw.format = "benson";
  std::string line;
  std::size_t simplex_line = 0;
  std::istringstream pending;
  auto next_member = [&](std::string& token) {
    while (!(pending >> token)) {
      if (!std::getline(simplices, line)) return false;
      ++simplex_line;
      pending.clear();
      pending.str(line);
    }
    return true;
  };

  std::size_t nverts_line = 0;
  while (std::getline(nverts, line)) {
    ++nverts_line;
    std::istringstream fields(line);
    std::string size_token;
    if (!(fields >> size_token)) continue;
    std::string extra;
    if (fields >> extra || !is_unsigned_integer(size_token) || size_token.size() > 18 ||
        std::stoull(size_token) == 0) {
      throw ParseError("nverts line " + std::to_string(nverts_line) + ": expected one positive integer, got '" +
                       line + "'");
    }
    const auto size = std::stoull(size_token);
    std::vector<std::string> edge;
    edge.reserve(size);
    for (std::size_t k = 0; k < size; ++k) {
      std::string token;
      if (!next_member(token)) {
        throw ParseError("simplices stream shorter than declared: nverts line " + std::to_string(nverts_line) +
                         " wants " + std::to_string(size) + " members, stream ended after " +
                         std::to_string(k));
      }
      if (!is_unsigned_integer(token)) {
        throw ParseError("simplices line " + std::to_string(simplex_line) + ": non-integer token '" + token + "'");
      }
      edge.push_back(std::move(token));
    }
    raw.edges.push_back(std::move(edge));
  }
  std::string token;
  if (next_member(token)) {
    throw ParseError("simplices stream longer than declared: extra token '" + token + "' at line " +
                     std::to_string(simplex_line));
  }
  return raw;
}

RawEdgeList parse_benson(const std::filesystem::path& nverts_path, const std::filesystem::path& simplices_path) {
  auto nverts = open_or_throw(nverts_path);
  auto simplices = open_or_throw(simplices_path);
  auto raw = parse_benson(nverts, simplices);
  raw.paths = {nverts_path.string(), simplices_path.string()};
  return raw;
}

std::pair<std::filesystem::path, std::filesystem::path> resolve_benson_paths(const std::filesystem::path& where) {
  namespace fs = std::filesystem;
  fs::path prefix = where;
  if (fs::is_directory(where)) {
    auto name = where.filename();
    if (name.empty()) name = where.parent_path().filename();
    prefix = where / name;
  } else {
    const std::string s = where.string();
    constexpr std::string_view kSuffix = "-nverts.txt";
    if (s.size() > kSuffix.size() && s.ends_with(kSuffix)) prefix = s.substr(0, s.size() - kSuffix.size());
  }
  return {prefix.string() + "-nverts.txt", prefix.string() + "-simplices.txt"};
}

RawEdgeList parse_edgelist(std::istream& in) {
  RawEdgeList raw;
  raw.format = "edgelist";
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::replace_if(line.begin(), line.end(), [](char c) { return c == ',' || c == '\t' || c == '\r'; }, ' ');
    std::istringstream fields(line);
    std::vector<std::string> edge;
    for (std::string label; fields >> label;) edge.push_back(std::move(label));
    if (edge.empty()) continue;
    if (const auto removed = dedupe_labels(edge); removed > 0) {
      raw.warnings.push_back("line " + std::to_string(lineno) + ": collapsed " + std::to_string(removed) +
                             " repeated label(s)");
    }
    raw.edges.push_back(std::move(edge));
  }
  return raw;
}

RawEdgeList parse_edgelist(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  auto raw = parse_edgelist(in);
  raw.paths = {path.string()};
  return raw;
}

RawEdgeList read_input(const std::filesystem::path& path, InputFormat format) {
  if (format == InputFormat::kEdgeList) return parse_edgelist(path);
  const auto [nverts, simplices] = resolve_benson_paths(path);
  return parse_benson(nverts, simplices);
}

Preprocessed preprocess(const RawEdgeList& raw, const PreprocessOptions& opts) {
  Provenance prov;
  prov.raw_edge_count = raw.edges.size();

  std::vector<std::vector<std::string>> edges;
  edges.reserve(raw.edges.size());
  for (const auto& e : raw.edges) {
    auto copy = e;
    prov.in_edge_duplicates += dedupe_labels(copy);
    if (copy.empty()) throw InvalidInput("hyperedge with no members");
    if (opts.drop_singletons && copy.size() == 1) {
      ++prov.singletons_removed;
      continue;
    }
    edges.push_back(std::move(copy));
  }
  if (edges.empty()) throw InvalidInput("no nodes after preprocessing");

  auto built = Hypergraph::build(edges);
  prov.duplicates_removed = built.duplicates_removed;
  Hypergraph g = std::move(built.graph);
  if (opts.take_lcc) {
    const auto before_nodes = g.num_nodes();
    const auto before_edges = g.num_edges();
    g = largest_connected_component(g);
    prov.nodes_dropped_by_lcc = before_nodes - g.num_nodes();
    prov.edges_dropped_by_lcc = before_edges - g.num_edges();
  }
  if (g.num_nodes() == 0) throw InvalidInput("no nodes after preprocessing");
  prov.nodes = g.num_nodes();
  prov.edges = g.num_edges();
  prov.bipartite_edges = g.num_incidences();
  return {std::move(g), prov};
}

RawEdgeList to_raw(const Hypergraph& h) {
  RawEdgeList raw;
  raw.format = "memory";
  raw.edges.reserve(h.num_edges());
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    std::vector<std::string> labels;
    for (NodeId v : h.edge(e)) labels.push_back(h.label(v));
    raw.edges.push_back(std::move(labels));
  }
  return raw;
}

Hypergraph restrict_edge_size(const Hypergraph& h, std::size_t max_size) {
  if (max_size == 0) return h;
  std::vector<std::vector<NodeId>> kept;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    if (h.edge_size(e) <= max_size) {
      const auto m = h.edge(e);
      kept.emplace_back(m.begin(), m.end());
    }
  }
  return Hypergraph::from_indexed(h.labels(), std::move(kept));
}

void write_edgelist(std::ostream& out, const Hypergraph& h) {
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto m = h.edge(e);
    for (std::size_t i = 0; i < m.size(); ++i) out << (i ? " " : "") << h.label(m[i]);
    out << '\n';
  }
}

void write_benson(std::ostream& nverts, std::ostream& simplices, const Hypergraph& h) {
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    nverts << h.edge_size(e) << '\n';
    for (NodeId v : h.edge(e)) simplices << h.label(v) << '\n';
  }
}

}  // namespace hypercc
