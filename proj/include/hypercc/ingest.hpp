#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hypercc/hypergraph.hpp"

namespace hypercc {

enum class InputFormat { kBenson, kEdgeList };

// "benson" or "edgelist"; throws InvalidInput otherwise.
InputFormat parse_input_format(std::string_view name);

// Hyperedges exactly as read, in file order, duplicates included.
struct RawEdgeList {
  std::vector<std::vector<std::string>> edges;
  std::string format;
  std::vector<std::string> paths;
  std::vector<std::string> warnings;
};

// Benson layout: one hyperedge size per line in `nverts`, member ids streamed
// in `simplices`. Throws ParseError on malformed or mismatched input.
RawEdgeList parse_benson(std::istream& nverts, std::istream& simplices);
RawEdgeList parse_benson(const std::filesystem::path& nverts_path,
                         const std::filesystem::path& simplices_path);

// Locates `<prefix>-nverts.txt` and `<prefix>-simplices.txt`. `where` may be
// the prefix itself, the nverts file, or a directory named after the dataset.
std::pair<std::filesystem::path, std::filesystem::path> resolve_benson_paths(
    const std::filesystem::path& where);

// One hyperedge per line, labels split on spaces, tabs, or commas; '#' starts a
// comment. Blank lines are skipped and repeated labels within a line collapse
// with a warning.
RawEdgeList parse_edgelist(std::istream& in);
RawEdgeList parse_edgelist(const std::filesystem::path& path);

RawEdgeList read_input(const std::filesystem::path& path, InputFormat format);

struct PreprocessOptions {
  bool drop_singletons = false;
  bool take_lcc = true;
  // Duplicate hyperedges are always removed.
};

struct Provenance {
  std::size_t raw_edge_count = 0;
  std::size_t in_edge_duplicates = 0;  // repeated labels collapsed inside edges
  std::size_t singletons_removed = 0;
  std::size_t duplicates_removed = 0;
  std::size_t edges_dropped_by_lcc = 0;
  std::size_t nodes_dropped_by_lcc = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t bipartite_edges = 0;

  // raw = final + singletons + duplicates + LCC drops.
  bool balanced() const {
    return raw_edge_count == edges + singletons_removed + duplicates_removed + edges_dropped_by_lcc;
  }
};

struct Preprocessed {
  Hypergraph graph;
  Provenance provenance;
};

// In-edge dedup, optional singleton drop, duplicate-hyperedge removal (first
// occurrence kept), then optional largest-component extraction.
// Throws InvalidInput("no nodes after preprocessing") when nothing survives.
Preprocessed preprocess(const RawEdgeList& raw, const PreprocessOptions& opts = {});

// Hypergraph back to labelled edges (edge order preserved).
RawEdgeList to_raw(const Hypergraph& h);

// Keeps only hyperedges with at most `max_size` members; 0 keeps everything.
Hypergraph restrict_edge_size(const Hypergraph& h, std::size_t max_size);

void write_edgelist(std::ostream& out, const Hypergraph& h);
void write_benson(std::ostream& nverts, std::ostream& simplices, const Hypergraph& h);

}  // namespace hypercc
