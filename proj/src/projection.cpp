#include "hypercc/projection.hpp"

#include <algorithm>
#include <ostream>

#include "hypercc/format.hpp"

namespace hypercc {
namespace detail {
namespace {

constexpr std::uint64_t pair_key(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct PairEntry {
  std::uint64_t key;
  std::uint32_t size;
};

}  // namespace

PairTable build_pair_table(const Hypergraph& h, const ProjectionOptions& opts) {
  std::vector<PairEntry> entries;
  std::size_t total = 0;
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const std::size_t s = h.edge_size(e);
    if (opts.max_edge_size != 0 && s > opts.max_edge_size) continue;
    total += s * (s - 1) / 2;
  }
  entries.reserve(total);
  for (EdgeId e = 0; e < h.num_edges(); ++e) {
    const auto members = h.edge(e);
    const auto s = static_cast<std::uint32_t>(members.size());
    if (opts.max_edge_size != 0 && s > opts.max_edge_size) continue;
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        entries.push_back({pair_key(members[i], members[j]), s});
      }
    }
  }
  std::sort(entries.begin(), entries.end(), [](const PairEntry& a, const PairEntry& b) {
    return a.key < b.key || (a.key == b.key && a.size < b.size);
  });

  PairTable table;
  table.num_nodes = h.num_nodes();
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i;
    while (j < entries.size() && entries[j].key == entries[i].key) ++j;
    table.keys.push_back(entries[i].key);
    table.min_size.push_back(entries[i].size);
    table.cover_count.push_back(static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return table;
}

SymmetricCsr SymmetricCsr::from(const PairTable& table) {
  const std::size_t n = table.num_nodes;
  SymmetricCsr csr;
  csr.offsets.assign(n + 1, 0);
  for (std::uint64_t key : table.keys) {
    ++csr.offsets[(key >> 32) + 1];
    ++csr.offsets[(key & 0xffffffffU) + 1];
  }
  for (std::size_t v = 0; v < n; ++v) csr.offsets[v + 1] += csr.offsets[v];
  csr.targets.resize(2 * table.keys.size());
  csr.slot.resize(2 * table.keys.size());
  std::vector<std::size_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  // Keys ascend by (u, v): every row receives its smaller neighbors first
  // (as the second coordinate), then its larger ones, so rows come out sorted.
  for (std::size_t i = 0; i < table.keys.size(); ++i) {
    const auto u = static_cast<NodeId>(table.keys[i] >> 32);
    const auto v = static_cast<NodeId>(table.keys[i] & 0xffffffffU);
    csr.targets[cursor[u]] = v;
    csr.slot[cursor[u]++] = i;
    csr.targets[cursor[v]] = u;
    csr.slot[cursor[v]++] = i;
  }
  return csr;
}

std::size_t SymmetricCsr::find(NodeId u, NodeId v) const {
  if (u + 1 >= offsets.size()) return npos;
  const auto first = targets.begin() + offsets[u];
  const auto last = targets.begin() + offsets[u + 1];
  const auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return npos;
  return static_cast<std::size_t>(it - targets.begin());
}

}  // namespace detail

WeightedProjection WeightedProjection::from(const Hypergraph& h, const ProjectionOptions& opts) {
  return from(detail::build_pair_table(h, opts));
}

WeightedProjection WeightedProjection::from(const detail::PairTable& table) {
  WeightedProjection p;
  p.csr_ = detail::SymmetricCsr::from(table);
  p.weights_.resize(p.csr_.targets.size());
  for (std::size_t k = 0; k < p.weights_.size(); ++k) {
    p.weights_[k] = 1.0 / static_cast<double>(table.min_size[p.csr_.slot[k]] - 1);
  }
  return p;
}

double WeightedProjection::weight(NodeId u, NodeId v) const {
  const auto k = csr_.find(u, v);
  return k == detail::SymmetricCsr::npos ? 0.0 : weights_[k];
}

PairCoverage PairCoverage::from(const Hypergraph& h, const ProjectionOptions& opts) {
  return from(detail::build_pair_table(h, opts));
}

PairCoverage PairCoverage::from(const detail::PairTable& table) {
  PairCoverage c;
  c.csr_ = detail::SymmetricCsr::from(table);
  c.counts_.resize(c.csr_.targets.size());
  for (std::size_t k = 0; k < c.counts_.size(); ++k) c.counts_[k] = table.cover_count[c.csr_.slot[k]];
  return c;
}

std::uint32_t PairCoverage::count(NodeId u, NodeId v) const {
  const auto k = csr_.find(u, v);
  return k == detail::SymmetricCsr::npos ? 0 : counts_[k];
}

SimpleAdjacency SimpleAdjacency::from(const Hypergraph& h, const ProjectionOptions& opts) {
  return from(detail::build_pair_table(h, opts));
}

SimpleAdjacency SimpleAdjacency::from(const detail::PairTable& table) {
  SimpleAdjacency a;
  a.csr_ = detail::SymmetricCsr::from(table);
  a.csr_.slot.clear();
  a.csr_.slot.shrink_to_fit();
  return a;
}

WeightedProjection weighted_projection(const Hypergraph& h, const ProjectionOptions& opts) {
  return WeightedProjection::from(h, opts);
}

SimpleAdjacency clique_expansion(const Hypergraph& h, const ProjectionOptions& opts) {
  return SimpleAdjacency::from(h, opts);
}

PairCoverage pair_coverage(const Hypergraph& h, const ProjectionOptions& opts) {
  return PairCoverage::from(h, opts);
}

void write_weights_csv(std::ostream& out, const Hypergraph& h, const WeightedProjection& proj) {
  out << "u,v,weight\n";
  for (NodeId u = 0; u < proj.num_nodes(); ++u) {
    const auto nbrs = proj.neighbors(u);
    const auto w = proj.weights(u);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      if (nbrs[k] <= u) continue;
      out << csv_field(h.label(u)) << ',' << csv_field(h.label(nbrs[k])) << ',' << format_real(w[k])
          << '\n';
    }
  }
}

}  // namespace hypercc
