#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "graflow/types.hpp"

namespace graflow {

/// Half-open range of edge ids belonging to one vertex, iterable directly:
/// `for (auto e : g.get_edges(v))`.
struct EdgeRange {
  edge_t start = 0;
  edge_t stop = 0;

  struct iterator {
    edge_t e;
    edge_t operator*() const { return e; }
    iterator& operator++() { ++e; return *this; }
    bool operator!=(const iterator& o) const { return e != o.e; }
    bool operator==(const iterator& o) const { return e == o.e; }
  };

  iterator begin() const { return {start}; }
  iterator end() const { return {stop}; }
  std::size_t size() const { return stop - start; }
  bool empty() const { return start == stop; }
};

struct WeightedEdge {
  vertex_t src;
  vertex_t dst;
  weight_t weight;
};

/// Immutable sparse graph stored as CSR (out-edges), with an optional CSC
/// view for pull traversals and optional random-partition metadata. All
/// queries are pure and safe for concurrent reads.
class Graph {
 public:
  Graph() = default;

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return csr_column_indices_.size(); }

  EdgeRange get_edges(vertex_t v) const {
    if (v >= num_vertices_)
      throw std::out_of_range("get_edges: vertex " + std::to_string(v) +
                              " out of range");
    return {csr_row_offsets_[v], csr_row_offsets_[v + 1]};
  }

  vertex_t get_dest_vertex(edge_t e) const {
    check_edge(e);
    return csr_column_indices_[e];
  }

  weight_t get_edge_weight(edge_t e) const {
    check_edge(e);
    return csr_values_[e];
  }

  // Binary search over row_offsets; no extra storage.
  vertex_t get_source_vertex(edge_t e) const {
    check_edge(e);
    auto it = std::upper_bound(csr_row_offsets_.begin(), csr_row_offsets_.end(), e);
    return static_cast<vertex_t>(it - csr_row_offsets_.begin() - 1);
  }

  const std::vector<edge_t>& row_offsets() const { return csr_row_offsets_; }
  const std::vector<vertex_t>& column_indices() const { return csr_column_indices_; }
  const std::vector<weight_t>& values() const { return csr_values_; }

  // --- CSC (transpose) view, present only after build_transpose ---

  bool has_transpose() const { return has_csc_; }

  /// Half-open range of CSC slots holding the in-edges of vertex u.
  EdgeRange in_edges(vertex_t u) const {
    if (!has_csc_) throw std::logic_error("in_edges: transpose not built");
    if (u >= num_vertices_)
      throw std::out_of_range("in_edges: vertex out of range");
    return {csc_col_offsets_[u], csc_col_offsets_[u + 1]};
  }

  /// Source vertex of the in-edge stored at CSC slot i.
  vertex_t in_edge_source(edge_t i) const { return csc_row_indices_[i]; }
  /// Original CSR edge id of the in-edge stored at CSC slot i.
  edge_t in_edge_id(edge_t i) const { return csc_edge_ids_[i]; }
  weight_t in_edge_weight(edge_t i) const { return csc_values_[i]; }

  // --- partition metadata ---

  bool has_partition() const { return !partition_.empty(); }
  const std::vector<vertex_t>& partition() const { return partition_; }

  friend Graph build_csr(const std::vector<WeightedEdge>& edges,
                         std::size_t num_vertices);
  friend Graph build_transpose(const Graph& g);
  friend Graph random_partition(const Graph& g, std::size_t k,
                                std::uint64_t seed);

 private:
  void check_edge(edge_t e) const {
    if (e >= num_edges())
      throw std::out_of_range("edge " + std::to_string(e) + " out of range");
  }

  std::size_t num_vertices_ = 0;
  std::vector<edge_t> csr_row_offsets_{0};
  std::vector<vertex_t> csr_column_indices_;
  std::vector<weight_t> csr_values_;

  bool has_csc_ = false;
  std::vector<edge_t> csc_col_offsets_;
  std::vector<vertex_t> csc_row_indices_;
  std::vector<weight_t> csc_values_;
  std::vector<edge_t> csc_edge_ids_;

  std::vector<vertex_t> partition_;
};

/// Builds an immutable CSR graph from an edge list. Within each vertex,
/// out-edges are sorted by destination then weight so layouts and edge ids
/// are reproducible. Parallel edges are retained.
inline Graph build_csr(const std::vector<WeightedEdge>& edges,
                       std::size_t num_vertices) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.src >= num_vertices || e.dst >= num_vertices)
      throw std::invalid_argument("build_csr: edge " + std::to_string(i) +
                                  " has vertex id out of range");
    if (!(e.weight >= 0) || !std::isfinite(e.weight))
      throw std::invalid_argument("build_csr: edge " + std::to_string(i) +
                                  " has negative or non-finite weight");
  }

  std::vector<WeightedEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return std::tie(a.src, a.dst, a.weight) < std::tie(b.src, b.dst, b.weight);
  });

  Graph g;
  g.num_vertices_ = num_vertices;
  g.csr_row_offsets_.assign(num_vertices + 1, 0);
  g.csr_column_indices_.reserve(sorted.size());
  g.csr_values_.reserve(sorted.size());
  for (const auto& e : sorted) {
    ++g.csr_row_offsets_[e.src + 1];
    g.csr_column_indices_.push_back(e.dst);
    g.csr_values_.push_back(e.weight);
  }
  for (std::size_t v = 0; v < num_vertices; ++v)
    g.csr_row_offsets_[v + 1] += g.csr_row_offsets_[v];
  return g;
}

/// Returns a copy of g with the CSC view populated. Each CSC slot keeps a
/// back-mapping to its original CSR edge id.
inline Graph build_transpose(const Graph& g) {
  Graph out = g;
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  out.csc_col_offsets_.assign(n + 1, 0);
  out.csc_row_indices_.assign(m, 0);
  out.csc_values_.assign(m, 0);
  out.csc_edge_ids_.assign(m, 0);

  for (edge_t e = 0; e < m; ++e)
    ++out.csc_col_offsets_[g.get_dest_vertex(e) + 1];
  for (std::size_t u = 0; u < n; ++u)
    out.csc_col_offsets_[u + 1] += out.csc_col_offsets_[u];

  std::vector<edge_t> cursor(out.csc_col_offsets_.begin(),
                             out.csc_col_offsets_.end() - 1);
  for (vertex_t v = 0; v < n; ++v) {
    for (auto e : g.get_edges(v)) {
      vertex_t u = g.get_dest_vertex(e);
      edge_t slot = cursor[u]++;
      out.csc_row_indices_[slot] = v;
      out.csc_values_[slot] = g.get_edge_weight(e);
      out.csc_edge_ids_[slot] = e;
    }
  }
  out.has_csc_ = true;
  return out;
}

/// Returns a copy of g with every vertex assigned a partition id drawn
/// uniformly from [0, k) by a seeded generator.
inline Graph random_partition(const Graph& g, std::size_t k,
                              std::uint64_t seed) {
  if (k == 0) throw std::invalid_argument("random_partition: k must be >= 1");
  Graph out = g;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> dist(0, k - 1);
  out.partition_.resize(g.num_vertices());
  for (auto& p : out.partition_) p = static_cast<vertex_t>(dist(rng));
  return out;
}

}  // namespace graflow
