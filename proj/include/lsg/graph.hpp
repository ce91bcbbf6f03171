#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lsg/bitset.hpp"

namespace lsg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Self-loops are rejected and duplicate edges are ignored, so adjacency is
/// always symmetric and simple. Dense bitset views are produced on demand for
/// induced subgraphs (see DenseGraph / SmallGraph) where clique and
/// independent-set enumeration need word-parallel intersections.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 1'000'000;

  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept { return m_; }

  /// Returns false if the edge was already present.
  bool add_edge(Vertex u, Vertex v);
  bool remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  /// (sum of degrees)/n; zero for the empty graph.
  double average_degree() const noexcept;

  /// Edges as (u, v) with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  /// G[vertices]; vertex i of the result is vertices[i].
  Graph induced(std::span<const Vertex> vertices) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  bool operator==(const Graph& o) const { return adj_ == o.adj_; }

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::vector<Vertex>> adj_;
  std::size_t m_ = 0;
  std::vector<std::string> labels_;
};

/// Graph on at most 64 vertices with one 64-bit adjacency mask per vertex.
struct SmallGraph {
  static constexpr std::size_t kMaxVertices = 64;

  std::size_t n = 0;
  std::vector<std::uint64_t> adj;

  std::uint64_t all() const noexcept {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }

  static SmallGraph from(const Graph& g);
  /// G[vertices], throwing GuardError beyond 64 vertices.
  static SmallGraph induced(const Graph& g, std::span<const Vertex> vertices);
};

/// Bitset-row adjacency of an induced subgraph of arbitrary size.
struct DenseGraph {
  std::vector<Bitset> rows;

  std::size_t n() const noexcept { return rows.size(); }
  static DenseGraph induced(const Graph& g, std::span<const Vertex> vertices);
  static DenseGraph from(const Graph& g);
};

std::vector<Vertex> all_vertices(const Graph& g);

/// True iff no edge of g joins two members of `set`.
bool is_independent(const Graph& g, std::span<const Vertex> set);

}  // namespace lsg
