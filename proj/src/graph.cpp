#include "lsg/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>

#include "lsg/errors.hpp"

namespace lsg {

Graph::Graph(std::size_t n) {
  guard(n <= kMaxVertices, "n <= 1e6", "graph exceeds 10^6 vertices");
  adj_.resize(n);
}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
  require(v < adj_.size(), "vertex in range",
          "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(adj_.size()));
}

bool Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  require(u != v, "no self-loops", "self-loop at vertex " + std::to_string(u));
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it != au.end() && *it == v) return false;
  au.insert(it, v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++m_;
  return true;
}

bool Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  auto& au = adj_[u];
  auto it = std::lower_bound(au.begin(), au.end(), v);
  if (it == au.end() || *it != v) return false;
  au.erase(it);
  auto& av = adj_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --m_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= adj_.size() || v >= adj_.size()) return false;
  const auto& au = adj_[u];
  return std::binary_search(au.begin(), au.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t d = 0;
  for (const auto& a : adj_) d = std::max(d, a.size());
  return d;
}

std::size_t Graph::min_degree() const noexcept {
  if (adj_.empty()) return 0;
  std::size_t d = adj_.front().size();
  for (const auto& a : adj_) d = std::min(d, a.size());
  return d;
}

double Graph::average_degree() const noexcept {
  if (adj_.empty()) return 0.0;
  return 2.0 * static_cast<double>(m_) / static_cast<double>(adj_.size());
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  std::unordered_map<Vertex, Vertex> index;
  index.reserve(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i) {
    check_vertex(vertices[i]);
    index.emplace(vertices[i], i);
  }
  Graph h(vertices.size());
  for (Vertex i = 0; i < vertices.size(); ++i)
    for (Vertex w : adj_[vertices[i]]) {
      auto it = index.find(w);
      if (it != index.end() && i < it->second) h.add_edge(i, it->second);
    }
  if (!labels_.empty()) {
    std::vector<std::string> l;
    for (Vertex v : vertices) l.push_back(labels_[v]);
    h.labels_ = std::move(l);
  }
  return h;
}

void Graph::set_labels(std::vector<std::string> labels) {
  require(labels.empty() || labels.size() == adj_.size(), "labels.size() == n",
          "label count does not match vertex count");
  labels_ = std::move(labels);
}

SmallGraph SmallGraph::from(const Graph& g) {
  auto all = all_vertices(g);
  return induced(g, all);
}

SmallGraph SmallGraph::induced(const Graph& g, std::span<const Vertex> vertices) {
  guard(vertices.size() <= kMaxVertices, "|S| <= 64",
        "bitmask view limited to 64 vertices, got " + std::to_string(vertices.size()));
  SmallGraph s;
  s.n = vertices.size();
  s.adj.assign(s.n, 0);
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j)
      if (g.has_edge(vertices[i], vertices[j])) {
        s.adj[i] |= std::uint64_t{1} << j;
        s.adj[j] |= std::uint64_t{1} << i;
      }
  return s;
}

DenseGraph DenseGraph::induced(const Graph& g, std::span<const Vertex> vertices) {
  DenseGraph d;
  d.rows.assign(vertices.size(), Bitset(vertices.size()));
  if (vertices.empty()) return d;
  // position of each selected vertex, via a dense lookup over the host graph
  std::vector<std::int64_t> pos(g.n(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : g.neighbors(vertices[i]))
      if (pos[w] >= 0) d.rows[i].set(static_cast<std::size_t>(pos[w]));
  return d;
}

DenseGraph DenseGraph::from(const Graph& g) {
  auto all = all_vertices(g);
  return induced(g, all);
}

std::vector<Vertex> all_vertices(const Graph& g) {
  std::vector<Vertex> v(g.n());
  std::iota(v.begin(), v.end(), Vertex{0});
  return v;
}

bool is_independent(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.n(), 0);
  for (Vertex v : set) {
    if (v >= g.n() || in[v]) return false;
    in[v] = 1;
  }
  for (Vertex v : set)
    for (Vertex w : g.neighbors(v))
      if (in[w]) return false;
  return true;
}

}  // namespace lsg
