#include "lsg/gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "lsg/errors.hpp"
#include "lsg/sparsity.hpp"

namespace lsg::gen {

namespace {

std::vector<Edge> all_pairs(std::size_t n) {
  std::vector<Edge> out;
  out.reserve(n * (n - (n > 0)) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

std::vector<Vertex> common(const Graph& g, Vertex a, Vertex b) {
  auto na = g.neighbors(a), nb = g.neighbors(b);
  std::vector<Vertex> out;
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

}  // namespace

Graph gnp(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0 && p <= 1, "p in [0, 1]", "edge probability out of range");
  std::mt19937_64 rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (std::generate_canonical<double, 53>(rng) < p) g.add_edge(u, v);
  return g;
}

Graph random_triangle_free(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::size_t a = n / 2, b = n - n / 2;
  require(m <= a * b, "m <= floor(n/2) ceil(n/2)", "too many edges for a bipartite graph on n vertices");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> cross;
  cross.reserve(a * b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = a; j < n; ++j) cross.emplace_back(order[i], order[j]);
  // partial Fisher-Yates: only the first m positions are needed
  for (std::size_t i = 0; i < m; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, cross.size() - 1);
    std::swap(cross[i], cross[pick(rng)]);
  }
  Graph g(n);
  for (std::size_t i = 0; i < m; ++i) g.add_edge(cross[i].first, cross[i].second);
  return g;
}

Graph random_locally_sparse(std::size_t n, std::size_t max_degree, double k, int r, std::uint64_t seed) {
  require(k >= 0, "k >= 0", "sparsity budget must be nonnegative");
  require(r >= 2, "r >= 2", "clique order must be at least 2");
  const std::uint64_t budget = floor_budget(k);
  std::mt19937_64 rng(seed);
  std::vector<Edge> cand = all_pairs(n);
  std::shuffle(cand.begin(), cand.end(), rng);
  Graph g(n);
  std::vector<std::uint64_t> count(n, 0);  // K_r copies inside N(v)
  for (auto [u, v] : cand) {
    if (g.degree(u) >= max_degree || g.degree(v) >= max_degree) continue;
    const std::vector<Vertex> shared = common(g, u, v);
    // cliques gained in N(u) and N(v) contain the other endpoint
    const std::uint64_t gain_uv = count_cliques(g, shared, r - 1);
    if (count[u] + gain_uv > budget || count[v] + gain_uv > budget) continue;
    // each w in N(u) & N(v) sees the new edge uv inside its neighbourhood
    std::vector<std::uint64_t> gain_w(shared.size());
    bool ok = true;
    for (std::size_t i = 0; i < shared.size() && ok; ++i) {
      const std::vector<Vertex> inner = common(g, shared[i], u);
      std::vector<Vertex> triple;
      std::set_intersection(inner.begin(), inner.end(), shared.begin(), shared.end(), std::back_inserter(triple));
      gain_w[i] = count_cliques(g, triple, r - 2);
      ok = count[shared[i]] + gain_w[i] <= budget;
    }
    if (!ok) continue;
    g.add_edge(u, v);
    count[u] += gain_uv;
    count[v] += gain_uv;
    for (std::size_t i = 0; i < shared.size(); ++i) count[shared[i]] += gain_w[i];
  }
  for (Vertex v = 0; v < n; ++v)
    if (count[v] != count_neighborhood_cliques(g, v, r))
      throw InvariantError("incremental clique count drifted at vertex " + std::to_string(v));
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(std::size_t n) {
  require(n >= 3, "n >= 3", "a cycle needs at least three vertices");
  Graph g = path(n);
  g.add_edge(0, static_cast<Vertex>(n - 1));
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (auto [u, v] : all_pairs(n)) g.add_edge(u, v);
  return g;
}

Graph empty(std::size_t n) { return Graph(n); }

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph kneser(std::size_t n, std::size_t k) {
  require(n <= 63 && k <= n, "k <= n <= 63", "kneser parameters out of range");
  std::vector<std::uint64_t> sets;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    std::uint64_t m = 0;
    for (auto i : idx) m |= std::uint64_t{1} << i;
    sets.push_back(m);
    std::size_t p = k;
    while (p > 0 && idx[p - 1] == n - k + p - 1) --p;
    if (p == 0) break;
    ++idx[p - 1];
    for (std::size_t q = p; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
  guard(sets.size() <= Graph::kMaxVertices, "C(n,k) <= 10^6", "kneser graph too large");
  Graph g(sets.size());
  for (Vertex a = 0; a < sets.size(); ++a)
    for (Vertex b = a + 1; b < sets.size(); ++b)
      if ((sets[a] & sets[b]) == 0) g.add_edge(a, b);
  return g;
}

Graph complete_multipartite(const std::vector<std::size_t>& parts) {
  std::vector<std::size_t> part_of;
  for (std::size_t p = 0; p < parts.size(); ++p) part_of.insert(part_of.end(), parts[p], p);
  Graph g(part_of.size());
  for (auto [u, v] : all_pairs(part_of.size()))
    if (part_of[u] != part_of[v]) g.add_edge(u, v);
  return g;
}

Graph family(const std::string& name, const std::vector<std::size_t>& params) {
  auto need = [&](std::size_t count) {
    require(params.size() == count, "parameter count",
            name + " takes " + std::to_string(count) + " parameter(s)");
  };
  if (name == "path") return need(1), path(params[0]);
  if (name == "cycle") return need(1), cycle(params[0]);
  if (name == "complete") return need(1), complete(params[0]);
  if (name == "empty") return need(1), empty(params[0]);
  if (name == "star") return need(1), star(params[0]);
  if (name == "petersen") return need(0), petersen();
  if (name == "kneser") return need(2), kneser(params[0], params[1]);
  if (name == "multipartite") {
    require(!params.empty(), "at least one part", "multipartite needs part sizes");
    return complete_multipartite(params);
  }
  throw PreconditionError("known family", "unknown family '" + name + "'");
}

}  // namespace lsg::gen
