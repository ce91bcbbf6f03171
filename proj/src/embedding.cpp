#include "lsg/embedding.hpp"

#include <string>
#include <vector>

#include "lsg/errors.hpp"
#include "lsg/sparsity.hpp"

namespace lsg {

EmbeddingResult min_degree_boost(const Graph& g, std::size_t delta, std::span<const double> k,
                                 std::span<const int> r) {
  require(k.size() == g.n() && r.size() == g.n(), "per-vertex k and r", "k and r need one entry per vertex");
  require(delta <= g.max_degree(), "delta <= max degree", "target minimum degree exceeds the maximum degree");
  const std::size_t j = delta > g.min_degree() ? delta - g.min_degree() : 0;
  guard(j <= kMaxDoublingDepth, "j <= 20", "doubling depth " + std::to_string(j) + " exceeds 20");
  guard(g.n() << j <= Graph::kMaxVertices, "|V(G')| <= 10^6", "embedding would exceed the vertex limit");

  EmbeddingResult res;
  res.j = j;
  res.g_prime = g;
  res.k_tilde.assign(k.begin(), k.end());
  res.r_tilde.assign(r.begin(), r.end());
  std::vector<Vertex> identity(g.n());
  for (Vertex v = 0; v < g.n(); ++v) identity[v] = v;
  res.homs.push_back(std::move(identity));

  for (std::size_t round = 0; round < j; ++round) {
    const Graph& cur = res.g_prime;
    const std::size_t n = cur.n();
    const auto off = static_cast<Vertex>(n);
    Graph next(2 * n);
    for (auto [u, v] : cur.edges()) {
      next.add_edge(u, v);
      next.add_edge(u + off, v + off);
    }
    for (Vertex v = 0; v < n; ++v)
      if (cur.degree(v) < delta) next.add_edge(v, v + off);
    for (Vertex v = 0; v < n; ++v) {
      const std::size_t expect = cur.degree(v) + (cur.degree(v) < delta ? 1 : 0);
      if (next.degree(v) != expect || next.degree(v + off) != expect)
        throw InvariantError("degree evolution broken in round " + std::to_string(round));
    }
    const std::size_t homs = res.homs.size();
    for (std::size_t h = 0; h < homs; ++h) {
      std::vector<Vertex> shifted = res.homs[h];
      for (Vertex& x : shifted) x += off;
      res.homs.push_back(std::move(shifted));
    }
    res.k_tilde.resize(2 * n);
    res.r_tilde.resize(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
      res.k_tilde[v + n] = res.k_tilde[v];
      res.r_tilde[v + n] = res.r_tilde[v];
    }
    res.g_prime = std::move(next);
  }

  EmbeddingCheck check = verify_embedding(g, res, delta);
  if (!check.ok) throw InvariantError("embedding failed " + check.failed_invariant + ": " + check.detail);
  return res;
}

EmbeddingCheck verify_embedding(const Graph& g, const EmbeddingResult& res, std::size_t delta) {
  auto fail = [](std::string inv, std::string detail) { return EmbeddingCheck{false, std::move(inv), std::move(detail)}; };
  const Graph& gp = res.g_prime;
  const std::size_t j = delta > g.min_degree() ? delta - g.min_degree() : 0;
  if (res.j != j) return fail("I3", "depth " + std::to_string(res.j) + " but expected " + std::to_string(j));
  if (j >= 64 || gp.n() != (g.n() << j))
    return fail("I3", "|V(G')| = " + std::to_string(gp.n()) + ", expected |V(G)| 2^j");
  if (res.homs.size() != (std::size_t{1} << j)) return fail("I4", "expected 2^j homomorphisms");

  std::vector<int> owner(gp.n(), -1);
  for (std::size_t h = 0; h < res.homs.size(); ++h) {
    const auto& phi = res.homs[h];
    if (phi.size() != g.n()) return fail("I4", "homomorphism " + std::to_string(h) + " has wrong domain size");
    for (Vertex x : phi) {
      if (x >= gp.n()) return fail("I4", "homomorphism " + std::to_string(h) + " leaves V(G')");
      if (owner[x] >= 0)
        return fail("I4", "vertex " + std::to_string(x) + " is in the images of maps " + std::to_string(owner[x]) +
                              " and " + std::to_string(h));
      owner[x] = static_cast<int>(h);
    }
    for (auto [u, v] : g.edges())
      if (!gp.has_edge(phi[u], phi[v]))
        return fail("I4", "homomorphism " + std::to_string(h) + " sends edge (" + std::to_string(u) + ", " +
                              std::to_string(v) + ") to a non-edge");
  }
  if (gp.n() > 0 && gp.min_degree() < delta)
    return fail("I1", "min degree " + std::to_string(gp.min_degree()) + " < " + std::to_string(delta));
  if (gp.max_degree() != g.max_degree())
    return fail("I2", "max degree " + std::to_string(gp.max_degree()) + " != " + std::to_string(g.max_degree()));

  if (res.k_tilde.size() != gp.n() || res.r_tilde.size() != gp.n()) return fail("maps", "k~ or r~ has wrong size");
  for (const auto& phi : res.homs)
    for (Vertex v = 0; v < g.n(); ++v)
      if (res.k_tilde[phi[v]] != res.k_tilde[v] || res.r_tilde[phi[v]] != res.r_tilde[v])
        return fail("maps", "k~ or r~ not constant along the copies of vertex " + std::to_string(v));

  bool valid_params = true;
  for (std::size_t v = 0; v < g.n(); ++v) valid_params = valid_params && res.r_tilde[v] >= 2 && res.k_tilde[v] >= 0;
  if (valid_params && g.n() > 0) {
    std::span<const double> k(res.k_tilde.data(), g.n());
    std::span<const int> r(res.r_tilde.data(), g.n());
    if (certify_local_sparsity(g, k, r).pass && !certify_local_sparsity(gp, res.k_tilde, res.r_tilde).pass)
      return fail("sparsity", "G is locally sparse but G' is not");
  }
  return {};
}

}  // namespace lsg
