#include "lsg/sparsity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "lsg/errors.hpp"

namespace lsg {

namespace {

constexpr std::size_t kMaxPatternVertices = 10;

// Counts cliques of size `depth` drawn from `cand` by ordered extension: each
// clique is reached exactly once through its increasing vertex sequence.
std::uint64_t count_from(const DenseGraph& d, Bitset cand, int depth) {
  if (depth == 1) return cand.count();
  if (depth == 2) {
    std::uint64_t twice = 0;
    cand.for_each([&](std::size_t v) { twice += Bitset::intersection_count(d.rows[v], cand); });
    return twice / 2;
  }
  std::uint64_t total = 0;
  Bitset rest = cand;
  cand.for_each([&](std::size_t v) {
    rest.reset(v);
    Bitset next = rest & d.rows[v];
    if (next.count() >= static_cast<std::size_t>(depth - 1)) total += count_from(d, next, depth - 1);
  });
  return total;
}

struct Pattern {
  std::size_t n = 0;
  std::vector<std::vector<std::size_t>> earlier_nbrs;  // in search order
  std::vector<std::size_t> order;
};

Pattern plan_pattern(const Graph& f) {
  Pattern p;
  p.n = f.n();
  std::vector<char> placed(p.n, 0);
  std::vector<std::size_t> pos(p.n, 0);
  for (std::size_t step = 0; step < p.n; ++step) {
    // most already-placed neighbours first, then highest degree
    std::size_t best = p.n;
    std::size_t best_links = 0;
    for (std::size_t v = 0; v < p.n; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex w : f.neighbors(static_cast<Vertex>(v))) links += placed[w];
      if (best == p.n || links > best_links ||
          (links == best_links && f.degree(static_cast<Vertex>(v)) > f.degree(static_cast<Vertex>(best)))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = 1;
    pos[best] = step;
    p.order.push_back(best);
  }
  p.earlier_nbrs.resize(p.n);
  for (std::size_t i = 0; i < p.n; ++i)
    for (Vertex w : f.neighbors(static_cast<Vertex>(p.order[i])))
      if (pos[w] < i) p.earlier_nbrs[i].push_back(pos[w]);
  return p;
}

std::uint64_t count_embeddings(const DenseGraph& host, const Pattern& p, std::size_t i,
                               std::vector<std::size_t>& image, Bitset& used) {
  if (i == p.n) return 1;
  Bitset cand(host.n());
  if (p.earlier_nbrs[i].empty()) {
    for (std::size_t v = 0; v < host.n(); ++v) cand.set(v);
  } else {
    cand = host.rows[image[p.earlier_nbrs[i].front()]];
    for (std::size_t j = 1; j < p.earlier_nbrs[i].size(); ++j) cand &= host.rows[image[p.earlier_nbrs[i][j]]];
  }
  std::uint64_t total = 0;
  cand.for_each([&](std::size_t v) {
    if (used.test(v)) return;
    used.set(v);
    image[i] = v;
    total += count_embeddings(host, p, i + 1, image, used);
    used.reset(v);
  });
  return total;
}

std::uint64_t factorial(std::size_t r) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= r; ++i) f *= i;
  return f;
}

}  // namespace

std::uint64_t count_cliques(const Graph& g, std::span<const Vertex> subset, int r) {
  require(r >= 0, "r >= 0", "clique order must be nonnegative");
  if (r == 0) return 1;
  if (static_cast<std::size_t>(r) > subset.size()) return 0;
  if (r == 1) return subset.size();
  DenseGraph d = DenseGraph::induced(g, subset);
  Bitset all(d.n());
  for (std::size_t i = 0; i < d.n(); ++i) all.set(i);
  return count_from(d, all, r);
}

std::uint64_t count_neighborhood_cliques(const Graph& g, Vertex v, int r) {
  return count_cliques(g, g.neighbors(v), r);
}

std::uint64_t floor_budget(double k) {
  require(!std::isnan(k), "k is a number", "sparsity budget is NaN");
  if (k < 0) return 0;
  if (k >= 1.8e19) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(std::floor(k));
}

SparsityCertificate certify_local_sparsity(const Graph& g, std::span<const double> k,
                                           std::span<const int> r) {
  require(k.size() == g.n() && r.size() == g.n(), "per-vertex maps cover V(G)",
          "k and r maps must have one entry per vertex");
  SparsityCertificate cert;
  cert.k.assign(k.begin(), k.end());
  cert.r.assign(r.begin(), r.end());
  cert.counts.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    require(r[v] >= 2, "r(v) >= 2", "clique order at vertex " + std::to_string(v) + " below 2");
    require(k[v] >= 0, "k(v) >= 0", "negative budget at vertex " + std::to_string(v));
    cert.counts[v] = count_neighborhood_cliques(g, v, r[v]);
    auto budget = floor_budget(k[v]);
    if (cert.counts[v] > budget) {
      cert.pass = false;
      cert.violations.push_back({v, cert.counts[v], budget});
    }
  }
  return cert;
}

SparsityCertificate certify_local_sparsity(const Graph& g, double k, int r) {
  std::vector<double> ks(g.n(), k);
  std::vector<int> rs(g.n(), r);
  return certify_local_sparsity(g, ks, rs);
}

bool is_sparse(const Graph& g, double k, int r) {
  auto all = all_vertices(g);
  return count_cliques(g, all, r) <= floor_budget(k);
}

std::uint64_t count_copies(const Graph& g, const Graph& f) {
  guard(f.n() <= kMaxPatternVertices, "|V(F)| <= 10", "pattern graph limited to 10 vertices");
  if (f.n() > g.n()) return 0;
  if (f.n() == 0) return 1;
  DenseGraph host = DenseGraph::from(g);
  Pattern p = plan_pattern(f);
  std::vector<std::size_t> image(p.n, 0);
  Bitset used(g.n());
  std::uint64_t embeddings = count_embeddings(host, p, 0, image, used);
  return embeddings / automorphism_count(f);
}

std::uint64_t automorphism_count(const Graph& f) {
  guard(f.n() <= kMaxPatternVertices, "|V(F)| <= 10", "pattern graph limited to 10 vertices");
  const std::size_t n = f.n();
  SmallGraph s = SmallGraph::from(f);
  std::vector<std::size_t> image(n, 0);
  std::uint64_t used = 0;
  std::uint64_t count = 0;
  auto adjacent = [&](std::size_t a, std::size_t b) { return (s.adj[a] >> b) & 1; };
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      ++count;
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if ((used >> c) & 1) continue;
      if (f.degree(static_cast<Vertex>(c)) != f.degree(static_cast<Vertex>(i))) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = adjacent(i, j) == adjacent(c, image[j]);
      if (!ok) continue;
      used |= std::uint64_t{1} << c;
      image[i] = c;
      self(self, i + 1);
      used &= ~(std::uint64_t{1} << c);
    }
  };
  extend(extend, 0);
  return count;
}

double convert_to_clique_sparsity(double k, const Graph& f) {
  require(k >= 0, "k >= 0", "sparsity budget must be nonnegative");
  return std::ceil(k) * static_cast<double>(automorphism_count(f)) /
         static_cast<double>(factorial(f.n()));
}

}  // namespace lsg
