#include <doctest.h>

#include "../corpus.hpp"
#include "lsg/embedding.hpp"
#include "lsg/errors.hpp"
#include "lsg/gen.hpp"
#include "lsg/sparsity.hpp"

using namespace lsg;

namespace {

EmbeddingResult boost_uniform(const Graph& g, std::size_t delta, double k = 1, int r = 2) {
  const std::vector<double> ks(g.n(), k);
  const std::vector<int> rs(g.n(), r);
  return min_degree_boost(g, delta, ks, rs);
}

}  // namespace

TEST_CASE("path on three vertices doubles to a six-cycle") {
  const auto res = boost_uniform(gen::path(3), 2);
  CHECK(res.j == 1);
  CHECK(res.g_prime.n() == 6);
  CHECK(res.g_prime.edge_count() == 6);
  CHECK(res.g_prime.min_degree() == 2);
  CHECK(res.g_prime.max_degree() == 2);
  CHECK(count_copies(res.g_prime, gen::cycle(6)) == 1);
  CHECK(res.homs.size() == 2);
  CHECK(res.homs[1] == std::vector<Vertex>{3, 4, 5});
}

TEST_CASE("claw boosts to a cubic graph") {
  const auto res = boost_uniform(gen::star(3), 3);
  CHECK(res.j == 2);
  CHECK(res.g_prime.n() == 16);
  CHECK(res.g_prime.min_degree() == 3);
  CHECK(res.g_prime.max_degree() == 3);
  CHECK(verify_embedding(gen::star(3), res, 3).ok);
}

TEST_CASE("no doubling when the minimum degree already suffices") {
  const Graph pet = gen::petersen();
  const auto res = boost_uniform(pet, 2);
  CHECK(res.j == 0);
  CHECK(res.homs.size() == 1);
  CHECK(res.g_prime.edges() == pet.edges());
  CHECK_THROWS_AS(boost_uniform(pet, 4), PreconditionError);
}

TEST_CASE("embedding invariants on random graphs") {
  for (const Graph& g : corpus::random_graphs(40, 1, 9, 31, 4)) {
    const std::size_t delta = g.max_degree();
    const auto res = boost_uniform(g, delta, 2, 3);
    const auto check = verify_embedding(g, res, delta);
    CHECK_MESSAGE(check.ok, check.failed_invariant, ": ", check.detail);
    CHECK(res.g_prime.n() == g.n() << res.j);
    CHECK(res.g_prime.min_degree() >= delta);
    CHECK(res.g_prime.max_degree() == delta);
    // the added twin is isolated inside every neighbourhood
    for (const auto& phi : res.homs)
      for (Vertex v = 0; v < g.n(); ++v)
        for (int r = 2; r <= 3; ++r)
          CHECK(count_cliques(res.g_prime, res.g_prime.neighbors(phi[v]), r) ==
                count_cliques(g, g.neighbors(v), r));
  }
}

TEST_CASE("verifier catches broken embeddings") {
  const Graph g = gen::path(4);
  auto res = boost_uniform(g, 2);
  REQUIRE(verify_embedding(g, res, 2).ok);

  auto missing = res;
  Graph h(missing.g_prime.n());
  const auto edges = missing.g_prime.edges();
  for (std::size_t i = 1; i < edges.size(); ++i) h.add_edge(edges[i].first, edges[i].second);
  missing.g_prime = h;
  CHECK_FALSE(verify_embedding(g, missing, 2).ok);

  auto overlap = res;
  overlap.homs[1][0] = overlap.homs[0][0];
  const auto c = verify_embedding(g, overlap, 2);
  CHECK_FALSE(c.ok);
  CHECK(c.failed_invariant == "I4");

  auto params = res;
  params.k_tilde[res.homs[1][0]] = 99;
  CHECK(verify_embedding(g, params, 2).failed_invariant == "maps");
}
