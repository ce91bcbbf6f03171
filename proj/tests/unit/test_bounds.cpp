#include <doctest.h>

#include <cmath>
#include <numbers>

#include "../corpus.hpp"
#include "../oracles.hpp"
#include "lsg/bounds.hpp"
#include "lsg/errors.hpp"
#include "lsg/gen.hpp"
#include "lsg/hardcore.hpp"
#include "lsg/sparsity.hpp"

using namespace lsg;

TEST_CASE("greedy independent set") {
  CHECK(turan_iset(gen::cycle(5)).size() >= 2);
  const auto e = turan_iset(gen::empty(6));
  CHECK(e.size() == 6);
  CHECK(e.guarantee == doctest::Approx(6));
  CHECK(turan_iset(gen::petersen()).size() >= 3);
  CHECK(oracle::alpha(gen::petersen()) == 4);
  for (const Graph& g : corpus::random_graphs(60, 1, 30, 71)) {
    const auto w = turan_iset(g);
    CHECK(is_independent(g, w.vertices));
    CHECK(w.size() >= required_size(static_cast<double>(g.n()) / (1 + g.average_degree())));
  }
}

TEST_CASE("sparse_iset examples") {
  Graph one(16);
  one.add_edge(0, 1);
  const auto a = sparse_iset(one, 1, 2);
  CHECK(a.guarantee == doctest::Approx(8));
  CHECK(a.size() >= 8);

  const auto p = sparse_iset(gen::path(729), 1, 3);
  CHECK(p.guarantee == doctest::Approx(9));
  CHECK(p.size() >= 9);
  CHECK(is_independent(gen::path(729), p.vertices));

  const Graph tf = gen::random_triangle_free(800, 6000, 800);
  const auto w = sparse_iset(tf, 1, 3);
  CHECK(is_independent(tf, w.vertices));
  CHECK(w.size() >= 10);
  CHECK_FALSE(w.trace.empty());
}

TEST_CASE("sparse_iset preconditions") {
  CHECK_THROWS_AS(sparse_iset(gen::path(15), 1, 2), PreconditionError);
  CHECK_THROWS_AS(sparse_iset(gen::path(729), 0.5, 3), PreconditionError);
  CHECK_THROWS_AS(sparse_iset(gen::complete(16), 1, 2), PreconditionError);
  CHECK_THROWS_AS(sparse_iset(gen::path(20), 1, 1), PreconditionError);
}

TEST_CASE("sparse_iset with triangles present") {
  for (std::uint64_t seed : {1, 2, 3}) {
    const Graph g = gen::random_locally_sparse(800, 40, 3, 2, seed);
    const double k = std::max<double>(1, count_cliques(g, all_vertices(g), 3));
    const auto w = sparse_iset(g, k, 3);
    CHECK(is_independent(g, w.vertices));
    CHECK(w.size() >= required_size(sparse_iset_guarantee(800, k, 3)));
  }
}

TEST_CASE("log Z lower bound") {
  CHECK(z_lower_bound(729, 1, 3, 1, 9) == doctest::Approx(0).epsilon(1e-12));
  const double v = z_lower_bound(2000, 1, 3, 1, 10);
  CHECK(v == doctest::Approx(10 * (std::log(2000.0) - 2 * std::log(30.0))));
  const auto t = transfer_z(Family::Path, 2000, HighPrecision(1));
  CHECK(static_cast<double>(boost::multiprecision::log(t.z)) >= v);
  const auto a = admissible_alpha(2000, 1, 3, 1);
  CHECK(a == static_cast<std::uint64_t>(std::floor(std::sqrt(2000.0) / (3 * std::exp(1.5)))));
  CHECK_THROWS_AS(z_lower_bound(728, 1, 3, 1, 1), PreconditionError);
}

TEST_CASE("ratio reference and theorem bounds") {
  const double e = std::numbers::e;
  const auto r = ratio_reference(1 / e, 1, 3);
  CHECK(r.value == doctest::Approx(1 / (2 * e)));
  CHECK(r.asymptotic_reference);
  CHECK(ratio_reference(10, 1, 4).value == doctest::Approx(0.5 * 10 / std::log(e * e * 10)));
  CHECK(ratio_reference(20, 1, 4).value > ratio_reference(10, 1, 4).value);
  CHECK_THROWS_AS(ratio_reference(1e-3, 1, 3), PreconditionError);

  const EtaParameters p{1e6, 0, 3};
  CHECK(p.eta() == doctest::Approx(0.5702).epsilon(1e-3));
  const auto iset = theorem_bound(BoundKind::IsetMaxDegree, p, 1e6);
  CHECK(iset.value == doctest::Approx(1.7538).epsilon(1e-3));
  CHECK(theorem_bound(BoundKind::IsetAverageDegree, p, 1e6).value == doctest::Approx(iset.value / 9));
  CHECK(theorem_bound(BoundKind::CorrespondenceChromatic, p, 0).value == doctest::Approx(p.eta() * 1e6));
  CHECK_THROWS_AS(EtaParameters({2.0, 0, 3}).eta(), PreconditionError);
  CHECK_FALSE(theorem_bound(BoundKind::IsetMaxDegree, EtaParameters{1e6, 0, 7}, 1e6).warnings.empty());
}

TEST_CASE("average degree reduction") {
  const Graph c = gen::cycle(12);
  const auto all = avg_degree_reduction(c, 12.0 / 3, 2, 0.0);
  CHECK(all.kept.size() == 12);
  const auto s = avg_degree_reduction(gen::star(9), 10.0 / 3, 2, 0.0);
  CHECK(s.low_degree == 9);
  CHECK(s.kept.size() >= 4);
  const Graph g = gen::random_locally_sparse(300, 12, 2, 3, 5);
  const double d = g.average_degree();
  const double k = 300 * std::pow(d, 0.5 * 2) / 3;
  const auto r = avg_degree_reduction(g, k, 2, 0.5);
  CHECK(3 * r.kept.size() >= 300);
}
