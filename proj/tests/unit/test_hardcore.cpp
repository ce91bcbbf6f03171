#include <doctest.h>

#include <map>
#include <random>
#include <sstream>

#include "../corpus.hpp"
#include "../oracles.hpp"
#include "lsg/errors.hpp"
#include "lsg/gen.hpp"
#include "lsg/hardcore.hpp"

using namespace lsg;

TEST_CASE("independence polynomial examples") {
  CHECK(independence_polynomial(gen::empty(3)).coeffs == std::vector<std::uint64_t>{1, 3, 3, 1});
  CHECK(independence_polynomial(gen::complete(6)).coeffs == std::vector<std::uint64_t>{1, 6});
  CHECK(independence_polynomial(gen::path(3)).coeffs == std::vector<std::uint64_t>{1, 3, 1});
  CHECK(independence_polynomial(gen::cycle(5)).coeffs == std::vector<std::uint64_t>{1, 5, 5});
  CHECK_THROWS_AS(independence_polynomial(gen::empty(35)), GuardError);
}

TEST_CASE("polynomial invariants on a random corpus") {
  for (const Graph& g : corpus::random_graphs(80, 1, 14, 31)) {
    const auto p = independence_polynomial(g);
    CHECK(p.coeffs == oracle::independence_counts(g));
    CHECK(p.coeffs[0] == 1);
    CHECK(p.coeffs[1] == g.n());
    for (auto c : p.coeffs) CHECK(c > 0);
    CHECK(median_independence_number(p) == oracle::median(p.coeffs));
    CHECK(median_independence_number(p) <= p.alpha());
  }
}

TEST_CASE("Z multiplies over disjoint unions and satisfies the vertex recursion") {
  std::mt19937_64 rng(8);
  const auto graphs = corpus::random_graphs(30, 1, 8, 44);
  for (std::size_t i = 0; i + 1 < graphs.size(); i += 2) {
    const Graph& a = graphs[i];
    const Graph& b = graphs[i + 1];
    Graph u(a.n() + b.n());
    for (auto [x, y] : a.edges()) u.add_edge(x, y);
    for (auto [x, y] : b.edges()) u.add_edge(x + a.n(), y + a.n());
    const Rational l(3, 7);
    CHECK(independence_polynomial(u).evaluate(l) ==
          independence_polynomial(a).evaluate(l) * independence_polynomial(b).evaluate(l));
  }
  for (const Graph& g : graphs) {
    const Rational l(5, 4);
    const Vertex v = static_cast<Vertex>(rng() % g.n());
    std::vector<Vertex> minus_v, minus_closed;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (w == v) continue;
      minus_v.push_back(w);
      if (!g.has_edge(v, w)) minus_closed.push_back(w);
    }
    CHECK(independence_polynomial(g).evaluate(l) ==
          independence_polynomial(g.induced(minus_v)).evaluate(l) +
              l * independence_polynomial(g.induced(minus_closed)).evaluate(l));
  }
}

TEST_CASE("transfer recurrences") {
  CHECK(static_cast<double>(transfer_z(Family::Path, 3, 1).z) == 5.0);
  CHECK(static_cast<double>(transfer_z(Family::Path, 1, 0.3).z) == doctest::Approx(1.3));
  CHECK(static_cast<double>(transfer_z(Family::Cycle, 5, 1).z) == 11.0);
  for (std::size_t n = 3; n <= 20; ++n) {
    const auto p = independence_polynomial(gen::cycle(n));
    const auto t = transfer_z(Family::Cycle, n, HighPrecision(0.75));
    CHECK(static_cast<double>(t.z) == doctest::Approx(static_cast<double>(p.evaluate(0.75L))).epsilon(1e-13));
    CHECK(static_cast<double>(t.dz) == doctest::Approx(static_cast<double>(p.derivative(0.75L))).epsilon(1e-13));
  }
}

TEST_CASE("occupancy fraction") {
  const Rational one(1);
  CHECK(occupancy_fraction(independence_polynomial(gen::complete(2)), one) == Rational(1, 3));
  CHECK(occupancy_fraction(independence_polynomial(gen::cycle(5)), one) == Rational(3, 11));
  const Rational l(2, 5);
  CHECK(occupancy_fraction(independence_polynomial(gen::empty(7)), l) == l / (1 + l));
  CHECK(static_cast<double>(occupancy_fraction(gen::cycle(5), 1.0L)) == doctest::Approx(3.0 / 11));
}

TEST_CASE("occupancy equals the average marginal") {
  for (const Graph& g : corpus::random_graphs(25, 1, 12, 55)) {
    const Rational l(2, 3);
    const Rational z = independence_polynomial(g).evaluate(l);
    Rational sum = 0;
    for (Vertex v = 0; v < g.n(); ++v) {
      std::vector<Vertex> rest;
      for (Vertex w = 0; w < g.n(); ++w)
        if (w != v && !g.has_edge(v, w)) rest.push_back(w);
      sum += l * independence_polynomial(g.induced(rest)).evaluate(l) / z;
    }
    CHECK(occupancy_fraction(independence_polynomial(g), l) == sum / g.n());
  }
}

TEST_CASE("median independence number") {
  CHECK(median_independence_number(independence_polynomial(gen::complete(5))) == 1);
  CHECK(median_independence_number(independence_polynomial(gen::empty(2))) == 1);
  CHECK(median_independence_number(independence_polynomial(gen::cycle(5))) == 1);
  for (const auto& parts : std::vector<std::vector<std::size_t>>{{3, 3}, {2, 2, 2}, {4, 1}, {5, 5}}) {
    const Graph g = gen::complete_multipartite(parts);
    CHECK(median_independence_number(independence_polynomial(g)) ==
          oracle::median(oracle::independence_counts(g)));
  }
}

TEST_CASE("Glauber sampler") {
  CHECK(glauber_sample(gen::complete(1), 1, 1'000'000, 3).empirical_occupancy == doctest::Approx(0.5).epsilon(0.02));
  CHECK(glauber_sample(gen::complete(2), 1, 1'000'000, 3).empirical_occupancy ==
        doctest::Approx(1.0 / 3).epsilon(0.03));
  const auto a = glauber_sample(gen::cycle(5), 1, 1'000'000, 9);
  CHECK(std::abs(a.empirical_occupancy - 3.0 / 11) <= 0.01);
  CHECK(a.empirical_occupancy == glauber_sample(gen::cycle(5), 1, 1'000'000, 9).empirical_occupancy);
  std::ostringstream trace;
  GlauberOptions opt;
  opt.trace = &trace;
  opt.trace_stride = 10;
  glauber_sample(gen::cycle(5), 1, 100, 1, opt);
  CHECK(trace.str().rfind("step,size\n", 0) == 0);
}

TEST_CASE("exact sampler") {
  std::mt19937_64 rng(12);
  ExactSampler k2(gen::complete(2), 1.0);
  int empty = 0;
  const int draws = 100000;
  for (int i = 0; i < draws; ++i) empty += k2.draw(rng).empty();
  CHECK(std::abs(empty / double(draws) - 1.0 / 3) <= 0.02);
  ExactSampler p3(gen::path(3), 1.0);
  int ends = 0;
  for (int i = 0; i < draws; ++i) ends += p3.draw(rng) == std::vector<Vertex>{0, 2};
  CHECK(std::abs(ends / double(draws) - 0.2) <= 0.02);
  const Graph pet = gen::petersen();
  for (int i = 0; i < 200; ++i) CHECK(is_independent(pet, exact_sample(pet, 1.5, i)));
  CHECK_THROWS_AS(ExactSampler(gen::empty(31), 1.0), GuardError);
}
