#include "criteria.hpp"

#include <chrono>
#include <cmath>
#include <random>
#include <sstream>

#include "../corpus.hpp"
#include "../oracles.hpp"
#include "lsg/bounds.hpp"
#include "lsg/coloring.hpp"
#include "lsg/embedding.hpp"
#include "lsg/gen.hpp"
#include "lsg/hardcore.hpp"
#include "lsg/occupancy.hpp"
#include "lsg/sparsity.hpp"

namespace acceptance {

namespace {

using namespace lsg;

// Tolerances and budgets, fixed here once.
constexpr double kOccupancySlack = 1e-9;
constexpr double kMarginTolerance = 1e-12;
constexpr double kLogZSlack = 1e-9;
constexpr double kResidualTolerance = 1e-8;
constexpr double kIdentityTolerance = 1e-6;
constexpr double kTransferTolerance = 1e-12;
constexpr double kGlauberTolerance = 0.01;

struct Check {
  bool pass = true;
  std::ostringstream detail;
  int failures = 0;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ < 3) detail << what << "; ";
    pass = false;
  }
};

Check occupancy_soundness() {
  Check c;
  const auto graphs = corpus::random_graphs(240, 1, 12, 0xA11CE, 6);
  const Rational lambdas[] = {Rational(1, 10), Rational(1, 2), Rational(1)};
  const double gammas[] = {0.05, 0.1, 0.3, 0.6, 1.0, 2.0};
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> scale(0.5, 3.0);
  std::size_t graphs_checked = 0, passing = 0, checked = 0;
  for (const Graph& g : graphs) {
    c.expect(g.n() <= 12 && g.max_degree() <= 6, "corpus graph out of range");
    const auto poly = independence_polynomial(g);
    ++graphs_checked;
    for (const Rational& lr : lambdas) {
      const double lambda = static_cast<double>(lr);
      const double exact = static_cast<double>(occupancy_fraction(poly, lr));
      for (double gamma : gammas) {
        const double tight = min_beta_for_gamma(g, lambda, gamma);
        for (double beta : {tight, tight * scale(rng), tight / scale(rng)}) {
          auto cert = OccupancyCertificate::uniform(g.n(), lambda, beta, gamma);
          ++checked;
          if (!check_certificate(g, cert).pass) continue;
          ++passing;
          const double bound = certified_bound(cert, g.max_degree());
          c.expect(exact >= bound - kOccupancySlack,
                   "n=" + std::to_string(g.n()) + " occupancy " + std::to_string(exact) + " < bound " +
                       std::to_string(bound));
        }
      }
    }
  }
  c.expect(graphs_checked >= 200, "fewer than 200 graphs");
  c.expect(passing >= 200, "fewer than 200 passing certificates");
  c.detail << graphs_checked << " graphs, " << checked << " certificates, " << passing
           << " passed the induced check, all bounds held";
  return c;
}

Check tightness_witness() {
  Check c;
  const Graph k2 = gen::complete(2);
  const auto cert = OccupancyCertificate::uniform(2, 1.0, 2.0, 1.0);
  const auto verdict = check_certificate(k2, cert);
  c.expect(verdict.pass, "K2 certificate rejected");
  c.expect(std::abs(verdict.worst_margin) <= kMarginTolerance, "worst margin not 0");
  const auto poly = independence_polynomial(k2);
  const Rational exact = occupancy_fraction(poly, Rational(1));
  const Rational bound = Rational(1) / (Rational(2) + Rational(1) * 1);
  c.expect(exact == bound, "exact occupancy differs from 1/(beta + gamma Delta)");
  c.expect(bound == Rational(1, 3), "bound is not 1/3");
  const auto single = independence_polynomial(gen::empty(1));
  c.expect(local_occupancy_margin_exact(single, 2, 1, 1) == 0, "exact margin at F={v} is not 0");
  c.detail << "worst_margin=" << verdict.worst_margin << ", occupancy=bound=1/3 exactly";
  return c;
}

Check sparse_iset_guarantee_check() {
  Check c;
  std::mt19937_64 rng(4242);
  std::size_t instances = 0, r2 = 0, r3 = 0;
  auto run = [&](const Graph& g, double k, int r) {
    const auto w = sparse_iset(g, k, r);
    const std::vector<Vertex> vs = w.vertices;
    bool independent = true;
    for (std::size_t a = 0; a < vs.size() && independent; ++a)
      for (std::size_t b = a + 1; b < vs.size() && independent; ++b) independent = !g.has_edge(vs[a], vs[b]);
    const double formula = sparse_iset_guarantee(static_cast<double>(g.n()), k, r);
    c.expect(independent, "witness not independent");
    c.expect(vs.size() >= static_cast<std::size_t>(std::ceil(formula - 1e-9 * std::max(1.0, formula))),
             "witness below guarantee at n=" + std::to_string(g.n()));
    ++instances;
  };
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(16, 24)(rng);
    const Graph g = gen::gnp(n, std::uniform_real_distribution<double>(0.0, 0.6)(rng), rng());
    const double k = std::max<double>(1.0, static_cast<double>(g.edge_count()));
    run(g, k, 2);
    ++r2;
  }
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(729, 1500)(rng);
    const double avg = std::uniform_real_distribution<double>(1.0, 60.0)(rng);
    const auto m = static_cast<std::size_t>(avg * static_cast<double>(n) / 2);
    const Graph g = gen::random_triangle_free(n, m, rng());
    const double k = i % 2 ? 1.0 : std::uniform_real_distribution<double>(1.0, 100.0)(rng);
    run(g, k, 3);
    ++r3;
  }
  c.detail << instances << " instances (" << r2 << " with r=2, " << r3 << " with r=3)";
  return c;
}

Check z_lower_bound_exactness() {
  Check c;
  std::size_t checks = 0;
  for (std::size_t n : {729, 1000, 2000})
    for (Family fam : {Family::Path, Family::Cycle})
      for (double lambda : {0.5, 1.0, 2.0}) {
        const auto t = transfer_z(fam, n, HighPrecision(lambda));
        const double z = static_cast<double>(boost::multiprecision::log(t.z));
        const std::uint64_t top = admissible_alpha(n, 1.0, 3, lambda);
        c.expect(top >= 1, "admissible alpha is zero");
        c.expect(z >= 3.0 * static_cast<double>(top), "z < r alpha at the admissible alpha");
        for (std::uint64_t a = 1; a <= top; ++a) {
          if (z < 3.0 * static_cast<double>(a)) continue;
          const double rhs = z_lower_bound(n, 1.0, 3, lambda, a);
          c.expect(z - rhs >= -kLogZSlack, "log Z below bound at n=" + std::to_string(n));
          ++checks;
        }
      }
  c.detail << checks << " (n, family, lambda, alpha) cases";
  return c;
}

Check median_bound_exactness() {
  Check c;
  const auto graphs = corpus::random_graphs(100, 16, 22, 0x5EED5);
  double worst = 1e300;
  for (const Graph& g : graphs) {
    const auto poly = independence_polynomial(g);
    const double k = std::max<double>(1.0, static_cast<double>(g.edge_count()));
    c.expect(is_sparse(g, k, 2), "k does not certify (k,2)-sparsity");
    const double bound = median_bound(static_cast<double>(g.n()), k, 2, BigInt(poly.total()));
    const auto med = median_independence_number(poly);
    c.expect(static_cast<double>(med) >= bound, "median below bound");
    worst = std::min(worst, static_cast<double>(med) - bound);
  }
  c.detail << graphs.size() << " graphs, min slack " << worst;
  return c;
}

Check lemma45_identities() {
  Check c;
  std::size_t cases = 0, budget_cases = 0;
  double worst_residual = 0, worst_g = 0, worst_dg = 0;
  for (double d : {1e4, 1e6, 1e9})
    for (double lambda : {0.5, 1.0})
      for (double sigma : {0.05, 0.1})
        for (int r : {3, 4, 5})
          for (double k : {1.0, std::pow(d, 0.3 * r)}) {
            const auto p = lemma45_params(d, lambda, sigma, r, k);
            ++cases;
            worst_residual = std::max(worst_residual, p.zstar.residual);
            c.expect(p.zstar.residual < kResidualTolerance, "residual too large");
            const double target = 1 / (1 - sigma);
            const double rel = std::abs(p.g(p.zstar.z) - target) / target;
            worst_g = std::max(worst_g, rel);
            c.expect(rel <= kIdentityTolerance, "g(z*) != 1/(1-sigma)");
            const double h = 1e-4 * p.zstar.z;
            const double dg = (p.g(p.zstar.z + h) - p.g(p.zstar.z - h)) / (2 * h);
            worst_dg = std::max(worst_dg, std::abs(dg));
            c.expect(std::abs(dg) <= kIdentityTolerance, "g'(z*) != 0");
            if (d == 1e9) {
              const double eps = std::log(k) / (r * std::log(d));
              const double lhs = p.beta + p.gamma * d;
              const double rhs = lemma45_budget(d, 0.5, eps, r);
              c.expect(lhs <= rhs, "budget fails at r=" + std::to_string(r) + " sigma=" + std::to_string(sigma));
              ++budget_cases;
            }
          }
  c.detail << cases << " grid points; max residual " << worst_residual << ", max |g-target|/target " << worst_g
           << ", max |g'| " << worst_dg << "; budget held in " << budget_cases << " cases at d=1e9";
  return c;
}

Check embedding_invariants() {
  Check c;
  std::mt19937_64 rng(77);
  std::size_t runs = 0;
  EmbeddingResult sample;
  Graph sample_g;
  std::size_t sample_delta = 0;
  while (runs < 120) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
    const Graph g = gen::gnp(n, std::uniform_real_distribution<double>(0.1, 0.8)(rng), rng());
    if (g.edge_count() == 0) continue;
    const std::size_t lo = g.min_degree();
    const std::size_t hi = std::min(g.max_degree(), lo + 6);
    const std::size_t delta = std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    const int r = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<int> rs(n, r);
    std::vector<double> ks(n);
    for (Vertex v = 0; v < n; ++v) ks[v] = static_cast<double>(count_neighborhood_cliques(g, v, r));
    const auto res = min_degree_boost(g, delta, ks, rs);
    c.expect(res.j <= 6, "depth above 6");
    c.expect(verify_embedding(g, res, delta).ok, "verify_embedding rejected a construction");
    if (res.j >= 1 && res.j > sample.j) {
      sample = res;
      sample_g = g;
      sample_delta = delta;
    }
    ++runs;
  }
  c.expect(sample.j >= 1, "no run with positive depth");
  EmbeddingResult cut = sample;
  const auto edges = cut.g_prime.edges();
  cut.g_prime.remove_edge(edges.back().first, edges.back().second);
  const auto edge_check = verify_embedding(sample_g, cut, sample_delta);
  c.expect(!edge_check.ok, "edge-removal mutation accepted");
  EmbeddingResult shared = sample;
  shared.homs[1][0] = shared.homs[0][0];
  const auto hom_check = verify_embedding(sample_g, shared, sample_delta);
  c.expect(!hom_check.ok && hom_check.failed_invariant == "I4", "shared-vertex mutation not caught on I4");
  c.detail << runs << " constructions verified; edge mutation caught on " << edge_check.failed_invariant
           << ", hom mutation caught on " << hom_check.failed_invariant;
  return c;
}

Check dp_coloring_correctness() {
  Check c;
  const Graph c4 = gen::cycle(4);
  const auto twisted = cover_from_permutations(c4, 2, {{{0, 3}, {1, 0}}});
  c.expect(!solve_exact(c4, twisted), "twisted C4 2-fold cover reported SAT");
  c.expect(!oracle::cover_colorable(c4, twisted), "oracle disagrees on twisted C4");
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto cover = random_cover(c4, 3, s);
    const auto phi = solve_exact(c4, cover);
    c.expect(phi && is_proper(c4, cover, *phi), "3-fold C4 cover not solved, seed " + std::to_string(s));
  }
  const Graph pet = gen::petersen();
  auto lists = [&](std::int64_t q) {
    std::vector<std::vector<std::int64_t>> l(pet.n());
    for (auto& x : l)
      for (std::int64_t i = 1; i <= q; ++i) x.push_back(i);
    return cover_from_lists(pet, l);
  };
  const auto p3 = solve_exact(pet, lists(3));
  c.expect(p3 && is_proper(pet, lists(3), *p3), "Petersen 3-lists not SAT");
  c.expect(!solve_exact(pet, lists(2)), "Petersen 2-lists reported SAT");

  std::size_t compared = 0, unsat = 0;
  const auto graphs = corpus::random_graphs(60, 1, 12, 0xC0105);
  std::mt19937_64 rng(5);
  for (const Graph& g : graphs)
    for (std::size_t q = 1; q <= 3; ++q) {
      const auto cover = random_cover(g, q, rng(), rng() % 2 ? CoverTwist{} : CoverTwist::partial(0.7));
      const auto phi = solve_exact(g, cover);
      const bool truth = oracle::cover_colorable(g, cover);
      c.expect(phi.has_value() == truth, "solver verdict differs from enumeration");
      if (phi) c.expect(is_proper(g, cover, *phi), "SAT output fails the validator");
      unsat += !truth;
      ++compared;
    }
  c.detail << compared << " random covers matched enumeration (" << unsat << " UNSAT)";
  return c;
}

Check oracle_equivalence() {
  Check c;
  const auto graphs = corpus::random_graphs(320, 0, 14, 0x0AC1E);
  for (const Graph& g : graphs)
    c.expect(independence_polynomial(g).coeffs == oracle::independence_counts(g),
             "polynomial mismatch at n=" + std::to_string(g.n()));
  double worst = 0;
  for (std::size_t n = 1; n <= 20; ++n)
    for (Family fam : {Family::Path, Family::Cycle}) {
      if (fam == Family::Cycle && n < 3) continue;
      const Graph g = fam == Family::Path ? gen::path(n) : gen::cycle(n);
      const auto poly = independence_polynomial(g);
      for (double lambda : {0.1, 0.5, 1.0, 2.0, 7.0}) {
        const auto t = transfer_z(fam, n, HighPrecision(lambda));
        const long double z = poly.evaluate(static_cast<long double>(lambda));
        const long double dz = poly.derivative(static_cast<long double>(lambda));
        const double ez = std::abs(static_cast<double>(t.z) - static_cast<double>(z)) / static_cast<double>(z);
        const double edz = std::abs(static_cast<double>(t.dz) - static_cast<double>(dz)) / static_cast<double>(dz);
        worst = std::max({worst, ez, edz});
        c.expect(ez <= kTransferTolerance && edz <= kTransferTolerance, "transfer mismatch at n=" + std::to_string(n));
      }
    }
  c.detail << graphs.size() << " graphs matched naive enumeration; transfer max rel err " << worst;
  return c;
}

Check glauber_convergence() {
  Check c;
  const std::pair<const char*, Graph> cases[] = {
      {"K4", gen::complete(4)}, {"C5", gen::cycle(5)}, {"Petersen", gen::petersen()}};
  for (const auto& [name, g] : cases) {
    const double exact = static_cast<double>(occupancy_fraction(independence_polynomial(g), Rational(1)));
    const auto a = glauber_sample(g, 1.0, 1'000'000, 2024);
    const auto b = glauber_sample(g, 1.0, 1'000'000, 2024);
    c.expect(a.empirical_occupancy == b.empirical_occupancy, std::string(name) + " not seed-deterministic");
    const double err = std::abs(a.empirical_occupancy - exact);
    c.expect(err <= kGlauberTolerance, std::string(name) + " off by " + std::to_string(err));
    c.detail << name << " err " << err << "; ";
  }
  return c;
}

Check condition_checkers() {
  Check c;
  // Star with 22 leaves: the centre's neighbourhood is edgeless, so
  // Z_F = (1+lambda)^{|F|} and 8 Delta^4 = 1874048.
  const Graph star = gen::star(22);
  std::vector<std::vector<std::int64_t>> big(star.n());
  for (auto& l : big)
    for (std::int64_t i = 0; i < 284; ++i) l.push_back(i);
  const auto cover = cover_from_lists(star, big);
  auto dkps = [&](double lambda, double ell) {
    return dkps_condition_check(star, cover, OccupancyCertificate::uniform(star.n(), lambda, 2, 1), ell);
  };
  const auto pass21 = dkps(1.0, 168);   // |F| >= 21: 2^21 = 2097152 >= 1874048
  const auto fail20 = dkps(1.0, 160);   // |F| >= 20: 2^20 = 1048576 <  1874048
  const auto pass14 = dkps(2.0, 112);   // 3^14 = 4782969
  const auto fail13 = dkps(2.0, 104);   // 3^13 = 1594323
  c.expect(pass21.z_threshold == 1874048.0, "8 Delta^4 wrong");
  c.expect(pass21.z_ok && !fail20.z_ok && pass14.z_ok && !fail13.z_ok, "Z_F verdicts differ from (1+lambda)^|F|");
  c.expect(fail20.z_witness_vertex == Vertex{0} && fail20.z_witness_set.size() == 20, "Z_F witness wrong");
  c.expect(fail20.z_witness_value == 1048576.0L, "Z_F witness value wrong");
  // list requirement at lambda=1, ell=168, Delta=22: 2 (1/2) 168/(1 - sqrt(7 log 22/168)) + deg
  const double eff = 168 / (1 - std::sqrt(7 * std::log(22.0) / 168));
  c.expect(std::abs(pass21.list_required[0] - (eff + 22)) < 1e-9, "list requirement arithmetic");
  c.expect(!pass21.list_ok[0] && pass21.list_ok[1], "284 colours: short at the centre (284.04), enough at leaves (263.04)");
  c.expect(pass21.list_like && pass21.mode_ok && !pass21.delta_hypothesis && pass21.ell_hypothesis,
           "structural flags on star fixture");
  c.expect(!pass21.hypotheses_verified, "hypotheses should not verify with Delta < 64");

  const Graph c4 = gen::cycle(4);
  const auto twisted = cover_from_permutations(c4, 2, {{{0, 3}, {1, 0}}});
  const auto induced = dkps_condition_check(c4, twisted, OccupancyCertificate::uniform(4, 1, 2, 1), 10);
  auto strong_cert = OccupancyCertificate::uniform(4, 1, 2, 1, OccupancyMode::Strong);
  const auto strong = dkps_condition_check(c4, twisted, strong_cert, 10);
  c.expect(!induced.list_like && !induced.mode_ok && strong.mode_ok, "non-list cover needs strong mode");

  const Graph empty = gen::empty(5);
  const auto none = dkps_condition_check(empty, cover_from_lists(empty, std::vector<std::vector<std::int64_t>>(5, {1, 2, 3})),
                                         OccupancyCertificate::uniform(5, 1, 1, 1), 2);
  c.expect(none.z_ok && none.z_vacuous && none.lists_ok, "edgeless fixture should pass vacuously");

  // BKNP arithmetic at Delta = 10^6, deg = log^2 Delta, eps = 1/4, ell = deg^0.51, t = deg^0.48
  const double delta = 1e6, ld = std::log(delta), deg = ld * ld;
  const double ell = std::pow(deg, 0.51), t = std::pow(deg, 0.48);
  const auto sym = bknp_arithmetic(deg, delta, 0.25, ell, t);
  const double c1_lhs = 0.25 * 0.75 * ell * t, c1_rhs = 18 * ld + 6 * std::log(16.0);
  const double c2_rhs = 36 * ld + 12 * std::log(16.0);
  c.expect(sym.c1 == (c1_lhs >= c1_rhs) && !sym.c1, "C1 at Delta=1e6");
  c.expect(sym.c2 == (ell >= c2_rhs) && !sym.c2, "C2 at Delta=1e6");
  c.expect(!sym.c3, "C3 at Delta=1e6");
  c.expect(!bknp_arithmetic(10, 100, 0.25, 1, 100).c2, "ell=1 must fail C2");
  c.expect(bknp_arithmetic(10, 100, 0.25, 11, 1).c3, "ell > deg must pass C3");
  // 8 * 30^3 * C(30,20) = 6.49e12 < 20! = 2.43e18; 8 * 30^3 * C(30,5) = 3.08e10 > 5! = 120
  const auto exact_pass = bknp_arithmetic(30, 30, 0.25, 20, 1);
  const auto exact_fail = bknp_arithmetic(30, 30, 0.25, 5, 1);
  c.expect(exact_pass.c3 && exact_pass.c3_exact && !exact_fail.c3 && exact_fail.c3_exact, "exact C3 fixtures");
  const auto easy = bknp_arithmetic(2, 2, 0.25, 100, 10);
  c.expect(easy.c1 && easy.c2 && easy.c3, "all-pass fixture at Delta=2");

  // star centre: an edgeless S of size s has 2^s independent sets
  c.expect(alpha_min(gen::star(6), 0, 1) == std::optional<std::size_t>(0), "empty S qualifies at t=1");
  c.expect(!alpha_min(gen::star(3), 0, 9), "t > 2^deg must give no qualifying S");
  c.expect(alpha_min(gen::complete(5), 0, 5) == std::optional<std::size_t>(1), "clique neighbourhood gives 1");
  c.detail << "DKPS, BKNP and alpha_min fixtures match hand-computed verdicts";
  return c;
}

struct Entry {
  int id;
  const char* name;
  double budget;
  Check (*fn)();
};

const Entry kEntries[] = {
    {1, "occupancy soundness", 60, occupancy_soundness},
    {2, "local occupancy tightness on K2", 0, tightness_witness},
    {3, "constructive independent set guarantee", 120, sparse_iset_guarantee_check},
    {4, "log Z lower bound on paths and cycles", 5, z_lower_bound_exactness},
    {5, "median independence bound", 60, median_bound_exactness},
    {6, "closed-form occupancy parameters", 5, lemma45_identities},
    {7, "doubling embedding invariants", 30, embedding_invariants},
    {8, "correspondence colouring correctness", 0, dp_coloring_correctness},
    {9, "oracle equivalence", 0, oracle_equivalence},
    {10, "Glauber convergence", 30, glauber_convergence},
    {11, "colouring condition checkers", 0, condition_checkers},
};

}  // namespace

std::vector<Outcome> run(const std::vector<int>& only) {
  std::vector<Outcome> out;
  for (const auto& e : kEntries) {
    if (!only.empty() && std::find(only.begin(), only.end(), e.id) == only.end()) continue;
    Outcome o;
    o.id = e.id;
    o.name = e.name;
    o.budget_seconds = e.budget;
    const auto start = std::chrono::steady_clock::now();
    try {
      Check c = e.fn();
      o.pass = c.pass;
      o.detail = c.detail.str();
    } catch (const std::exception& ex) {
      o.pass = false;
      o.detail = std::string("exception: ") + ex.what();
    }
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.budget_seconds > 0 && o.seconds >= o.budget_seconds) {
      o.pass = false;
      o.detail += " (runtime budget exceeded)";
    }
    out.push_back(std::move(o));
  }
  return out;
}

std::string format(const Outcome& o) {
  std::ostringstream os;
  os << "criterion " << o.id << " " << (o.pass ? "PASS" : "FAIL") << " " << o.name << " (" << std::fixed;
  os.precision(2);
  os << o.seconds << " s";
  if (o.budget_seconds > 0) os << " / " << o.budget_seconds << " s";
  os << "): " << o.detail;
  return os.str();
}

}  // namespace acceptance
