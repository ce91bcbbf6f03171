#include "lsg/occupancy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "lsg/errors.hpp"

namespace lsg {

namespace {

struct ZPair {
  long double z;
  long double dz;
};

// Z and Z' of the graph on `mask` with adjacency `adj`, branching on a
// maximum-degree vertex and closing out edgeless remainders directly.
ZPair evaluate_mask(const std::vector<std::uint64_t>& adj, std::uint64_t mask, long double lambda) {
  if (mask == 0) return {1, 0};
  int best = -1;
  int best_deg = 0;
  for (std::uint64_t m = mask; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int d = std::popcount(adj[v] & mask);
    if (d > best_deg) {
      best_deg = d;
      best = v;
    }
  }
  if (best < 0) {
    const int m = std::popcount(mask);
    const long double base = std::pow(1 + lambda, static_cast<long double>(m - 1));
    return {base * (1 + lambda), m * base};
  }
  const std::uint64_t bit = std::uint64_t{1} << best;
  ZPair out = evaluate_mask(adj, mask & ~bit, lambda);
  ZPair in = evaluate_mask(adj, mask & ~bit & ~adj[best], lambda);
  return {out.z + lambda * in.z, out.dz + in.z + lambda * in.dz};
}

// Visits every induced subgraph of `nb` (as a mask) with its Z and Z'.
// Masks are visited in increasing order; both children of the recursion
// Z(S) = Z(S - v) + lambda Z(S - N[v]) are numerically smaller than S.
template <class Visit>
void for_each_induced(const SmallGraph& nb, long double lambda, std::vector<long double>& z,
                      std::vector<long double>& dz, Visit&& visit) {
  const std::size_t count = std::size_t{1} << nb.n;
  z.assign(count, 0);
  dz.assign(count, 0);
  z[0] = 1;
  visit(std::uint64_t{0}, z[0], dz[0]);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const int v = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    const std::uint64_t apart = rest & ~nb.adj[v];
    z[mask] = z[rest] + lambda * z[apart];
    dz[mask] = dz[rest] + z[apart] + lambda * dz[apart];
    visit(mask, z[mask], dz[mask]);
  }
}

std::vector<Vertex> members(const Graph& g, Vertex u, std::uint64_t mask) {
  std::vector<Vertex> out;
  auto nb = g.neighbors(u);
  for (std::uint64_t m = mask; m; m &= m - 1) out.push_back(nb[static_cast<std::size_t>(std::countr_zero(m))]);
  return out;
}

void validate(const Graph& g, const OccupancyCertificate& cert) {
  require(cert.lambda > 0, "lambda > 0", "fugacity must be positive");
  require(cert.beta.size() == g.n() && cert.gamma.size() == g.n(), "one (beta, gamma) per vertex",
          "certificate size does not match the graph");
  for (std::size_t v = 0; v < g.n(); ++v)
    require(cert.beta[v] > 0 && cert.gamma[v] > 0, "beta_u, gamma_u > 0",
            "nonpositive parameter at vertex " + std::to_string(v));
}

struct Worst {
  CheckVerdict& verdict;
  bool seen = false;

  void offer(double margin, Vertex u, std::uint64_t mask, std::optional<std::uint64_t> edges) {
    if (seen && !(margin < verdict.worst_margin)) return;
    seen = true;
    verdict.worst_margin = margin;
    verdict.witness_vertex = u;
    verdict.witness_mask = mask;
    verdict.witness_edge_mask = edges;
  }
};

}  // namespace

OccupancyCertificate OccupancyCertificate::uniform(std::size_t n, double lambda, double beta, double gamma,
                                                   OccupancyMode mode) {
  OccupancyCertificate c;
  c.lambda = lambda;
  c.beta.assign(n, beta);
  c.gamma.assign(n, gamma);
  c.mode = mode;
  return c;
}

double OccupancyCertificate::max_beta() const {
  return beta.empty() ? 0.0 : *std::max_element(beta.begin(), beta.end());
}

double OccupancyCertificate::max_gamma() const {
  return gamma.empty() ? 0.0 : *std::max_element(gamma.begin(), gamma.end());
}

double local_occupancy_lhs(double beta, double gamma, double lambda, long double z, long double lambda_dz) {
  const long double l = lambda;
  return static_cast<double>(beta * (l / (1 + l)) / z + gamma * lambda_dz / z);
}

Rational local_occupancy_margin_exact(const IndependencePolynomial& f, const Rational& beta,
                                      const Rational& gamma, const Rational& lambda) {
  const Rational z = f.evaluate(lambda);
  const Rational ldz = lambda * f.derivative(lambda);
  return beta * lambda / (1 + lambda) / z + gamma * ldz / z - 1;
}

CheckVerdict check_certificate(const Graph& g, const OccupancyCertificate& cert) {
  validate(g, cert);
  const bool strong = cert.mode == OccupancyMode::Strong;
  const std::size_t limit = strong ? kMaxStrongCheckDegree : kMaxInducedCheckDegree;
  for (Vertex u = 0; u < g.n(); ++u)
    guard(g.degree(u) <= limit, strong ? "deg <= 12 (strong)" : "deg <= 22 (induced)",
          "vertex " + std::to_string(u) + " has degree " + std::to_string(g.degree(u)) +
              " beyond the exhaustive limit; use the sampled audit");

  CheckVerdict verdict;
  Worst worst{verdict};
  const long double lambda = cert.lambda;

  if (!strong) {
    std::vector<long double> z, dz;
    for (Vertex u = 0; u < g.n(); ++u) {
      SmallGraph nb = SmallGraph::induced(g, g.neighbors(u));
      for_each_induced(nb, lambda, z, dz, [&](std::uint64_t mask, long double zf, long double dzf) {
        double margin = local_occupancy_lhs(cert.beta[u], cert.gamma[u], cert.lambda, zf, lambda * dzf) - 1;
        worst.offer(margin, u, mask, std::nullopt);
        ++verdict.subgraphs_checked;
      });
    }
  } else {
    // budget: sum over vertices and vertex subsets of 2^{edges inside}
    std::uint64_t planned = 0;
    std::vector<SmallGraph> nbs;
    for (Vertex u = 0; u < g.n(); ++u) {
      nbs.push_back(SmallGraph::induced(g, g.neighbors(u)));
      const SmallGraph& nb = nbs.back();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb.n); ++mask) {
        int e = 0;
        for (std::uint64_t m = mask; m; m &= m - 1) e += std::popcount(nb.adj[std::countr_zero(m)] & mask);
        e /= 2;
        planned += std::uint64_t{1} << std::min(e, 40);
        guard(planned <= kMaxStrongSubgraphs, "strong subgraph budget",
              "strong-mode enumeration exceeds 2^22 subgraphs; use induced mode or the sampled audit");
      }
    }
    for (Vertex u = 0; u < g.n(); ++u) {
      const SmallGraph& nb = nbs[u];
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb.n); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::uint64_t m = mask; m; m &= m - 1) {
          int a = std::countr_zero(m);
          for (std::uint64_t w = nb.adj[a] & mask & ~((std::uint64_t{2} << a) - 1); w; w &= w - 1)
            edges.emplace_back(a, std::countr_zero(w));
        }
        std::vector<std::uint64_t> adj(nb.n, 0);
        for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << edges.size()); ++keep) {
          std::fill(adj.begin(), adj.end(), 0);
          for (std::size_t j = 0; j < edges.size(); ++j)
            if ((keep >> j) & 1) {
              auto [a, b] = edges[j];
              adj[a] |= std::uint64_t{1} << b;
              adj[b] |= std::uint64_t{1} << a;
            }
          ZPair zp = evaluate_mask(adj, mask, lambda);
          double margin = local_occupancy_lhs(cert.beta[u], cert.gamma[u], cert.lambda, zp.z, lambda * zp.dz) - 1;
          worst.offer(margin, u, mask, keep);
          ++verdict.subgraphs_checked;
        }
      }
    }
  }
  if (worst.seen) verdict.witness_set = members(g, verdict.witness_vertex, verdict.witness_mask);
  verdict.pass = verdict.worst_margin >= -kCheckTolerance;
  return verdict;
}

CheckVerdict check_certificate_sampled(const Graph& g, const OccupancyCertificate& cert,
                                       std::uint64_t samples_per_vertex, std::uint64_t seed) {
  validate(g, cert);
  CheckVerdict verdict;
  verdict.exhaustive = false;
  Worst worst{verdict};
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  const long double lambda = cert.lambda;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto nbhd = g.neighbors(u);
    for (std::uint64_t s = 0; s < samples_per_vertex; ++s) {
      std::vector<Vertex> subset;
      std::uint64_t mask = 0;
      for (std::size_t i = 0; i < nbhd.size(); ++i)
        if (coin(rng)) {
          subset.push_back(nbhd[i]);
          if (i < 64) mask |= std::uint64_t{1} << i;
        }
      guard(subset.size() <= SmallGraph::kMaxVertices, "sampled subset <= 64", "sampled subset too large");
      SmallGraph f = SmallGraph::induced(g, subset);
      ZPair zp = evaluate_mask(f.adj, f.all(), lambda);
      double margin = local_occupancy_lhs(cert.beta[u], cert.gamma[u], cert.lambda, zp.z, lambda * zp.dz) - 1;
      const bool better = !worst.seen || margin < verdict.worst_margin;
      worst.offer(margin, u, mask, std::nullopt);
      if (better) verdict.witness_set = subset;
      ++verdict.subgraphs_checked;
    }
  }
  verdict.pass = verdict.worst_margin >= -kCheckTolerance;
  return verdict;
}

double certified_bound(const OccupancyCertificate& cert, std::size_t max_degree) {
  return 1.0 / (cert.max_beta() + cert.max_gamma() * static_cast<double>(max_degree));
}

double min_beta_for_gamma(const Graph& g, double lambda, double gamma) {
  require(lambda > 0 && gamma >= 0, "lambda > 0, gamma >= 0", "invalid parameters");
  for (Vertex u = 0; u < g.n(); ++u)
    guard(g.degree(u) <= kMaxInducedCheckDegree, "deg <= 22", "neighbourhood too large for exhaustive scan");
  const long double l = lambda;
  long double need = 0;
  std::vector<long double> z, dz;
  for (Vertex u = 0; u < g.n(); ++u) {
    SmallGraph nb = SmallGraph::induced(g, g.neighbors(u));
    for_each_induced(nb, l, z, dz, [&](std::uint64_t, long double zf, long double dzf) {
      // beta (l/(1+l)) / Z + gamma l Z'/Z >= 1  <=>  beta >= (1 - gamma l Z'/Z) Z (1+l)/l
      need = std::max(need, (1 - gamma * l * dzf / zf) * zf * (1 + l) / l);
    });
  }
  return static_cast<double>(need);
}

ZStarSolution solve_zstar(double d_u, double lambda, double sigma, int r, double k) {
  require(d_u > 0, "d_u > 0", "degree scale must be positive");
  require(lambda > 0, "lambda > 0", "fugacity must be positive");
  require(sigma > 0 && sigma < 1, "sigma in (0, 1)", "sigma out of range");
  require(r >= 3, "r >= 3", "clique order must be at least 3");
  require(k >= 1, "k >= 1", "sparsity budget must be at least 1");

  using R = long double;
  const R rr = r;
  const R occupied = static_cast<R>(lambda) / (1 + static_cast<R>(lambda));
  const R c = (1 - static_cast<R>(sigma)) / (rr - 2);
  const R omega = std::exp(rr / (rr - 2)) * std::pow(static_cast<R>(k), 1 / (rr * (rr - 2)));
  const R tau = static_cast<R>(d_u) * occupied * (rr - 2) / (1 - static_cast<R>(sigma));
  auto lhs = [&](R z) { return static_cast<R>(d_u) * occupied * std::exp(-z); };
  auto rhs = [&](R z) { return c * z / std::log(omega * z); };

  R lo = std::numbers::e_v<R> / omega;
  R hi = std::log(tau) + 10;
  // at lo, log(omega z) = 1 exactly
  if (!(lhs(lo) > c * lo))
    throw PreconditionError("LHS > RHS at e/omega",
                            "no crossing: d_u too small for these (lambda, sigma, r, k)");
  if (!(hi > lo) || !(lhs(hi) < rhs(hi)))
    throw PreconditionError("bracket [e/omega, log tau + 10]", "root not bracketed by [e/omega, log tau + 10]");

  R mid = lo;
  R residual = 1;
  for (int iter = 0; iter < 400; ++iter) {
    mid = lo + (hi - lo) / 2;
    const R diff = lhs(mid) - rhs(mid);
    residual = std::abs(diff) / rhs(mid);
    if (hi - lo <= 1e-10L && residual < 1e-8L) break;
    if (diff > 0) lo = mid;
    else hi = mid;
  }
  if (!(residual < 1e-8L)) throw InvariantError("z* bisection failed to reach residual 1e-8");
  return {static_cast<double>(mid), static_cast<double>(omega), static_cast<double>(tau),
          static_cast<double>(residual)};
}

double Lemma45Params::g(double z) const {
  const double occupied = lambda / (1 + lambda);
  return beta * occupied * std::exp(-z) +
         gamma * ((1 - sigma) / (r - 2.0)) * z / std::log(zstar.omega * z);
}

Lemma45Params lemma45_params(double d_u, double lambda, double sigma, int r, double k,
                             std::optional<double> degree) {
  Lemma45Params p;
  p.zstar = solve_zstar(d_u, lambda, sigma, r, k);
  p.lambda = lambda;
  p.sigma = sigma;
  p.r = r;
  p.d_u = d_u;
  const double z = p.zstar.z;
  const double log_wz = std::log(p.zstar.omega * z);
  require(log_wz > 1, "omega z* > e", "log(omega z*) must exceed 1");
  const double scale = (r - 2.0) / ((1 - sigma) * (1 - sigma));
  const double denom = (z + 1) * log_wz - 1;
  p.beta = d_u * scale * log_wz * (log_wz - 1) / (z * denom);
  p.gamma = scale * log_wz * log_wz / denom;

  p.t0 = std::log(d_u) / (2 * std::log1p(lambda));
  p.t0_order_ok = p.t0 >= std::pow(static_cast<double>(r), 2.0 * r);
  p.small_t_ok = std::log(p.beta) >= (1 + p.t0) * std::log1p(lambda) - std::log(lambda);
  const double lower = std::log1p(p.t0 * lambda);
  p.lower_endpoint_ok = lower > 0 && p.zstar.omega * lower > 1 && p.g(lower) > 1;
  const double upper = degree.value_or(d_u) * std::log1p(lambda);
  p.upper_endpoint_ok = p.zstar.omega * upper > 1 && p.g(upper) > 1;
  const double lt = std::log(p.zstar.tau);
  p.expansion = (lt > 1 && p.zstar.omega * lt > 1)
                    ? lt - std::log(lt) + std::log(std::log(p.zstar.omega * lt))
                    : std::numeric_limits<double>::quiet_NaN();
  return p;
}

double lemma45_budget(double d_u, double xi, double epsilon, int r) {
  require(d_u > std::numbers::e, "d_u > e", "budget needs log log d_u > 0");
  const double ld = std::log(d_u);
  return (1 + xi) * (1 + xi) * d_u * (epsilon + r * std::log(ld) / ld);
}

AutoCertifyResult auto_certify(const Graph& g, double lambda, double sigma, std::span<const int> r,
                               std::span<const double> k, std::span<const double> d_u, OccupancyMode mode) {
  require(r.size() == g.n() && k.size() == g.n(), "per-vertex r and k", "r and k need one entry per vertex");
  require(d_u.empty() || d_u.size() == g.n(), "per-vertex d_u", "d_u needs one entry per vertex");
  AutoCertifyResult out;
  auto& cert = out.certificate;
  cert.lambda = lambda;
  cert.mode = mode;
  cert.provenance = OccupancyCertificate::Provenance::Lemma45;
  for (Vertex u = 0; u < g.n(); ++u) {
    const double deg = static_cast<double>(g.degree(u));
    const double d = d_u.empty() ? std::max(deg, 1.0) : d_u[u];
    Lemma45Params p = lemma45_params(d, lambda, sigma, r[u], k[u], deg);
    cert.beta.push_back(p.beta);
    cert.gamma.push_back(p.gamma);
    cert.solver_inputs.push_back({d, sigma, r[u], k[u]});
  }
  out.verdict = check_certificate(g, cert);
  return out;
}

}  // namespace lsg
