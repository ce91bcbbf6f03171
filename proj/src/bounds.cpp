#include "lsg/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <string>

#include "lsg/errors.hpp"
#include "lsg/sparsity.hpp"

namespace lsg {

namespace {

double binomial_real(double n, int r) {
  if (r < 0 || n < r) return 0;
  double c = 1;
  for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

double min_order(int r) { return std::pow(static_cast<double>(r), 2.0 * r); }

// Greedy on g, returning ids local to g.
std::vector<Vertex> min_degree_greedy(const Graph& g) {
  std::vector<std::size_t> deg(g.n());
  std::vector<char> alive(g.n(), 1);
  std::set<std::pair<std::size_t, Vertex>> queue;
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    queue.emplace(deg[v], v);
  }
  std::vector<Vertex> chosen;
  auto kill = [&](Vertex v) {
    alive[v] = 0;
    queue.erase({deg[v], v});
  };
  while (!queue.empty()) {
    Vertex v = queue.begin()->second;
    chosen.push_back(v);
    std::vector<Vertex> closed{v};
    for (Vertex w : g.neighbors(v))
      if (alive[w]) closed.push_back(w);
    for (Vertex w : closed) kill(w);
    for (Vertex w : closed)
      for (Vertex x : g.neighbors(w)) {
        if (!alive[x]) continue;
        queue.erase({deg[x], x});
        --deg[x];
        queue.emplace(deg[x], x);
      }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

struct Recursion {
  std::vector<IsetTraceStep>& trace;

  // Returns an independent set of h, translated through `host`.
  std::vector<Vertex> run(const Graph& h, const std::vector<Vertex>& host, double k, int r) {
    const double n = static_cast<double>(h.n());
    IsetTraceStep step;
    step.r = r;
    step.n = h.n();
    step.k = std::min(k, std::max(1.0, binomial_real(n, r)));
    const double keff = step.k;

    auto translate = [&](const std::vector<Vertex>& local) {
      std::vector<Vertex> out;
      out.reserve(local.size());
      for (Vertex v : local) out.push_back(host[v]);
      return out;
    };

    if (r == 2) {
      trace.push_back(step);
      return translate(min_degree_greedy(h));
    }

    const double alpha_r = std::pow((r - 1.0) / r, r - 2.0 - 1.0 / (r - 1.0));
    const double beta_r = r - 1.0;
    step.threshold = alpha_r * std::pow(n, (r - 2.0) / (r - 1.0)) * std::pow(keff, 1.0 / (r * (r - 1.0)));
    std::vector<Vertex> high;
    for (Vertex v = 0; v < h.n(); ++v)
      if (static_cast<double>(h.degree(v)) >= step.threshold) high.push_back(v);
    step.high_degree = high.size();

    if (static_cast<double>(high.size()) < beta_r * std::pow(keff, 1.0 / r)) {
      trace.push_back(step);
      return translate(min_degree_greedy(h));
    }

    // Some v in B lies in at most r k / |B| copies of K_r; the minimiser does.
    Vertex best = high.front();
    std::uint64_t best_count = count_neighborhood_cliques(h, best, r - 1);
    for (std::size_t i = 1; i < high.size() && best_count > 0; ++i) {
      std::uint64_t c = count_neighborhood_cliques(h, high[i], r - 1);
      if (c < best_count) {
        best = high[i];
        best_count = c;
      }
    }
    const double average_bound = r * keff / static_cast<double>(high.size());
    if (static_cast<double>(best_count) > average_bound * (1 + 1e-12))
      throw InvariantError("no vertex of B meets the averaging bound n_v <= rk/|B|; input is not (k, r)-sparse");

    step.which = IsetTraceStep::Case::HighDegreeNeighborhood;
    step.chosen = host[best];
    step.clique_count = best_count;
    trace.push_back(step);

    const double child_k = r * std::pow(keff, 1.0 - 1.0 / r) / beta_r;
    auto nbhd = h.neighbors(best);
    std::vector<Vertex> child_host;
    child_host.reserve(nbhd.size());
    for (Vertex w : nbhd) child_host.push_back(host[w]);
    Graph child = h.induced(nbhd);

    if (child_k < 1) throw InvariantError("recursion budget fell below 1");
    if (static_cast<double>(child.n()) < min_order(r - 1))
      throw InvariantError("neighbourhood smaller than (r-1)^{2(r-1)} in recursion");
    if (!is_sparse(child, child_k, r - 1))
      throw InvariantError("neighbourhood is not (k~, r-1)-sparse");
    return run(child, child_host, child_k, r - 1);
  }
};

}  // namespace

std::uint64_t required_size(double guarantee) {
  if (guarantee <= 0) return 0;
  return static_cast<std::uint64_t>(std::ceil(guarantee - 1e-9 * std::max(1.0, guarantee)));
}

IndependentSetWitness turan_iset(const Graph& g) {
  require(g.n() >= 1, "n >= 1", "graph has no vertices");
  IndependentSetWitness w;
  w.vertices = min_degree_greedy(g);
  w.guarantee = static_cast<double>(g.n()) / (1.0 + g.average_degree());
  IsetTraceStep step;
  step.r = 2;
  step.n = g.n();
  w.trace.push_back(step);
  if (!is_independent(g, w.vertices) || w.size() < required_size(w.guarantee))
    throw InvariantError("greedy output violates the n/(1+d) guarantee");
  return w;
}

double sparse_iset_guarantee(double n, double k, int r) {
  return std::pow(n / std::pow(k, 1.0 / r), 1.0 / (r - 1)) / r;
}

IndependentSetWitness sparse_iset(const Graph& g, double k, int r) {
  require(r >= 2, "r >= 2", "clique order must be at least 2");
  require(k >= 1, "k >= 1", "sparsity budget must be at least 1");
  require(static_cast<double>(g.n()) >= min_order(r), "n >= r^{2r}",
          "graph has " + std::to_string(g.n()) + " vertices, fewer than r^{2r}");
  require(is_sparse(g, k, r), "G is (k, r)-sparse",
          "graph contains more than floor(k) copies of K_" + std::to_string(r));

  IndependentSetWitness w;
  w.guarantee = sparse_iset_guarantee(static_cast<double>(g.n()), k, r);
  Recursion rec{w.trace};
  w.vertices = rec.run(g, all_vertices(g), k, r);
  std::sort(w.vertices.begin(), w.vertices.end());
  if (!is_independent(g, w.vertices)) throw InvariantError("sparse_iset produced a dependent set");
  if (w.size() < required_size(w.guarantee))
    throw InvariantError("sparse_iset output below its guarantee");
  return w;
}

double z_lower_bound(std::uint64_t n, double k, int r, double lambda, std::uint64_t alpha) {
  require(r >= 3, "r >= 3", "clique order must be at least 3");
  require(k >= 1, "k >= 1", "sparsity budget must be at least 1");
  require(static_cast<double>(n) >= min_order(r), "n >= r^{2r}", "n below r^{2r}");
  require(lambda > 0, "lambda > 0", "fugacity must be positive");
  require(alpha >= 1, "alpha >= 1", "alpha must be a positive integer");
  const double a = static_cast<double>(alpha);
  return a * (std::log(static_cast<double>(n) * lambda) - std::log(k) / r - (r - 1) * std::log(r * a));
}

std::uint64_t admissible_alpha(std::uint64_t n, double k, int r, double lambda) {
  require(r >= 3 && k >= 1 && lambda > 0, "r >= 3, k >= 1, lambda > 0", "invalid parameters");
  const double value = std::pow(static_cast<double>(n) * lambda / std::pow(k, 1.0 / r), 1.0 / (r - 1)) /
                       (r * std::exp(r / (r - 1.0)));
  return static_cast<std::uint64_t>(std::floor(value));
}

AsymptoticReference ratio_reference(double z, double k, int r) {
  require(r >= 3, "r >= 3", "clique order must be at least 3");
  require(k >= 1, "k >= 1", "sparsity budget must be at least 1");
  const double omega = std::exp(r / (r - 2.0)) * std::pow(k, 1.0 / (r * (r - 2.0)));
  require(omega * z > 1, "omega z > 1", "log(omega z) must be positive");
  AsymptoticReference ref;
  ref.value = z / ((r - 2.0) * std::log(omega * z));
  ref.warnings.push_back("(1 - o_n(1)) factor set to 1; not a certified bound at finite n");
  return ref;
}

double EtaParameters::eta() const {
  require(degree > std::numbers::e, "degree > e", "eta needs log log(degree) > 0");
  return epsilon + r * std::log(std::log(degree)) / std::log(degree);
}

AsymptoticReference theorem_bound(BoundKind kind, const EtaParameters& params, double n) {
  require(params.epsilon >= 0 && params.epsilon <= 1, "epsilon in [0, 1]", "epsilon out of range");
  require(params.r >= 3, "r >= 3", "clique order must be at least 3");
  const double eta = params.eta();
  AsymptoticReference ref;
  switch (kind) {
    case BoundKind::IsetMaxDegree: ref.value = n / (eta * params.degree); break;
    case BoundKind::IsetAverageDegree: ref.value = n / (9 * eta * params.degree); break;
    case BoundKind::CorrespondenceChromatic:
      require(params.epsilon < 1, "epsilon < 1", "coloring bound needs epsilon < 1");
      ref.value = eta * params.degree * std::min(2.0, (1 + params.epsilon) / (1 - params.epsilon));
      break;
  }
  ref.warnings.push_back("o(1) terms dropped");
  if (params.r > std::log(std::log(params.degree)))
    ref.warnings.push_back("r exceeds log log(degree); the admissible range of r is asymptotic");
  return ref;
}

DegreeReductionReport avg_degree_reduction(const Graph& g, double k, int r, double epsilon) {
  require(r >= 2, "r >= 2", "clique order must be at least 2");
  require(epsilon >= 0 && epsilon <= 1, "epsilon in [0, 1]", "epsilon out of range");
  require(g.n() >= 1, "n >= 1", "graph has no vertices");
  DegreeReductionReport rep;
  const double n = static_cast<double>(g.n());
  rep.average_degree = g.average_degree();
  rep.k = k;
  const double local = std::pow(rep.average_degree, epsilon * r);
  const double k_formula = n * local / (r + 1);
  require(k <= k_formula * (1 + 1e-12), "k <= n d^{eps r}/(r+1)",
          "budget exceeds n d^{eps r}/(r+1) = " + std::to_string(k_formula));
  require(is_sparse(g, k, r + 1), "G is (k, r+1)-sparse",
          "graph has more than floor(k) copies of K_" + std::to_string(r + 1));

  const std::uint64_t nbhd_budget = floor_budget(3 * local);
  for (Vertex v = 0; v < g.n(); ++v) {
    bool low = static_cast<double>(g.degree(v)) <= 3 * rep.average_degree;
    bool sparse = count_neighborhood_cliques(g, v, r) <= nbhd_budget;
    rep.low_degree += low;
    rep.sparse_nbhd += sparse;
    if (low && sparse) rep.kept.push_back(v);
  }
  if (3 * rep.kept.size() < g.n())
    throw InvariantError("degree reduction kept fewer than n/3 vertices");
  rep.subgraph = g.induced(rep.kept);
  return rep;
}

}  // namespace lsg
