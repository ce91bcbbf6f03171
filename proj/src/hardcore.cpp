#include "lsg/hardcore.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <string>

#include "lsg/errors.hpp"

namespace lsg {

namespace {

using Coeffs = std::vector<std::uint64_t>;

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Coeffs binomial_row(std::size_t m) {
  Coeffs row(m + 1, 0);
  row[0] = 1;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i; j > 0; --j) row[j] += row[j - 1];
  return row;
}

// Vertex-elimination recursion Z(S) = Z(S - v) + x Z(S - N[v]), splitting
// disconnected masks into components and memoizing on the remaining set.
class PolynomialSolver {
 public:
  explicit PolynomialSolver(const SmallGraph& g) : g_(g) {}

  Coeffs solve(std::uint64_t mask) {
    if (mask == 0) return {1};
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    std::uint64_t component = component_of(mask, std::countr_zero(mask));
    Coeffs result;
    if (component != mask) {
      result = multiply(solve_connected(component), solve(mask & ~component));
    } else {
      result = solve_connected(mask);
    }
    memo_.emplace(mask, result);
    return result;
  }

 private:
  Coeffs solve_connected(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    int best = -1;
    int best_deg = -1;
    for (std::uint64_t m = mask; m; m &= m - 1) {
      int v = std::countr_zero(m);
      int d = std::popcount(g_.adj[v] & mask);
      if (d > best_deg) {
        best_deg = d;
        best = v;
      }
    }
    if (best_deg == 0) return binomial_row(static_cast<std::size_t>(std::popcount(mask)));
    std::uint64_t bit = std::uint64_t{1} << best;
    Coeffs without = solve(mask & ~bit);
    Coeffs with = solve(mask & ~bit & ~g_.adj[best]);
    Coeffs out(std::max(without.size(), with.size() + 1), 0);
    for (std::size_t j = 0; j < without.size(); ++j) out[j] += without[j];
    for (std::size_t j = 0; j < with.size(); ++j) out[j + 1] += with[j];
    memo_.emplace(mask, out);
    return out;
  }

  std::uint64_t component_of(std::uint64_t mask, int start) const {
    std::uint64_t seen = std::uint64_t{1} << start;
    std::uint64_t frontier = seen;
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= g_.adj[std::countr_zero(m)];
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  const SmallGraph& g_;
  std::unordered_map<std::uint64_t, Coeffs> memo_;
};

}  // namespace

std::uint64_t IndependencePolynomial::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : coeffs) t += c;
  return t;
}

long double IndependencePolynomial::evaluate(long double lambda) const noexcept {
  long double acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * lambda + static_cast<long double>(*it);
  return acc;
}

long double IndependencePolynomial::derivative(long double lambda) const noexcept {
  long double acc = 0;
  for (std::size_t j = coeffs.size(); j-- > 1;)
    acc = acc * lambda + static_cast<long double>(j) * static_cast<long double>(coeffs[j]);
  return acc;
}

Rational IndependencePolynomial::evaluate(const Rational& lambda) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * lambda + Rational(*it);
  return acc;
}

Rational IndependencePolynomial::derivative(const Rational& lambda) const {
  Rational acc = 0;
  for (std::size_t j = coeffs.size(); j-- > 1;) acc = acc * lambda + Rational(j) * Rational(coeffs[j]);
  return acc;
}

IndependencePolynomial independence_polynomial(const SmallGraph& g) {
  guard(g.n <= kMaxPolynomialVertices, "n <= 34",
        "exact independence polynomial limited to 34 vertices, got " + std::to_string(g.n));
  PolynomialSolver solver(g);
  IndependencePolynomial p;
  p.coeffs = solver.solve(g.all());
  p.n = g.n;
  while (p.coeffs.size() > 1 && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

IndependencePolynomial independence_polynomial(const Graph& g) {
  guard(g.n() <= kMaxPolynomialVertices, "n <= 34",
        "exact independence polynomial limited to 34 vertices, got " + std::to_string(g.n()) +
            "; use transfer_z for paths and cycles");
  return independence_polynomial(SmallGraph::from(g));
}

TransferResult transfer_z(Family family, std::size_t n, const HighPrecision& lambda) {
  require(lambda > 0, "lambda > 0", "fugacity must be positive");
  if (family == Family::Path) require(n >= 1, "n >= 1", "path needs at least one vertex");
  else require(n >= 3, "n >= 3", "cycle needs at least three vertices");

  // path values Z_{P_i}, Z'_{P_i} for i = 0..m, rolling two steps back
  auto path = [&](std::size_t m) {
    std::vector<TransferResult> p(std::max<std::size_t>(m + 1, 2));
    p[0] = {1, 0};
    p[1] = {1 + lambda, 1};
    for (std::size_t i = 2; i <= m; ++i) {
      p[i].z = p[i - 1].z + lambda * p[i - 2].z;
      p[i].dz = p[i - 1].dz + p[i - 2].z + lambda * p[i - 2].dz;
    }
    return p;
  };
  if (family == Family::Path) return path(n)[n];
  // v outside I leaves P_{n-1}; v inside I removes N[v] and leaves P_{n-3}
  auto p = path(n - 1);
  const auto& a = p[n - 1];
  const auto& b = p[n - 3];
  return {a.z + lambda * b.z, a.dz + b.z + lambda * b.dz};
}

long double occupancy_fraction(const IndependencePolynomial& poly, long double lambda) {
  require(poly.n >= 1, "n >= 1", "occupancy fraction needs at least one vertex");
  require(lambda > 0, "lambda > 0", "fugacity must be positive");
  return lambda * poly.derivative(lambda) / poly.evaluate(lambda) / static_cast<long double>(poly.n);
}

long double occupancy_fraction(const Graph& g, long double lambda) {
  return occupancy_fraction(independence_polynomial(g), lambda);
}

Rational occupancy_fraction(const IndependencePolynomial& poly, const Rational& lambda) {
  require(poly.n >= 1, "n >= 1", "occupancy fraction needs at least one vertex");
  require(lambda > 0, "lambda > 0", "fugacity must be positive");
  return lambda * poly.derivative(lambda) / poly.evaluate(lambda) / Rational(poly.n);
}

std::size_t median_independence_number(const IndependencePolynomial& poly) {
  const std::uint64_t total = poly.total();
  std::uint64_t tail = 0;
  for (std::size_t l = poly.coeffs.size(); l-- > 0;) {
    tail += poly.coeffs[l];
    if (2 * tail >= total) return l;
  }
  return 0;
}

HardCoreSampleStats glauber_sample(const Graph& g, double lambda, std::uint64_t steps,
                                   std::uint64_t seed, const GlauberOptions& options) {
  require(steps >= 1, "steps >= 1", "Glauber dynamics needs at least one step");
  require(lambda > 0, "lambda > 0", "fugacity must be positive");
  require(g.n() >= 1, "n >= 1", "Glauber dynamics needs at least one vertex");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(g.n() - 1));
  std::bernoulli_distribution insert(lambda / (1.0 + lambda));

  std::vector<char> in(g.n(), 0);
  std::vector<std::uint32_t> blocked(g.n(), 0);  // neighbours currently in I
  std::uint64_t size = 0;
  const std::uint64_t burn_in = steps / 2;
  long double sum = 0;

  if (options.trace) *options.trace << "step,size\n";
  for (std::uint64_t t = 0; t < steps; ++t) {
    Vertex v = pick(rng);
    if (insert(rng)) {
      if (!in[v] && blocked[v] == 0) {
        in[v] = 1;
        ++size;
        for (Vertex w : g.neighbors(v)) ++blocked[w];
      }
    } else if (in[v]) {
      in[v] = 0;
      --size;
      for (Vertex w : g.neighbors(v)) --blocked[w];
    }
    if (t >= burn_in) sum += static_cast<long double>(size);
    if (options.trace && t % options.trace_stride == 0) *options.trace << t << ',' << size << '\n';
  }
  HardCoreSampleStats stats;
  stats.lambda = lambda;
  stats.steps = steps;
  stats.seed = seed;
  stats.empirical_occupancy =
      static_cast<double>(sum / static_cast<long double>(steps - burn_in) / static_cast<long double>(g.n()));
  return stats;
}

ExactSampler::ExactSampler(const Graph& g, double lambda) : lambda_(lambda) {
  guard(g.n() <= kMaxVertices, "n <= 30", "exact sampler limited to 30 vertices");
  require(lambda > 0, "lambda > 0", "fugacity must be positive");
  g_ = SmallGraph::from(g);
}

long double ExactSampler::partition(std::uint64_t mask) {
  if (mask == 0) return 1;
  if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
  int v = std::countr_zero(mask);
  std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
  long double z = partition(rest) + lambda_ * partition(rest & ~g_.adj[v]);
  memo_.emplace(mask, z);
  return z;
}

std::vector<Vertex> ExactSampler::draw(std::mt19937_64& rng) {
  std::uniform_real_distribution<long double> unit(0, 1);
  std::vector<Vertex> set;
  std::uint64_t mask = g_.all();
  while (mask) {
    int v = std::countr_zero(mask);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << v);
    long double with = lambda_ * partition(rest & ~g_.adj[v]);
    if (unit(rng) * partition(mask) < with) {
      set.push_back(static_cast<Vertex>(v));
      mask = rest & ~g_.adj[v];
    } else {
      mask = rest;
    }
  }
  return set;
}

std::vector<Vertex> exact_sample(const Graph& g, double lambda, std::uint64_t seed) {
  ExactSampler sampler(g, lambda);
  std::mt19937_64 rng(seed);
  return sampler.draw(rng);
}

}  // namespace lsg
