#include "lsg/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "lsg/errors.hpp"
#include "lsg/hardcore.hpp"

namespace lsg {

std::size_t CorrespondenceCover::fold() const {
  if (lists.empty()) return 0;
  std::size_t q = lists[0].size();
  for (const auto& l : lists) q = std::min(q, l.size());
  return q;
}

std::size_t CorrespondenceCover::max_list_size() const {
  std::size_t q = 0;
  for (const auto& l : lists) q = std::max(q, l.size());
  return q;
}

std::optional<std::string> CorrespondenceCover::violation(const Graph& g) const {
  if (lists.size() != g.n()) return "shape: one list per vertex required";
  if (!labels.empty()) {
    if (labels.size() != lists.size()) return "shape: labels must parallel lists";
    for (std::size_t v = 0; v < lists.size(); ++v)
      if (labels[v].size() != lists[v].size()) return "shape: labels must parallel lists";
  }
  std::unordered_map<ColorId, Vertex> owner;
  for (Vertex v = 0; v < lists.size(); ++v)
    for (ColorId c : lists[v])
      if (!owner.emplace(c, v).second) return "DP1: colour " + std::to_string(c) + " appears in two lists";
  for (const auto& [e, pairs] : matchings) {
    auto [u, v] = e;
    if (u >= v || v >= g.n() || !g.has_edge(u, v))
      return "DP3: matching on non-edge (" + std::to_string(u) + ", " + std::to_string(v) + ")";
    std::unordered_set<ColorId> used;
    for (auto [a, b] : pairs) {
      auto ia = owner.find(a), ib = owner.find(b);
      if (ia == owner.end() || ib == owner.end() || ia->second != u || ib->second != v)
        return "DP2: pair (" + std::to_string(a) + ", " + std::to_string(b) + ") does not join L(" +
               std::to_string(u) + ") to L(" + std::to_string(v) + ")";
      if (!used.insert(a).second || !used.insert(b).second)
        return "DP3: colour reused in matching of edge (" + std::to_string(u) + ", " + std::to_string(v) + ")";
    }
  }
  return std::nullopt;
}

void CorrespondenceCover::validate(const Graph& g) const {
  if (auto bad = violation(g)) throw PreconditionError(bad->substr(0, bad->find(':')), *bad);
}

CorrespondenceCover cover_from_lists(const Graph& g, const std::vector<std::vector<std::int64_t>>& lists) {
  require(lists.size() == g.n(), "one list per vertex", "list count does not match the graph");
  CorrespondenceCover cover;
  ColorId next = 0;
  for (const auto& raw : lists) {
    std::vector<std::int64_t> vals = raw;
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    std::vector<ColorId> ids(vals.size());
    std::iota(ids.begin(), ids.end(), next);
    next += static_cast<ColorId>(vals.size());
    cover.lists.push_back(std::move(ids));
    cover.labels.push_back(std::move(vals));
  }
  for (auto [u, v] : g.edges()) {
    std::vector<ColorPair> pairs;
    const auto& lu = cover.labels[u];
    const auto& lv = cover.labels[v];
    std::size_t i = 0, j = 0;
    while (i < lu.size() && j < lv.size()) {
      if (lu[i] < lv[j]) ++i;
      else if (lv[j] < lu[i]) ++j;
      else pairs.emplace_back(cover.lists[u][i++], cover.lists[v][j++]);
    }
    if (!pairs.empty()) cover.matchings.emplace(Edge{u, v}, std::move(pairs));
  }
  return cover;
}

namespace {

CorrespondenceCover blank_cover(const Graph& g, std::size_t q) {
  CorrespondenceCover cover;
  cover.lists.resize(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    for (std::size_t i = 0; i < q; ++i) cover.lists[v].push_back(static_cast<ColorId>(v * q + i));
  return cover;
}

}  // namespace

CorrespondenceCover cover_from_permutations(const Graph& g, std::size_t q,
                                            const std::map<Edge, std::vector<std::size_t>>& perms) {
  CorrespondenceCover cover = blank_cover(g, q);
  std::vector<std::size_t> identity(q);
  std::iota(identity.begin(), identity.end(), 0);
  for (auto [u, v] : g.edges()) {
    auto it = perms.find({u, v});
    const auto& p = it == perms.end() ? identity : it->second;
    std::vector<std::size_t> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    require(sorted == identity, "permutation of size q", "edge permutation is not a permutation of 0..q-1");
    auto& pairs = cover.matchings[{u, v}];
    for (std::size_t i = 0; i < q; ++i) pairs.emplace_back(cover.lists[u][i], cover.lists[v][p[i]]);
  }
  for (const auto& [e, p] : perms)
    require(e.first < e.second && e.second < g.n() && g.has_edge(e.first, e.second), "permutation on an edge",
            "permutation given for a non-edge");
  return cover;
}

CorrespondenceCover random_cover(const Graph& g, std::size_t q, std::uint64_t seed, CoverTwist twist) {
  require(q >= 1, "q >= 1", "fold size must be positive");
  require(twist.full || (twist.keep_probability >= 0 && twist.keep_probability <= 1), "p in [0, 1]",
          "keep probability out of range");
  std::mt19937_64 rng(seed);
  CorrespondenceCover cover = blank_cover(g, q);
  std::vector<std::size_t> perm(q);
  for (auto [u, v] : g.edges()) {
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ColorPair> pairs;
    for (std::size_t i = 0; i < q; ++i) {
      if (!twist.full && std::generate_canonical<double, 53>(rng) >= twist.keep_probability) continue;
      pairs.emplace_back(cover.lists[u][i], cover.lists[v][perm[i]]);
    }
    if (!pairs.empty()) cover.matchings.emplace(Edge{u, v}, std::move(pairs));
  }
  return cover;
}

bool is_proper(const Graph& g, const CorrespondenceCover& cover, const ColoringAssignment& phi) {
  if (phi.size() != g.n() || cover.lists.size() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v)
    if (std::find(cover.lists[v].begin(), cover.lists[v].end(), phi[v]) == cover.lists[v].end()) return false;
  for (const auto& [e, pairs] : cover.matchings)
    for (auto [a, b] : pairs)
      if (phi[e.first] == a && phi[e.second] == b) return false;
  return true;
}

namespace {

// conflict[v][j][a]: index in L(w) matched to the a-th colour of v, where w is
// the j-th neighbour of v; -1 when unmatched.
struct ConflictTable {
  std::vector<std::vector<std::vector<int>>> conflict;

  ConflictTable(const Graph& g, const CorrespondenceCover& cover) {
    std::unordered_map<ColorId, std::size_t> index;
    for (Vertex v = 0; v < g.n(); ++v)
      for (std::size_t i = 0; i < cover.lists[v].size(); ++i) index[cover.lists[v][i]] = i;
    conflict.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) {
      auto nb = g.neighbors(v);
      conflict[v].assign(nb.size(), std::vector<int>(cover.lists[v].size(), -1));
    }
    auto slot = [&](Vertex v, Vertex w) {
      auto nb = g.neighbors(v);
      return static_cast<std::size_t>(std::lower_bound(nb.begin(), nb.end(), w) - nb.begin());
    };
    for (const auto& [e, pairs] : cover.matchings) {
      auto [u, v] = e;
      const std::size_t su = slot(u, v), sv = slot(v, u);
      for (auto [a, b] : pairs) {
        const std::size_t ia = index.at(a), ib = index.at(b);
        conflict[u][su][ia] = static_cast<int>(ib);
        conflict[v][sv][ib] = static_cast<int>(ia);
      }
    }
  }
};

class ExactSolver {
 public:
  ExactSolver(const Graph& g, const CorrespondenceCover& cover) : g_(g), table_(g, cover) {
    avail_.resize(g.n());
    for (Vertex v = 0; v < g.n(); ++v) avail_[v] = (1u << cover.lists[v].size()) - 1;
    choice_.assign(g.n(), -1);
  }

  bool run() { return extend(0); }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<int>& choice() const { return choice_; }

 private:
  bool extend(std::size_t colored) {
    ++nodes_;
    if (colored == g_.n()) return true;
    Vertex best = 0;
    int best_avail = 64;
    std::size_t best_free = 0;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (choice_[v] >= 0) continue;
      const int a = std::popcount(avail_[v]);
      std::size_t free = 0;
      for (Vertex w : g_.neighbors(v)) free += choice_[w] < 0;
      if (a < best_avail || (a == best_avail && free > best_free)) {
        best = v;
        best_avail = a;
        best_free = free;
      }
    }
    if (best_avail == 0) return false;
    auto nb = g_.neighbors(best);
    for (std::uint32_t m = avail_[best]; m; m &= m - 1) {
      const int a = std::countr_zero(m);
      choice_[best] = a;
      std::vector<std::pair<Vertex, std::uint32_t>> undo;
      bool wiped = false;
      for (std::size_t j = 0; j < nb.size(); ++j) {
        const Vertex w = nb[j];
        const int b = table_.conflict[best][j][static_cast<std::size_t>(a)];
        if (choice_[w] >= 0 || b < 0 || !(avail_[w] >> b & 1)) continue;
        undo.emplace_back(w, avail_[w]);
        avail_[w] &= ~(1u << b);
        if (avail_[w] == 0) {
          wiped = true;
          break;
        }
      }
      if (!wiped && extend(colored + 1)) return true;
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) avail_[it->first] = it->second;
    }
    choice_[best] = -1;
    return false;
  }

  const Graph& g_;
  ConflictTable table_;
  std::vector<std::uint32_t> avail_;
  std::vector<int> choice_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<ColoringAssignment> solve_exact(const Graph& g, const CorrespondenceCover& cover, SolveStats* stats) {
  guard(g.n() <= kMaxSolverVertices, "n <= 30", "exact cover solver limited to 30 vertices");
  guard(cover.max_list_size() <= kMaxSolverListSize, "q <= 8", "exact cover solver limited to lists of size 8");
  cover.validate(g);
  ExactSolver solver(g, cover);
  const bool sat = solver.run();
  if (stats) stats->nodes = solver.nodes();
  if (!sat) return std::nullopt;
  ColoringAssignment phi(g.n());
  for (Vertex v = 0; v < g.n(); ++v) phi[v] = cover.lists[v][static_cast<std::size_t>(solver.choice()[v])];
  if (!is_proper(g, cover, phi)) throw InvariantError("exact solver produced an improper colouring");
  return phi;
}

std::optional<ColoringAssignment> heuristic_color(const Graph& g, const CorrespondenceCover& cover,
                                                  std::uint64_t seed, std::uint64_t max_iters) {
  cover.validate(g);
  for (const auto& l : cover.lists)
    if (l.empty()) return std::nullopt;
  const std::size_t n = g.n();
  ConflictTable table(g, cover);
  std::mt19937_64 rng(seed);
  std::vector<int> pick(n, -1);

  auto clashes = [&](Vertex v, int a) {
    int c = 0;
    auto nb = g.neighbors(v);
    for (std::size_t j = 0; j < nb.size(); ++j) {
      const int b = table.conflict[v][j][static_cast<std::size_t>(a)];
      c += b >= 0 && pick[nb[j]] == b;
    }
    return c;
  };
  auto best_color = [&](Vertex v) {
    const int size = static_cast<int>(cover.lists[v].size());
    std::vector<int> best;
    int low = INT32_MAX;
    for (int a = 0; a < size; ++a) {
      const int c = clashes(v, a);
      if (c < low) {
        low = c;
        best.clear();
      }
      if (c == low) best.push_back(a);
    }
    return best[std::uniform_int_distribution<std::size_t>(0, best.size() - 1)(rng)];
  };

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (Vertex v : order) pick[v] = best_color(v);

  std::vector<Vertex> conflicted;
  for (std::uint64_t iter = 0;; ++iter) {
    conflicted.clear();
    for (Vertex v = 0; v < n; ++v)
      if (clashes(v, pick[v]) > 0) conflicted.push_back(v);
    if (conflicted.empty()) break;
    if (iter >= max_iters) return std::nullopt;
    const Vertex v = conflicted[std::uniform_int_distribution<std::size_t>(0, conflicted.size() - 1)(rng)];
    if (std::generate_canonical<double, 53>(rng) < 0.1)
      pick[v] = static_cast<int>(std::uniform_int_distribution<std::size_t>(0, cover.lists[v].size() - 1)(rng));
    else
      pick[v] = best_color(v);
  }
  ColoringAssignment phi(n);
  for (Vertex v = 0; v < n; ++v) phi[v] = cover.lists[v][static_cast<std::size_t>(pick[v])];
  if (!is_proper(g, cover, phi)) throw InvariantError("heuristic produced an improper colouring");
  return phi;
}

bool is_list_like(const Graph& g, const CorrespondenceCover& cover) {
  cover.validate(g);
  std::unordered_map<ColorId, std::size_t> index;
  for (const auto& l : cover.lists)
    for (ColorId c : l) index.emplace(c, index.size());
  std::vector<std::size_t> parent(index.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [e, pairs] : cover.matchings)
    for (auto [a, b] : pairs) parent[find(index[a])] = find(index[b]);

  std::vector<std::set<std::size_t>> classes(g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    for (ColorId c : cover.lists[v])
      if (!classes[v].insert(find(index[c])).second) return false;
  }
  // shared classes on an edge must all be matched
  for (auto [u, v] : g.edges()) {
    std::size_t shared = 0;
    for (std::size_t c : classes[u]) shared += classes[v].count(c);
    auto it = cover.matchings.find({u, v});
    const std::size_t matched = it == cover.matchings.end() ? 0 : it->second.size();
    if (shared != matched) return false;
  }
  return true;
}

std::size_t chromatic_number_exact(const Graph& g) {
  if (g.n() == 0) return 0;
  for (std::size_t q = 1; q <= kMaxSolverListSize; ++q) {
    std::vector<std::vector<std::int64_t>> lists(g.n());
    for (auto& l : lists)
      for (std::size_t c = 1; c <= q; ++c) l.push_back(static_cast<std::int64_t>(c));
    if (solve_exact(g, cover_from_lists(g, lists))) return q;
  }
  throw GuardError("chromatic number <= 8", "chromatic number exceeds the solver's list limit");
}

ChiCEstimate estimate_chi_c(const Graph& g, std::size_t samples, std::uint64_t seed) {
  ChiCEstimate out;
  out.samples = samples;
  out.chromatic = chromatic_number_exact(g);
  if (g.n() == 0) return out;
  // any cover with q > max degree is colourable greedily
  const std::size_t cap = g.max_degree() + 1;
  for (std::size_t q = out.chromatic; q <= cap; ++q) {
    bool all = true;
    for (std::size_t i = 0; i < samples && all; ++i) {
      const std::uint64_t s = seed + 1'000'003ULL * q + i;
      all = solve_exact(g, random_cover(g, q, s)).has_value();
    }
    if (all) {
      out.estimate = q;
      return out;
    }
  }
  throw InvariantError("a cover with q > max degree was not colourable");
}

double dkps_ell(double k_max, int r_max, double max_degree, double lambda) {
  require(k_max >= 1 && r_max >= 2 && max_degree >= 1 && lambda > 0, "k_max >= 1, r_max >= 2, lambda > 0",
          "invalid parameters for ell");
  const double d4 = std::log(8.0) + 4 * std::log(max_degree);
  return std::pow(k_max, 1.0 / r_max) * std::exp(static_cast<double>(r_max)) * std::pow(d4, r_max - 1) / lambda;
}

namespace {

double log_delta(double max_degree) { return std::log(std::max(max_degree, 1.0)); }

double effective_ell(double max_degree, double lambda, double ell) {
  const double root = std::sqrt(7 * log_delta(max_degree) / ell);
  if (root >= 1) return std::numeric_limits<double>::infinity();
  return (lambda / (1 + lambda)) * ell / (1 - root);
}

}  // namespace

double dkps_scaled_degree(double degree, double max_degree, double lambda, double ell) {
  require(ell > 0 && lambda > 0, "ell > 0, lambda > 0", "invalid parameters");
  return degree / effective_ell(max_degree, lambda, ell);
}

double dkps_list_requirement(double beta, double gamma, double degree, double max_degree, double lambda,
                             double ell) {
  require(ell > 0 && lambda > 0, "ell > 0, lambda > 0", "invalid parameters");
  return beta * effective_ell(max_degree, lambda, ell) + gamma * degree;
}

DkpsReport dkps_condition_check(const Graph& g, const CorrespondenceCover& cover,
                                const OccupancyCertificate& cert, double ell) {
  cover.validate(g);
  require(cert.beta.size() == g.n() && cert.gamma.size() == g.n(), "one (beta, gamma) per vertex",
          "certificate size does not match the graph");
  require(ell > 0 && cert.lambda > 0, "ell > 0, lambda > 0", "invalid parameters");
  DkpsReport rep;
  const double delta = static_cast<double>(g.max_degree());
  rep.max_degree = delta;
  rep.ell = ell;
  rep.lambda = cert.lambda;
  rep.delta_hypothesis = delta >= 64;
  rep.ell_hypothesis = ell > log_delta(delta);

  for (Vertex u = 0; u < g.n(); ++u) {
    const double need = dkps_list_requirement(cert.beta[u], cert.gamma[u], static_cast<double>(g.degree(u)),
                                              delta, cert.lambda, ell);
    const bool ok = static_cast<double>(cover.lists[u].size()) >= need;
    rep.list_required.push_back(need);
    rep.list_ok.push_back(ok);
    rep.lists_ok = rep.lists_ok && ok;
  }

  rep.z_threshold = 8 * std::pow(delta, 4);
  const auto min_size = static_cast<std::size_t>(std::max(0.0, std::ceil(ell / 8)));
  const long double lambda = cert.lambda;
  long double worst = std::numeric_limits<long double>::infinity();
  std::vector<long double> z;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (g.degree(u) < min_size) continue;
    guard(g.degree(u) <= kMaxInducedCheckDegree, "deg <= 22", "Z_F scan limited to degree 22");
    rep.z_vacuous = false;
    SmallGraph nb = SmallGraph::induced(g, g.neighbors(u));
    z.assign(std::size_t{1} << nb.n, 1);
    for (std::uint64_t mask = 1; mask < z.size(); ++mask) {
      const int v = std::countr_zero(mask);
      const std::uint64_t rest = mask & (mask - 1);
      z[mask] = z[rest] + lambda * z[rest & ~nb.adj[v]];
      if (static_cast<std::size_t>(std::popcount(mask)) < min_size) continue;
      if (z[mask] < rep.z_threshold && z[mask] < worst) {
        worst = z[mask];
        rep.z_ok = false;
        rep.z_witness_vertex = u;
        rep.z_witness_value = z[mask];
        rep.z_witness_set.clear();
        for (std::uint64_t m = mask; m; m &= m - 1)
          rep.z_witness_set.push_back(g.neighbors(u)[static_cast<std::size_t>(std::countr_zero(m))]);
      }
    }
  }

  rep.list_like = is_list_like(g, cover);
  rep.mode_ok = rep.list_like || cert.mode == OccupancyMode::Strong;
  rep.hypotheses_verified =
      rep.delta_hypothesis && rep.ell_hypothesis && rep.lists_ok && rep.z_ok && rep.mode_ok;
  return rep;
}

namespace {

std::size_t median_of(const std::uint32_t* coeffs, std::size_t len) {
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < len; ++i) total += coeffs[i];
  std::uint64_t tail = 0;
  for (std::size_t l = len; l-- > 0;) {
    tail += coeffs[l];
    if (2 * tail >= total) return l;
  }
  return 0;
}

}  // namespace

std::optional<std::size_t> alpha_min(const Graph& g, Vertex v, std::uint64_t t) {
  require(v < g.n(), "vertex in range", "vertex out of range");
  guard(g.degree(v) <= kMaxAlphaMinDegree, "deg(v) <= 18", "alpha_min limited to degree 18");
  SmallGraph nb = SmallGraph::induced(g, g.neighbors(v));
  const std::size_t width = nb.n + 1;
  const std::size_t count = std::size_t{1} << nb.n;
  std::vector<std::uint32_t> poly(count * width, 0);
  poly[0] = 1;
  std::optional<std::size_t> best;
  auto consider = [&](std::uint64_t mask) {
    const std::uint32_t* p = &poly[mask * width];
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < width; ++i) total += p[i];
    if (total < t) return;
    const std::size_t med = median_of(p, width);
    if (!best || med < *best) best = med;
  };
  consider(0);
  for (std::uint64_t mask = 1; mask < count; ++mask) {
    const int u = std::countr_zero(mask);
    const std::uint64_t rest = mask & (mask - 1);
    const std::uint64_t apart = rest & ~nb.adj[u];
    std::uint32_t* p = &poly[mask * width];
    const std::uint32_t* a = &poly[rest * width];
    const std::uint32_t* b = &poly[apart * width];
    p[0] = a[0];
    for (std::size_t i = 1; i < width; ++i) p[i] = a[i] + b[i - 1];
    consider(mask);
  }
  return best;
}

BknpArithmetic bknp_arithmetic(double degree, double max_degree, double epsilon, double ell, double t) {
  require(epsilon > 0 && epsilon < 0.5, "epsilon in (0, 1/2)", "epsilon out of range");
  require(degree >= 0 && ell >= 0 && t >= 0 && max_degree >= 1, "nonnegative parameters", "invalid parameters");
  BknpArithmetic out;
  const double ld = std::log(max_degree);
  out.c1_lhs = epsilon * (1 - epsilon) * ell * t;
  out.c1_rhs = 18 * ld + 6 * std::log(16.0);
  out.c1 = out.c1_lhs >= out.c1_rhs;
  out.c2_rhs = 36 * ld + 12 * std::log(16.0);
  out.c2 = ell >= out.c2_rhs;

  out.c3_log_rhs = -3 * ld - std::log(8.0);
  if (ell > degree) {
    out.c3_log_lhs = -std::numeric_limits<double>::infinity();
    out.c3 = true;
    out.c3_exact = true;
    return out;
  }
  out.c3_log_lhs = std::lgamma(degree + 1) - std::lgamma(ell + 1) - std::lgamma(degree - ell + 1) -
                   std::lgamma(ell + 1);
  const bool integral = ell == std::floor(ell) && degree == std::floor(degree) && max_degree == std::floor(max_degree);
  if (integral && ell <= 1000 && degree <= 1e6) {
    const auto l = static_cast<unsigned>(ell);
    const auto d = static_cast<unsigned>(degree);
    BigInt binom = 1, fact = 1;
    for (unsigned i = 1; i <= l; ++i) {
      binom = binom * (d - l + i) / i;
      fact *= i;
    }
    BigInt delta = static_cast<std::uint64_t>(max_degree);
    out.c3 = 8 * delta * delta * delta * binom < fact;
    out.c3_exact = true;
  } else {
    out.c3 = out.c3_log_lhs < out.c3_log_rhs;
  }
  return out;
}

BknpReport bknp_condition_check(const Graph& g, const CorrespondenceCover& cover, double epsilon,
                                std::span<const std::uint64_t> ell, std::span<const std::uint64_t> t) {
  cover.validate(g);
  require(ell.size() == g.n() && t.size() == g.n(), "per-vertex ell and t", "ell and t need one entry per vertex");
  BknpReport rep;
  rep.epsilon = epsilon;
  rep.max_degree = static_cast<double>(std::max<std::size_t>(g.max_degree(), 1));
  for (Vertex v = 0; v < g.n(); ++v) {
    BknpVertexReport vr;
    vr.v = v;
    const double deg = static_cast<double>(g.degree(v));
    vr.conditions = bknp_arithmetic(deg, rep.max_degree, epsilon, static_cast<double>(ell[v]),
                                    static_cast<double>(t[v]));
    vr.alpha_min = alpha_min(g, v, t[v]);
    double first = 0;
    if (deg > 0 && vr.alpha_min)
      first = *vr.alpha_min == 0 ? std::numeric_limits<double>::infinity()
                                 : 2 * deg / ((1 - epsilon) * (1 - epsilon) * static_cast<double>(*vr.alpha_min));
    const double second = 2 * static_cast<double>(t[v]) * static_cast<double>(ell[v]) / epsilon;
    vr.list_required = std::max(first, second);
    vr.list_size = cover.lists[v].size();
    vr.list_ok = static_cast<double>(vr.list_size) >= vr.list_required;
    rep.c1 = rep.c1 && vr.conditions.c1;
    rep.c2 = rep.c2 && vr.conditions.c2;
    rep.c3 = rep.c3 && vr.conditions.c3;
    rep.lists_ok = rep.lists_ok && vr.list_ok;
    rep.vertices.push_back(vr);
  }
  rep.hypotheses_verified = rep.c1 && rep.c2 && rep.c3 && rep.lists_ok;
  return rep;
}

double median_bound(double n_sub, double k, int r, const BigInt& independent_sets) {
  require(r >= 2, "r >= 2", "clique order must be at least 2");
  require(k >= 1, "k >= 1", "sparsity budget must be at least 1");
  require(n_sub >= std::pow(static_cast<double>(r), 2.0 * r), "n >= r^{2r}", "graph too small for the bound");
  require(independent_sets >= 2, "i(G) >= 2", "need at least two independent sets");
  const double li = static_cast<double>(boost::multiprecision::log(HighPrecision(independent_sets)));
  const double x = r * std::pow(k, 1.0 / (r * (r - 1.0))) * li;
  return li / (2.0 * r * std::log(x));
}

double list_size_threshold(ListTheorem kind, double degree, double epsilon, int r, double mu,
                           std::optional<double> epsilon_max) {
  require(degree > std::numbers::e, "deg > e", "log log deg must be positive");
  require(r >= 1 && mu >= 0 && epsilon >= 0, "r >= 1, mu >= 0, eps >= 0", "invalid parameters");
  const double ld = std::log(degree);
  const double core = degree * (epsilon + r * std::log(ld) / ld);
  if (kind == ListTheorem::Median) return (30 + mu) * core;
  const double em = epsilon_max.value_or(epsilon);
  require(epsilon < 1 && em < 1, "eps < 1", "threshold undefined for eps >= 1");
  return (1 + mu) * std::min(2.0, (1 + em) / (1 - em)) * core;
}

bool min_degree_condition_general(double degree, double max_degree, double epsilon_max, int r_max) {
  require(max_degree >= 1, "Delta >= 1", "invalid maximum degree");
  const double exponent = std::min(2 * epsilon_max, (1 + epsilon_max) / 2);
  const double log8d4 = std::log(8.0) + 4 * std::log(max_degree);
  return degree >= std::pow(max_degree, exponent) * std::pow(log8d4, r_max);
}

bool min_degree_condition_median(double degree, double max_degree) {
  require(max_degree >= 1, "Delta >= 1", "invalid maximum degree");
  const double l = std::log(max_degree);
  return degree >= l * l;
}

}  // namespace lsg
