#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsg/graph.hpp"
#include "lsg/occupancy.hpp"

namespace lsg {

using ColorId = std::uint32_t;
using ColorPair = std::pair<ColorId, ColorId>;

/// Lists of globally unique colour ids plus, per edge (u < v), the matched
/// pairs (c in L(u), c' in L(v)).
struct CorrespondenceCover {
  std::vector<std::vector<ColorId>> lists;
  std::map<Edge, std::vector<ColorPair>> matchings;
  /// Optional display value per colour (parallel to `lists`), e.g. the
  /// original integers of a list assignment.
  std::vector<std::vector<std::int64_t>> labels;

  std::size_t fold() const;
  std::size_t max_list_size() const;
  /// First violated condition ("DP1", "DP2", "DP3", or "shape") with detail.
  std::optional<std::string> violation(const Graph& g) const;
  /// Throws PreconditionError naming the violated condition.
  void validate(const Graph& g) const;
};

/// phi[v] is the colour chosen at v.
using ColoringAssignment = std::vector<ColorId>;

/// Identity correspondences between equal integers on adjacent lists.
CorrespondenceCover cover_from_lists(const Graph& g, const std::vector<std::vector<std::int64_t>>& lists);

/// q-fold cover where edge (u, v) matches the i-th colour of u to the
/// perm[i]-th colour of v. Edges absent from `perms` get the identity.
CorrespondenceCover cover_from_permutations(const Graph& g, std::size_t q,
                                            const std::map<Edge, std::vector<std::size_t>>& perms);

struct CoverTwist {
  bool full = true;
  double keep_probability = 1.0;  // used when !full

  static CoverTwist partial(double p) { return {false, p}; }
};

/// Uniformly random perfect matching on every edge, optionally thinned.
CorrespondenceCover random_cover(const Graph& g, std::size_t q, std::uint64_t seed, CoverTwist twist = {});

/// The independent validator: phi(v) in L(v) and no matched pair across an edge.
bool is_proper(const Graph& g, const CorrespondenceCover& cover, const ColoringAssignment& phi);

struct SolveStats {
  std::uint64_t nodes = 0;
};

inline constexpr std::size_t kMaxSolverVertices = 30;
inline constexpr std::size_t kMaxSolverListSize = 8;

/// Backtracking with forward checking; nullopt means UNSAT (exhaustive).
std::optional<ColoringAssignment> solve_exact(const Graph& g, const CorrespondenceCover& cover,
                                              SolveStats* stats = nullptr);

/// Randomised greedy followed by min-conflicts repair. nullopt is GIVE_UP,
/// not an UNSAT claim.
std::optional<ColoringAssignment> heuristic_color(const Graph& g, const CorrespondenceCover& cover,
                                                  std::uint64_t seed, std::uint64_t max_iters = 100000);

/// True iff colours can be identified globally so that every matching is
/// exactly the identity on the colours two adjacent lists share.
bool is_list_like(const Graph& g, const CorrespondenceCover& cover);

/// Smallest q for which the identity q-list cover is SAT.
std::size_t chromatic_number_exact(const Graph& g);

struct ChiCEstimate {
  std::size_t chromatic = 0;  // exact, via identity covers
  std::size_t estimate = 0;   // smallest q at which every sampled q-fold cover was SAT
  std::size_t samples = 0;
  bool lower_bound_only = true;
};

/// Empirical correspondence chromatic proxy. Sampling can only show a fold is
/// too small, so `estimate` is a lower-bound estimate of the true value.
ChiCEstimate estimate_chi_c(const Graph& g, std::size_t samples, std::uint64_t seed);

// ---- occupancy-based DP-colouring conditions ----

/// k_max^{1/r_max} e^{r_max} (log 8 Delta^4)^{r_max - 1} / lambda
double dkps_ell(double k_max, int r_max, double max_degree, double lambda);

/// deg / ((lambda/(1+lambda)) ell / (1 - sqrt(7 log Delta / ell)))
double dkps_scaled_degree(double degree, double max_degree, double lambda, double ell);

/// beta (lambda/(1+lambda)) ell / (1 - sqrt(7 log Delta / ell)) + gamma deg; infinite
/// when 7 log Delta >= ell.
double dkps_list_requirement(double beta, double gamma, double degree, double max_degree, double lambda,
                             double ell);

struct DkpsReport {
  double max_degree = 0;
  double ell = 0;
  double lambda = 0;
  bool delta_hypothesis = false;  // Delta >= 2^6
  bool ell_hypothesis = false;    // ell > log Delta
  std::vector<double> list_required;
  std::vector<bool> list_ok;
  bool lists_ok = true;
  double z_threshold = 0;  // 8 Delta^4
  bool z_ok = true;
  bool z_vacuous = true;   // no neighbourhood has ell/8 vertices
  std::optional<Vertex> z_witness_vertex;
  std::vector<Vertex> z_witness_set;
  long double z_witness_value = 0;
  bool list_like = false;
  bool mode_ok = false;  // list-like needs any mode, otherwise Strong
  bool hypotheses_verified = false;
};

/// Checks the hypotheses of the occupancy-based colouring result for `cover` and the
/// occupancy certificate. Never produces or claims a colouring. The
/// certificate's own validity is checked separately by check_certificate.
DkpsReport dkps_condition_check(const Graph& g, const CorrespondenceCover& cover,
                                const OccupancyCertificate& cert, double ell);

// ---- median-based DP-colouring conditions ----

inline constexpr std::size_t kMaxAlphaMinDegree = 18;

/// min over S subset of N(v) with i(G[S]) >= t of the median independence
/// number of G[S]; nullopt when no S qualifies.
std::optional<std::size_t> alpha_min(const Graph& g, Vertex v, std::uint64_t t);

struct BknpArithmetic {
  bool c1 = false;
  bool c2 = false;
  bool c3 = false;
  double c1_lhs = 0, c1_rhs = 0;
  double c2_rhs = 0;
  double c3_log_lhs = 0, c3_log_rhs = 0;  // log(binom/ell!) vs log(Delta^{-3}/8)
  bool c3_exact = false;
};

/// C1-C3 for one vertex. C3 uses exact integers when ell is integral and at
/// most 1000, log-gamma otherwise.
BknpArithmetic bknp_arithmetic(double degree, double max_degree, double epsilon, double ell, double t);

struct BknpVertexReport {
  Vertex v = 0;
  BknpArithmetic conditions;
  std::optional<std::size_t> alpha_min;
  double list_required = 0;
  std::size_t list_size = 0;
  bool list_ok = false;
};

struct BknpReport {
  double max_degree = 0;
  double epsilon = 0;
  std::vector<BknpVertexReport> vertices;
  bool c1 = true, c2 = true, c3 = true, lists_ok = true;
  bool hypotheses_verified = false;
};

BknpReport bknp_condition_check(const Graph& g, const CorrespondenceCover& cover, double epsilon,
                                std::span<const std::uint64_t> ell, std::span<const std::uint64_t> t);

/// log i / (2 r log(r k^{1/(r(r-1))} log i)) for the median independence number.
double median_bound(double n_sub, double k, int r, const BigInt& independent_sets);

enum class ListTheorem { GeneralOccupancy, Median };

/// (1+mu) min{2, (1+eps_max)/(1-eps_max)} deg (eps + r loglog deg / log deg) or
/// (30+mu) deg (...). Asymptotic reference only.
double list_size_threshold(ListTheorem kind, double degree, double epsilon, int r, double mu,
                           std::optional<double> epsilon_max = std::nullopt);

/// deg >= Delta^{min{2 eps_max, (1+eps_max)/2}} (log 8 Delta^4)^{r_max}
bool min_degree_condition_general(double degree, double max_degree, double epsilon_max, int r_max);

/// deg >= log^2 Delta
bool min_degree_condition_median(double degree, double max_degree);

}  // namespace lsg
