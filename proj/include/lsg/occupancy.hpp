#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lsg/graph.hpp"
#include "lsg/hardcore.hpp"

namespace lsg {

enum class OccupancyMode { Induced, Strong };

/// Inputs the closed-form parameters were computed from.
struct Lemma45Inputs {
  double d_u = 0;
  double sigma = 0;
  int r = 3;
  double k = 1;
};

/// Fugacity plus per-vertex (beta_u, gamma_u). Claims that for every u and
/// every subgraph F of G[N(u)] (induced ones only in Induced mode)
///   beta_u lambda/(1+lambda) / Z_F + gamma_u lambda Z_F' / Z_F >= 1.
struct OccupancyCertificate {
  enum class Provenance { Manual, Lemma45 };

  double lambda = 1.0;
  std::vector<double> beta;
  std::vector<double> gamma;
  OccupancyMode mode = OccupancyMode::Induced;
  Provenance provenance = Provenance::Manual;
  std::vector<Lemma45Inputs> solver_inputs;  // one per vertex when Lemma45

  static OccupancyCertificate uniform(std::size_t n, double lambda, double beta, double gamma,
                                      OccupancyMode mode = OccupancyMode::Induced);
  double max_beta() const;
  double max_gamma() const;
};

inline constexpr double kCheckTolerance = 1e-12;
inline constexpr std::size_t kMaxInducedCheckDegree = 22;
inline constexpr std::size_t kMaxStrongCheckDegree = 12;
/// Cap on the number of (vertex subset, edge subset) pairs a strong check visits.
inline constexpr std::uint64_t kMaxStrongSubgraphs = std::uint64_t{1} << 22;

struct CheckVerdict {
  bool pass = true;
  double worst_margin = 0;  // min over (u, F) of LHS - 1
  Vertex witness_vertex = 0;
  /// Bit i selects the i-th smallest neighbour of the witness vertex.
  std::uint64_t witness_mask = 0;
  /// Strong mode: bit j keeps the j-th edge of G[F] (lexicographic order).
  std::optional<std::uint64_t> witness_edge_mask;
  std::vector<Vertex> witness_set;
  bool exhaustive = true;
  std::uint64_t subgraphs_checked = 0;
};

/// Left-hand side of the local occupancy inequality for one subgraph.
double local_occupancy_lhs(double beta, double gamma, double lambda, long double z, long double lambda_dz);

/// Exact rational margin LHS - 1 for a subgraph with polynomial `f`.
Rational local_occupancy_margin_exact(const IndependencePolynomial& f, const Rational& beta,
                                      const Rational& gamma, const Rational& lambda);

/// Exhaustive check in the certificate's mode. Throws GuardError when a
/// neighbourhood exceeds the mode's degree limit; use the sampled audit then.
CheckVerdict check_certificate(const Graph& g, const OccupancyCertificate& cert);

/// Random audit of induced subsets; never exhaustive.
CheckVerdict check_certificate_sampled(const Graph& g, const OccupancyCertificate& cert,
                                       std::uint64_t samples_per_vertex, std::uint64_t seed);

/// 1 / (max beta + max gamma * max_degree): if the induced check passes, the
/// occupancy fraction at the certificate's fugacity is at least this.
double certified_bound(const OccupancyCertificate& cert, std::size_t max_degree);

/// Smallest uniform beta that, with the given uniform gamma, passes the induced check.
double min_beta_for_gamma(const Graph& g, double lambda, double gamma);

struct ZStarSolution {
  double z = 0;
  double omega = 0;
  double tau = 0;
  double residual = 0;  // |LHS - RHS| / RHS at z
};

/// Root z* >= e/omega of d (lambda/(1+lambda)) e^{-z} = ((1-sigma)/(r-2)) z / log(omega z),
/// omega = e^{r/(r-2)} k^{1/(r(r-2))}, by bisection on [e/omega, log tau + 10].
ZStarSolution solve_zstar(double d_u, double lambda, double sigma, int r, double k);

struct Lemma45Params {
  double beta = 0;
  double gamma = 0;
  ZStarSolution zstar;
  double lambda = 1;
  double sigma = 0.1;
  int r = 3;
  double d_u = 0;
  double t0 = 0;          // log d_u / (2 log(1 + lambda))
  double expansion = 0;   // log tau - log log tau + log log(omega log tau)
  bool small_t_ok = false;        // beta >= (1+lambda)^{1+t0} / lambda
  bool t0_order_ok = false;       // t0 >= r^{2r}
  bool lower_endpoint_ok = false; // g(log(1 + t0 lambda)) > 1
  bool upper_endpoint_ok = false; // g(deg log(1 + lambda)) > 1

  /// beta lambda/(1+lambda) e^{-z} + gamma ((1-sigma)/(r-2)) z / log(omega z)
  double g(double z) const;
};

/// Closed-form (beta_u, gamma_u) at the root z*, already scaled by 1/(1-sigma).
/// `degree` is deg(u) for the upper endpoint diagnostic (defaults to d_u).
Lemma45Params lemma45_params(double d_u, double lambda, double sigma, int r, double k,
                             std::optional<double> degree = std::nullopt);

/// (1+xi)^2 d (eps + r log log d / log d): the per-vertex budget for beta + gamma d.
double lemma45_budget(double d_u, double xi, double epsilon, int r);

struct AutoCertifyResult {
  OccupancyCertificate certificate;
  CheckVerdict verdict;
};

/// Builds a certificate from the closed forms (d_u defaults to max(deg u, 1))
/// and validates it with the exhaustive checker.
AutoCertifyResult auto_certify(const Graph& g, double lambda, double sigma, std::span<const int> r,
                               std::span<const double> k, std::span<const double> d_u = {},
                               OccupancyMode mode = OccupancyMode::Strong);

}  // namespace lsg
