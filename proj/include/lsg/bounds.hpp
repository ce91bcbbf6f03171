#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg {

/// One level of the recursive construction in sparse_iset.
struct IsetTraceStep {
  enum class Case { Turan, HighDegreeNeighborhood };

  int r = 0;
  double k = 0;        // budget in force at this level (after capping at C(n, r))
  std::size_t n = 0;   // vertices at this level
  double threshold = 0;          // degree threshold X
  std::size_t high_degree = 0;   // |B|
  Case which = Case::Turan;
  Vertex chosen = 0;             // v in B (host ids of the top-level graph)
  std::uint64_t clique_count = 0;  // n_v: K_r copies containing v
};

struct IndependentSetWitness {
  std::vector<Vertex> vertices;
  double guarantee = 0;  // size the construction promises
  std::vector<IsetTraceStep> trace;

  std::size_t size() const noexcept { return vertices.size(); }
};

/// Smallest integer the witness must reach: ceil(guarantee), with a relative
/// slack of 1e-9 absorbing rounding when the formula lands on an integer.
std::uint64_t required_size(double guarantee);

/// Minimum-degree greedy: take a vertex of least remaining degree, delete its
/// closed neighbourhood, repeat. Size >= n / (1 + d(G)).
IndependentSetWitness turan_iset(const Graph& g);

/// Independent set of size >= (1/r) (n / k^{1/r})^{1/(r-1)} in a (k, r)-sparse
/// graph with n >= r^{2r} and k >= 1. Recurses into a high-degree vertex's
/// neighbourhood (r - 1) or falls back to the greedy bound.
IndependentSetWitness sparse_iset(const Graph& g, double k, int r);

/// (1/r) (n / k^{1/r})^{1/(r-1)}.
double sparse_iset_guarantee(double n, double k, int r);

/// Lower bound alpha (log(n lambda) - log(k)/r - (r-1) log(r alpha)) on log Z_G(lambda).
double z_lower_bound(std::uint64_t n, double k, int r, double lambda, std::uint64_t alpha);

/// floor((1/(r e^{r/(r-1)})) (n lambda / k^{1/r})^{1/(r-1)}): the largest alpha
/// for which z >= r alpha follows from the log Z lower bound.
std::uint64_t admissible_alpha(std::uint64_t n, double k, int r, double lambda);

/// Value reported with a flag: formulas valid only as the degree grows.
struct AsymptoticReference {
  double value = 0;
  bool asymptotic_reference = true;
  std::vector<std::string> warnings;
};

/// (1/(r-2)) z / log(omega z), omega = e^{r/(r-2)} k^{1/(r(r-2))}; the
/// (1 - o(1)) factor of the occupancy-ratio bound is set to 1.
AsymptoticReference ratio_reference(double z, double k, int r);

struct EtaParameters {
  double degree = 0;  // Delta or d; must exceed e
  double epsilon = 0;
  int r = 3;

  /// epsilon + r log log degree / log degree
  double eta() const;
};

enum class BoundKind { IsetMaxDegree, IsetAverageDegree, CorrespondenceChromatic };

/// n/(eta Delta), n/(9 eta d), or eta Delta min{2, (1+eps)/(1-eps)}.
AsymptoticReference theorem_bound(BoundKind kind, const EtaParameters& params, double n);

struct DegreeReductionReport {
  double average_degree = 0;
  double k = 0;
  std::size_t low_degree = 0;     // |V1|
  std::size_t sparse_nbhd = 0;    // |V2|
  std::vector<Vertex> kept;       // V3 = V1 ∩ V2, increasing
  Graph subgraph;                 // G[V3]
};

/// Keeps vertices of degree <= 3d whose neighbourhood is (3 d^{eps r}, r)-sparse.
/// Requires G to be (k, r+1)-sparse with k <= n d^{eps r} / (r + 1).
DegreeReductionReport avg_degree_reduction(const Graph& g, double k, int r, double epsilon);

}  // namespace lsg
