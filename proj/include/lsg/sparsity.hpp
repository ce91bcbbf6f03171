#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg {

/// Number of r-subsets of `subset` that induce a clique in g. r = 0 yields 1.
std::uint64_t count_cliques(const Graph& g, std::span<const Vertex> subset, int r);

/// Number of K_r copies inside G[N(v)].
std::uint64_t count_neighborhood_cliques(const Graph& g, Vertex v, int r);

/// Largest integer not exceeding k, saturated to the uint64 range.
std::uint64_t floor_budget(double k);

struct SparsityViolation {
  Vertex v;
  std::uint64_t count;
  std::uint64_t k_floor;
};

/// Per-vertex witness that G[N(v)] holds at most floor(k(v)) copies of K_{r(v)}.
struct SparsityCertificate {
  std::vector<double> k;
  std::vector<int> r;
  std::vector<std::uint64_t> counts;
  bool pass = true;
  std::vector<SparsityViolation> violations;
};

SparsityCertificate certify_local_sparsity(const Graph& g, std::span<const double> k,
                                           std::span<const int> r);
SparsityCertificate certify_local_sparsity(const Graph& g, double k, int r);

/// Whole-graph (k, r)-sparsity: at most floor(k) copies of K_r in g.
bool is_sparse(const Graph& g, double k, int r);

/// Number of (not necessarily induced) subgraphs of g isomorphic to f,
/// counted as distinct vertex-set/edge-set pairs. |V(f)| <= 10.
std::uint64_t count_copies(const Graph& g, const Graph& f);

/// |Aut(f)| by degree-pruned permutation search. |V(f)| <= 10.
std::uint64_t automorphism_count(const Graph& f);

/// ceil(k) |Aut(F)| / r!  with r = |V(F)|: a (k, F)-locally-sparse graph is
/// (returned value, r)-locally-sparse.
double convert_to_clique_sparsity(double k, const Graph& f);

}  // namespace lsg
