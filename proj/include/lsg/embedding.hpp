#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg {

/// G' together with the 2^j homomorphisms G -> G' and the transported
/// sparsity parameters. Copy 0 of every round keeps its vertex ids; copy 1 is
/// offset by the previous vertex count, so homs[i] for i in binary address
/// b_{j-1}..b_0 adds b_s * n 2^s.
struct EmbeddingResult {
  Graph g_prime;
  std::vector<std::vector<Vertex>> homs;
  std::vector<double> k_tilde;
  std::vector<int> r_tilde;
  std::size_t j = 0;
};

inline constexpr std::size_t kMaxDoublingDepth = 20;

/// Doubles G j = max(delta - delta(G), 0) times, joining the two copies of each
/// vertex whose degree is still below delta. Verifies the result before returning.
EmbeddingResult min_degree_boost(const Graph& g, std::size_t delta, std::span<const double> k,
                                 std::span<const int> r);

struct EmbeddingCheck {
  bool ok = true;
  std::string failed_invariant;  // "I1".."I4", "maps", "sparsity"
  std::string detail;
};

/// Independent recheck: minimum degree, maximum degree, vertex count,
/// homomorphisms with disjoint images, transported (k, r), and that local
/// sparsity of G carries over to G'.
EmbeddingCheck verify_embedding(const Graph& g, const EmbeddingResult& result, std::size_t delta);

}  // namespace lsg
