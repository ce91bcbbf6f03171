#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lsg/graph.hpp"

namespace lsg::gen {

/// Binomial random graph: each pair independently with probability p.
Graph gnp(std::size_t n, double p, std::uint64_t seed);

/// m random edges between the halves of a random balanced bipartition.
Graph random_triangle_free(std::size_t n, std::size_t m, std::uint64_t seed);

/// Greedy over a seeded shuffle of all pairs; an edge is dropped for good if
/// it would push a degree above max_degree or some neighbourhood above
/// floor(k) copies of K_r.
Graph random_locally_sparse(std::size_t n, std::size_t max_degree, double k, int r, std::uint64_t seed);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph empty(std::size_t n);
Graph star(std::size_t leaves);
Graph petersen();
/// Vertices are the k-subsets of {0..n-1} in lexicographic order; disjoint sets are adjacent.
Graph kneser(std::size_t n, std::size_t k);
Graph complete_multipartite(const std::vector<std::size_t>& parts);

/// Builds a named family from numeric parameters, e.g. ("kneser", {5, 2}).
Graph family(const std::string& name, const std::vector<std::size_t>& params);

}  // namespace lsg::gen
