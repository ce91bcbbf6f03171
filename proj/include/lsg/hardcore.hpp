#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "lsg/graph.hpp"

namespace lsg {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
/// 50 decimal digits with a wide exponent; holds Z of paths with thousands of vertices.
using HighPrecision = boost::multiprecision::cpp_bin_float_50;

/// Largest graph for which the exact independence polynomial is computed.
inline constexpr std::size_t kMaxPolynomialVertices = 34;

/// coeffs[j] = number of independent sets of size j. With n <= 34 every
/// coefficient, and i(G) itself, is below 2^34 and therefore exact in 64 bits.
struct IndependencePolynomial {
  std::vector<std::uint64_t> coeffs{1};
  std::size_t n = 0;

  std::size_t alpha() const noexcept { return coeffs.size() - 1; }
  /// i(G), the number of independent sets including the empty one.
  std::uint64_t total() const noexcept;

  long double evaluate(long double lambda) const noexcept;
  long double derivative(long double lambda) const noexcept;
  Rational evaluate(const Rational& lambda) const;
  Rational derivative(const Rational& lambda) const;

  bool operator==(const IndependencePolynomial&) const = default;
};

IndependencePolynomial independence_polynomial(const Graph& g);
IndependencePolynomial independence_polynomial(const SmallGraph& g);

enum class Family { Path, Cycle };

struct TransferResult {
  HighPrecision z;
  HighPrecision dz;  // dZ/dlambda
};

/// Z and Z' of P_n or C_n from the linear recurrence Z_{P_n} = Z_{P_{n-1}} + lambda Z_{P_{n-2}}.
TransferResult transfer_z(Family family, std::size_t n, const HighPrecision& lambda);

/// (1/n) lambda Z'(lambda) / Z(lambda).
long double occupancy_fraction(const IndependencePolynomial& poly, long double lambda);
long double occupancy_fraction(const Graph& g, long double lambda);
Rational occupancy_fraction(const IndependencePolynomial& poly, const Rational& lambda);

/// Largest l with 2 * #{independent sets of size >= l} >= i(G).
std::size_t median_independence_number(const IndependencePolynomial& poly);

struct HardCoreSampleStats {
  double lambda = 1.0;
  std::uint64_t steps = 0;
  double empirical_occupancy = 0.0;
  std::uint64_t seed = 0;
};

struct GlauberOptions {
  std::ostream* trace = nullptr;  // CSV "step,size" when set
  std::uint64_t trace_stride = 1;
};

/// Single-site Glauber dynamics for the hard-core model; the occupancy is the
/// time average of |I|/n over the second half of the trajectory.
HardCoreSampleStats glauber_sample(const Graph& g, double lambda, std::uint64_t steps,
                                   std::uint64_t seed, const GlauberOptions& options = {});

/// Exact sampler from the hard-core law on graphs with at most 30 vertices.
/// Vertices are decided in increasing order, v joining with probability
/// lambda Z_{S-N[v]} / Z_S where S is the still-undecided vertex set.
class ExactSampler {
 public:
  static constexpr std::size_t kMaxVertices = 30;

  ExactSampler(const Graph& g, double lambda);

  std::vector<Vertex> draw(std::mt19937_64& rng);
  /// Z of the subgraph induced by `mask` at the sampler's fugacity.
  long double partition(std::uint64_t mask);

 private:
  SmallGraph g_;
  long double lambda_;
  std::unordered_map<std::uint64_t, long double> memo_;
};

std::vector<Vertex> exact_sample(const Graph& g, double lambda, std::uint64_t seed);

}  // namespace lsg
