#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "pdpoly/graph.hpp"
#include "pdpoly/kernels.hpp"
#include "pdpoly/polynomial.hpp"

namespace pdpoly {

enum class CountMethod { automatic, lattice, plain };

CountMethod count_method_from_name(std::string_view name);

struct CountingOptions {
  CountMethod method = CountMethod::automatic;
  int lattice_cap = 26;
  int plain_cap = 20;
  /// Worker threads for the lattice layers; 0 means hardware concurrency.
  int workers = 0;
  kernels::Isa isa = kernels::best_isa();
};

/// Coefficient i counts the i-subsets whose observation covers V under the
/// given rule set. The lattice method visits subsets by increasing size and
/// marks S as soon as some S minus one vertex is marked, simulating only the
/// remainder; the plain method simulates every subset. Both return the same
/// polynomial. Throws TooLarge above the method's cap.
IntPolynomial count_polynomial(const Graph& g, kernels::Observation mode, const CountingOptions& options = {});

IntPolynomial pd_polynomial(const Graph& g, const CountingOptions& options = {});
IntPolynomial zf_polynomial(const Graph& g, const CountingOptions& options = {});
IntPolynomial dom_polynomial(const Graph& g, const CountingOptions& options = {});

/// P(G;1), the number of power dominating sets.
BigInt pd_set_count(const Graph& g, const CountingOptions& options = {});

/// (n-k, p(G;n-k)) for k = 0..kmax, counting k-subsets S for which
/// S ∩ N(V∖S) zero-forces G[S]. Only k-subsets are visited. kmax is clamped
/// to n-1.
std::vector<std::pair<int, BigInt>> pd_tail_coefficients(const Graph& g, int kmax);

}  // namespace pdpoly
