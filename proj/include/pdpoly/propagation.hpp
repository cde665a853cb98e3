#pragma once

#include <random>
#include <span>
#include <utility>
#include <vector>

#include "pdpoly/graph.hpp"
#include "pdpoly/polynomial.hpp"

namespace pdpoly {

/// One witnessing run of the power domination process.
struct PropagationTrace {
  VertexSet initial;
  VertexSet after_domination;
  /// (forcer, forced) in the order they fired.
  std::vector<std::pair<int, int>> forces;
  VertexSet final;
};

/// N[S]; the empty set maps to the empty set.
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

struct ClosureResult {
  VertexSet colored;
  PropagationTrace trace;
};

/// Applies the forcing rule until no colored vertex has exactly one uncolored
/// neighbor. Keeps a per-vertex count of uncolored neighbors and a worklist of
/// vertices whose count is one. The fixed point does not depend on the order
/// forces fire; passing `order_rng` picks the next force at random, which the
/// confluence tests use.
ClosureResult forcing_closure(const Graph& g, VertexSet colored, std::mt19937_64* order_rng = nullptr);

/// Domination step followed by the forcing closure, with the full trace.
PropagationTrace power_domination_trace(const Graph& g, VertexSet s);

bool is_power_dominating(const Graph& g, VertexSet s);
bool is_zero_forcing(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);

/// Minimum sizes, found by scanning sizes upward and stopping at the first hit.
int gamma_p(const Graph& g);
int zero_forcing_number(const Graph& g);
int domination_number(const Graph& g);

/// Nonempty F such that no vertex outside F has exactly one neighbor in F.
bool is_fort(const Graph& g, VertexSet f);

/// Exhaustive fort scans are limited to this order unless a caller passes a
/// larger cap explicitly.
inline constexpr int kDefaultFortCap = 20;

/// All forts (or only the inclusion-minimal ones), in increasing bit order.
std::vector<VertexSet> enumerate_forts(const Graph& g, bool minimal_only, int cap = kDefaultFortCap);

/// { N[F] : F a fort }, deduplicated, in increasing bit order. Built from all
/// forts; the minimal ones would give the same covering test, since
/// F' ⊆ F implies N[F'] ⊆ N[F].
std::vector<VertexSet> fort_neighborhood_family(const Graph& g, int cap = kDefaultFortCap);

/// S meets N[F] for every fort F.
bool is_pds_via_forts(const Graph& g, VertexSet s, int cap = kDefaultFortCap);
/// Same test against a family already built by fort_neighborhood_family.
bool meets_every_fort(std::span<const VertexSet> family, VertexSet s);

struct IpBoundCheck {
  BigInt lhs;  // |N(G)|
  BigInt rhs;  // 2^n - P(G;1)
  bool holds = false;
};

IpBoundCheck check_ip_bound(const Graph& g, int cap = kDefaultFortCap);

}  // namespace pdpoly
