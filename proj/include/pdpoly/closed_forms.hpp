#pragma once

#include <span>

#include "pdpoly/counting.hpp"
#include "pdpoly/graph.hpp"
#include "pdpoly/polynomial.hpp"

namespace pdpoly {

/// Power domination polynomial of a named family from its closed form:
/// complete, path, cycle and wheel give (x+1)^n - 1; empty gives x^n; star gives
/// x(x+1)^(n-1) + x^(n-1) + (n-1)x^(n-2). complete_bipartite has no closed form
/// and throws FamilyDomainError, as does any order below the family minimum.
IntPolynomial formula_family(Family f, int n);

/// P(H ∘ K_k) = ((x+1)^(k+1) - 1)^n(H) for k > 1. For k == 1 there is no
/// closed form; the polynomial is counted directly on the corona.
IntPolynomial corona_complete_poly(const Graph& h, int k);

/// Product rule for disjoint unions. Both factors must have a zero constant
/// term (DomainError otherwise).
IntPolynomial disjoint_union_poly(const IntPolynomial& p1, const IntPolynomial& p2);

/// Join rule:
///   (1 + I1/x) P(G1) + (1 + I2/x) P(G2) + ((x+1)^n1 - 1)((x+1)^n2 - 1),
/// with I_j the isolate count of G_j when n_j > 1 and 0 when n_j == 1. The
/// division by x is an exact index shift.
IntPolynomial join_poly(const Graph& g1, const Graph& g2);
IntPolynomial join_poly(const Graph& g1, const IntPolynomial& p1, const Graph& g2, const IntPolynomial& p2);

/// (1 + I/x) P(G) + x(x+1)^n for G plus one dominating vertex.
IntPolynomial dominating_vertex_poly(const Graph& g);
IntPolynomial dominating_vertex_poly(const Graph& g, const IntPolynomial& p);

/// Product of ((x+1)^n_i - 1) over the gadgets. Each gadget must have every
/// singleton power dominating, and a path gadget must not be anchored at an
/// endpoint; otherwise HypothesisNotMet names the first failing gadget.
IntPolynomial identification_poly(const Graph& h, std::span<const Gadget> gadgets);

/// Checks the identification hypotheses for one gadget; returns an empty
/// string when they hold, otherwise the reason.
std::string identification_hypothesis_failure(const Gadget& gadget);

/// P(G;x) through the decomposition rules where they apply: a product over
/// components, and the dominating-vertex rule on any vertex adjacent to all
/// others. Pieces no rule reduces are counted with `options`.
IntPolynomial formula_pd_polynomial(const Graph& g, const CountingOptions& options = {});

/// True when g is a path (any labeling).
bool is_path_graph(const Graph& g);

/// Z(G;x) = P(G;x) exactly when every component has at most two vertices.
bool zf_equals_pd_condition(const Graph& g);

/// D(G;x) = P(G;x) exactly when every non-isolate u has a neighbor v with
/// N[v] ⊆ N[u]. Polynomial time.
bool dom_equals_pd_condition(const Graph& g);

}  // namespace pdpoly
