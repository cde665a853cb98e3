#include "pdpoly/closed_forms.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pdpoly/counting.hpp"
#include "pdpoly/error.hpp"
#include "pdpoly/propagation.hpp"

namespace pdpoly {

IntPolynomial formula_family(Family f, int n) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::FamilyDomainError, std::string(family_name(f)) + " formula requires " + what);
  };
  switch (f) {
    case Family::complete:
    case Family::path:
      require(n >= 1, "n >= 1");
      return IntPolynomial::binomial_minus_one(n);
    case Family::cycle:
      require(n >= 3, "n >= 3");
      return IntPolynomial::binomial_minus_one(n);
    case Family::wheel:
      require(n >= 4, "n >= 4");
      return IntPolynomial::binomial_minus_one(n);
    case Family::empty:
      require(n >= 1, "n >= 1");
      return IntPolynomial::monomial(n);
    case Family::star:
      require(n >= 3, "n >= 3");
      return IntPolynomial::binomial(n - 1).shift(1) + IntPolynomial::monomial(n - 1) +
             IntPolynomial::monomial(n - 2, n - 1);
    case Family::complete_bipartite:
      break;
  }
  throw Error(ErrorKind::FamilyDomainError, "no closed form for " + std::string(family_name(f)));
}

IntPolynomial corona_complete_poly(const Graph& h, int k) {
  if (k < 1) throw Error(ErrorKind::FamilyDomainError, "corona with K_k requires k >= 1");
  if (k == 1) return pd_polynomial(corona(h, make_family(Family::complete, 1)));
  const IntPolynomial factor = IntPolynomial::binomial_minus_one(k + 1);
  IntPolynomial out{1};
  for (int i = 0; i < h.n(); ++i) out *= factor;
  return out;
}

IntPolynomial disjoint_union_poly(const IntPolynomial& p1, const IntPolynomial& p2) {
  if (p1.coeff(0) != 0 || p2.coeff(0) != 0)
    throw Error(ErrorKind::DomainError, "power domination polynomials have a zero constant term");
  return p1 * p2;
}

namespace {

int join_isolates(const Graph& g) {
  if (g.n() == 1) return 0;
  int isolates = 0;
  for (int v = 0; v < g.n(); ++v) isolates += g.degree(v) == 0 ? 1 : 0;
  return isolates;
}

// (1 + I/x) p, kept in the integer ring: I·p/x is a shift after checking the
// constant term vanishes.
IntPolynomial with_isolate_term(const IntPolynomial& p, int isolates) {
  if (isolates == 0) return p;
  return p + p.shift_down(1).scale(isolates);
}

}  // namespace

IntPolynomial join_poly(const Graph& g1, const IntPolynomial& p1, const Graph& g2, const IntPolynomial& p2) {
  return with_isolate_term(p1, join_isolates(g1)) + with_isolate_term(p2, join_isolates(g2)) +
         IntPolynomial::binomial_minus_one(g1.n()) * IntPolynomial::binomial_minus_one(g2.n());
}

IntPolynomial join_poly(const Graph& g1, const Graph& g2) {
  return join_poly(g1, pd_polynomial(g1), g2, pd_polynomial(g2));
}

IntPolynomial dominating_vertex_poly(const Graph& g, const IntPolynomial& p) {
  return with_isolate_term(p, join_isolates(g)) + IntPolynomial::binomial(g.n()).shift(1);
}

IntPolynomial dominating_vertex_poly(const Graph& g) { return dominating_vertex_poly(g, pd_polynomial(g)); }

IntPolynomial formula_pd_polynomial(const Graph& g, const CountingOptions& options) {
  const int n = g.n();
  if (n == 1) return IntPolynomial::monomial(1);
  const auto comps = components(g);
  if (comps.size() > 1) {
    IntPolynomial out = formula_pd_polynomial(g.induced(comps.front()), options);
    for (std::size_t i = 1; i < comps.size(); ++i)
      out = disjoint_union_poly(out, formula_pd_polynomial(g.induced(comps[i]), options));
    return out;
  }
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) {
      const Graph rest = g.induced(g.vertices().without(v));
      return dominating_vertex_poly(rest, formula_pd_polynomial(rest, options));
    }
  return pd_polynomial(g, options);
}

bool is_path_graph(const Graph& g) {
  if (!g.is_connected()) return false;
  if (g.n() == 1) return true;
  if (g.edge_count() != g.n() - 1) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

std::string identification_hypothesis_failure(const Gadget& gadget) {
  const Graph& g = gadget.graph;
  for (int v = 0; v < g.n(); ++v)
    if (!is_power_dominating(g, VertexSet(g.n(), {v})))
      return "vertex " + std::to_string(v) + " alone is not power dominating";
  if (is_path_graph(g) && g.degree(gadget.anchor) <= 1)
    return "anchor " + std::to_string(gadget.anchor) + " is an endpoint of a path gadget";
  return {};
}

IntPolynomial identification_poly(const Graph& h, std::span<const Gadget> gadgets) {
  if (static_cast<int>(gadgets.size()) != h.n())
    throw Error(ErrorKind::ArityError, "identification needs " + std::to_string(h.n()) + " gadgets, got " +
                                           std::to_string(gadgets.size()));
  IntPolynomial out{1};
  for (std::size_t i = 0; i < gadgets.size(); ++i) {
    if (gadgets[i].anchor < 0 || gadgets[i].anchor >= gadgets[i].graph.n())
      throw Error(ErrorKind::InvalidVertex, "gadget " + std::to_string(i) + " anchor out of range");
    if (auto why = identification_hypothesis_failure(gadgets[i]); !why.empty())
      throw Error(ErrorKind::HypothesisNotMet, "gadget " + std::to_string(i) + ": " + why);
    out *= IntPolynomial::binomial_minus_one(gadgets[i].graph.n());
  }
  return out;
}

bool zf_equals_pd_condition(const Graph& g) {
  const auto comps = components(g);
  return std::all_of(comps.begin(), comps.end(), [](VertexSet c) { return c.size() <= 2; });
}

bool dom_equals_pd_condition(const Graph& g) {
  for (int u = 0; u < g.n(); ++u) {
    if (g.degree(u) == 0) continue;
    bool found = false;
    for (Word rest = g.neighbors(u); rest != 0 && !found; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      found = (g.closed_neighbors(v) & ~g.closed_neighbors(u)) == 0;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace pdpoly
