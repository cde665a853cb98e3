#pragma once

#include <complex>
#include <optional>
#include <string_view>
#include <vector>

#include "pdpoly/error.hpp"
#include "pdpoly/graph.hpp"
#include "pdpoly/polynomial.hpp"

namespace pdpoly {

inline constexpr double kDefaultRootTolerance = 1e-10;
inline constexpr int kRootIterationCap = 1000;

struct Root {
  std::complex<double> value;
  int multiplicity = 1;
};

enum class RootClass { empty_graph, p2_union, F_union, other };

std::string_view root_class_name(RootClass c);

/// Bound checks for one root a+bi with a > 0.
struct RoucheVerdict {
  std::complex<double> root;
  double f_graph = 0;              // f(G;a)
  double graph_bound = 0;          // min{f(G;a), f(G;a)^(1/n)}
  bool graph_bound_holds = false;  // |b| >= graph_bound - 1e-6
  /// Present only for connected graphs with n >= 3.
  std::optional<double> f_universal;           // f(a)
  std::optional<double> universal_bound;       // min{f(a), f(a)^n}
  std::optional<bool> universal_bound_holds;   // |b| >= universal_bound - 1e-6
  std::optional<bool> universal_below_graph;   // f(a) <= f(G;a)
};

struct RootReport {
  /// Distinct roots after clustering, zero first when present.
  std::vector<Root> roots;
  int zero_multiplicity = 0;
  int distinct_count = 0;
  /// |p(r)| for each entry of roots.
  std::vector<double> residuals;
  std::optional<RootClass> classification;
  std::vector<RoucheVerdict> rouche_verdicts;
};

/// Thrown when the iteration cap is hit or a residual misses its bound; the
/// partial report is attached.
class NumericFailureError : public Error {
 public:
  NumericFailureError(const std::string& message, RootReport partial)
      : Error(ErrorKind::NumericFailure, message), partial_(std::move(partial)) {}
  const RootReport& partial() const noexcept { return partial_; }

 private:
  RootReport partial_;
};

/// Removes x^m exactly, splits the rest into squarefree factors over the
/// rationals, then runs Aberth-Ehrlich on each factor (unit max-norm
/// coefficients, at most kRootIterationCap sweeps) with a Newton polish.
/// Every root must satisfy |p(r)| <= tol * max|c| * max(1,|r|)^deg. Roots
/// closer than 1e3 * tol are merged. Requires degree >= 1 (DomainError).
RootReport find_roots(const IntPolynomial& p, double tol = kDefaultRootTolerance);

/// Exact integer roots with multiplicity, zero included; candidates are the
/// divisors (both signs) of the lowest nonzero coefficient up to a Fujiwara root
/// bound. Every rational root of a monic integer polynomial is among them.
std::vector<std::pair<BigInt, int>> integer_roots(const IntPolynomial& p);

struct FGadget {
  int owner = 0;
  int first = 0;
  int second = 0;
  bool adjacent = false;
};

struct FDecomposition {
  VertexSet core;
  std::vector<FGadget> gadgets;  // sorted by owner
};

/// Witness that g is built from a connected core H by giving every core vertex
/// two private vertices (optionally adjacent). Returns nullopt for graphs
/// outside the family, including disconnected ones.
std::optional<FDecomposition> recognize_F(const Graph& g);

struct RootClassification {
  RootClass cls = RootClass::other;
  /// One decomposition per nontrivial component when cls == F_union, in
  /// component order with vertices in g's labels.
  std::vector<FDecomposition> witness;
};

RootClassification classify_by_distinct_roots(const Graph& g);

/// f(G;a) from the polynomial; exact rational sums, one final division.
/// a <= 0 throws DomainError.
double rouche_bound_graph(const IntPolynomial& p, double a);
double rouche_bound_graph(const Graph& g, double a);
/// f(a) for order n >= 3 (DomainError otherwise).
double rouche_bound_universal(int n, double a);

/// Exact test of f(a) <= f(G;a) for a graph of order n >= 3 with polynomial p.
bool universal_bound_below_graph(const IntPolynomial& p, int n, double a);

/// find_roots on P(G;x), plus the structural class and Rouché verdicts for
/// every root with positive real part.
RootReport analyze_graph_roots(const Graph& g, double tol = kDefaultRootTolerance);
RootReport analyze_graph_roots(const Graph& g, const IntPolynomial& p, double tol = kDefaultRootTolerance);

}  // namespace pdpoly
