#include <doctest.h>

#include <cmath>
#include <random>

#include "bridge.hpp"
#include "pdpoly/counting.hpp"
#include "pdpoly/error.hpp"
#include "pdpoly/graph_io.hpp"
#include "pdpoly/propagation.hpp"
#include "pdpoly/roots.hpp"

using namespace pdpoly;
using cd = std::complex<double>;

namespace {

bool has_root(const RootReport& r, cd z, int mult, double tol = 1e-9) {
  for (const Root& root : r.roots)
    if (std::abs(root.value - z) < tol) return root.multiplicity == mult;
  return false;
}

Graph random_connected(std::mt19937_64& rng, int n) {
  for (;;) {
    std::bernoulli_distribution coin(0.4);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(rng)) edges.emplace_back(i, j);
    Graph g = Graph::from_edge_list(n, edges);
    if (g.is_connected()) return g;
  }
}

const cd kTriangleRoot{-1.5, std::sqrt(3.0) / 2};

}  // namespace

TEST_CASE("root examples") {
  auto r = find_roots(IntPolynomial{0, 4, 6, 4, 1});
  CHECK(r.distinct_count == 4);
  CHECK(has_root(r, 0, 1));
  CHECK(has_root(r, -2, 1));
  CHECK(has_root(r, {-1, 1}, 1));
  CHECK(has_root(r, {-1, -1}, 1));
  CHECK(r.roots.front().value == cd{0, 0});

  r = find_roots(IntPolynomial{0, 3, 3, 1});
  CHECK(r.distinct_count == 3);
  CHECK(has_root(r, kTriangleRoot, 1));
  CHECK(has_root(r, std::conj(kTriangleRoot), 1));

  r = find_roots(IntPolynomial::monomial(7));
  CHECK(r.distinct_count == 1);
  CHECK(r.zero_multiplicity == 7);
  CHECK(r.roots.front().multiplicity == 7);

  CHECK_THROWS_AS(find_roots(IntPolynomial{5}), Error);
}

TEST_CASE("repeated roots are resolved exactly") {
  const IntPolynomial k2{0, 2, 1};
  const IntPolynomial p = IntPolynomial::monomial(1) * k2 * k2 * k2;
  const auto r = find_roots(p);
  CHECK(r.distinct_count == 2);
  CHECK(has_root(r, -2, 3));
  CHECK(r.zero_multiplicity == 4);

  const IntPolynomial k33{0, 0, 15, 20, 15, 6, 1};
  const auto s = find_roots(k33);
  CHECK(s.distinct_count == 5);
  for (double res : s.residuals) CHECK(res < 1e-9);
}

TEST_CASE("roots converge when corrections stall at rounding level") {
  // Order-9 graph H??E@_} factors as (x^2+3x+3)(x^5+6x^4+15x^3+19x^2+11x+1) x^2.
  const IntPolynomial p = pd_polynomial(from_graph6("H??E@_}"));
  CHECK(p == IntPolynomial{0, 0, 3, 36, 91, 113, 82, 36, 9, 1});
  const auto r = find_roots(p);
  CHECK(r.distinct_count == 8);
  CHECK(has_root(r, kTriangleRoot, 1));
  CHECK(has_root(r, -0.11010875, 1, 1e-7));
}

TEST_CASE("integer roots") {
  using R = std::vector<std::pair<BigInt, int>>;
  CHECK(integer_roots(IntPolynomial{0, 2, 1}) == R{{0, 1}, {-2, 1}});
  CHECK(integer_roots(IntPolynomial{0, 3, 3, 1}) == R{{0, 1}});
  CHECK(integer_roots(IntPolynomial{0, 0, 15, 20, 15, 6, 1}) == R{{0, 2}});
  const IntPolynomial k2{0, 2, 1};
  CHECK(integer_roots(k2 * k2 * IntPolynomial{0, 1}) == R{{0, 3}, {-2, 2}});
  // x(x-1)(x+3) = x^3 + 2x^2 - 3x
  CHECK(integer_roots(IntPolynomial{0, -3, 2, 1}) == R{{0, 1}, {1, 1}, {-3, 1}});
}

TEST_CASE("F recognition examples") {
  auto w = recognize_F(make_family(Family::path, 3));
  REQUIRE(w.has_value());
  CHECK(w->core == VertexSet(3, {1}));
  REQUIRE(w->gadgets.size() == 1);
  CHECK_FALSE(w->gadgets[0].adjacent);

  w = recognize_F(make_family(Family::complete, 3));
  REQUIRE(w.has_value());
  CHECK(w->core.size() == 1);
  CHECK(w->gadgets[0].adjacent);

  CHECK_FALSE(recognize_F(make_family(Family::complete_bipartite, 3, 3)).has_value());
  CHECK_FALSE(recognize_F(disjoint_union(make_family(Family::path, 3), make_family(Family::path, 3))).has_value());
}

TEST_CASE("F recognition agrees with the exhaustive oracle") {
  for (const char* file : {"graphs3.g6", "graphs6.g6", "connected9.g6"})
    for (const auto& line : testing::read_lines(file)) {
      const Graph g = from_graph6(line);
      if (!g.is_connected()) continue;
      const auto w = recognize_F(g);
      CHECK(w.has_value() == oracle::in_family_F(testing::to_matrix(g)));
      if (!w) continue;
      CHECK(g.induced(w->core).is_connected());
      CHECK(static_cast<int>(w->gadgets.size()) * 3 == g.n());
      for (const FGadget& gad : w->gadgets) {
        CHECK((g.neighbors(gad.first) & ~bit(gad.second)) == bit(gad.owner));
        CHECK((g.neighbors(gad.second) & ~bit(gad.first)) == bit(gad.owner));
        CHECK(g.has_edge(gad.first, gad.second) == gad.adjacent);
      }
    }
}

TEST_CASE("classification examples") {
  CHECK(classify_by_distinct_roots(make_family(Family::empty, 4)).cls == RootClass::empty_graph);
  const Graph k2 = make_family(Family::complete, 2);
  const Graph u = disjoint_union(disjoint_union(k2, k2), make_family(Family::empty, 1));
  CHECK(classify_by_distinct_roots(u).cls == RootClass::p2_union);
  const auto r = find_roots(pd_polynomial(u));
  CHECK(r.distinct_count == 2);
  CHECK(has_root(r, -2, 2));

  const Graph f = disjoint_union(make_family(Family::path, 3), make_family(Family::complete, 3));
  const auto c = classify_by_distinct_roots(f);
  CHECK(c.cls == RootClass::F_union);
  CHECK(c.witness.size() == 2);
  const auto fr = find_roots(pd_polynomial(f));
  CHECK(fr.distinct_count == 3);
  CHECK(has_root(fr, kTriangleRoot, 2));
  CHECK(classify_by_distinct_roots(make_family(Family::cycle, 4)).cls == RootClass::other);
  CHECK(root_class_name(RootClass::F_union) == "F_union");
}

TEST_CASE("classification matches the number of distinct roots") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& line : testing::read_lines("graphs" + std::to_string(n) + ".g6")) {
      const Graph g = from_graph6(line);
      const auto report = analyze_graph_roots(g);
      REQUIRE(report.classification.has_value());
      switch (*report.classification) {
        case RootClass::empty_graph: CHECK(report.distinct_count == 1); break;
        case RootClass::p2_union: CHECK(report.distinct_count == 2); break;
        case RootClass::F_union: CHECK(report.distinct_count == 3); break;
        case RootClass::other: CHECK(report.distinct_count >= 4); break;
      }
      CHECK(report.zero_multiplicity == gamma_p(g));
      for (const Root& root : report.roots) {
        if (std::abs(root.value.imag()) < 1e-12) CHECK(root.value.real() <= 0);
      }
      for (const auto& v : report.rouche_verdicts) CHECK(v.graph_bound_holds);
    }
}

TEST_CASE("root bound functions") {
  const IntPolynomial k1{0, 1};
  for (double a : {0.25, 1.0, 3.0}) CHECK(rouche_bound_graph(k1, a) == doctest::Approx(a));
  CHECK_THROWS_AS(rouche_bound_graph(k1, 0.0), Error);
  CHECK_THROWS_AS(rouche_bound_universal(2, 1.0), Error);
  CHECK(rouche_bound_universal(3, 1.0) > 0);

  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_connected(rng, 3 + trial % 6);
    const IntPolynomial p = pd_polynomial(g);
    for (double a : {0.5, 1.0, 2.0}) {
      CHECK(universal_bound_below_graph(p, g.n(), a));
      CHECK(rouche_bound_universal(g.n(), a) <= rouche_bound_graph(p, a) * (1 + 1e-12));
    }
  }
}
