#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "pdpoly/closed_forms.hpp"
#include "pdpoly/counting.hpp"
#include "pdpoly/error.hpp"
#include "pdpoly/graph_io.hpp"

using namespace pdpoly;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::IoError;
}

const IntPolynomial kTriangleFactor{0, 3, 3, 1};

}  // namespace

TEST_CASE("family formulas") {
  CHECK(formula_family(Family::star, 4) == IntPolynomial{0, 1, 6, 4, 1});
  CHECK(formula_family(Family::cycle, 5) == IntPolynomial{0, 5, 10, 10, 5, 1});
  const IntPolynomial corona = corona_complete_poly(make_family(Family::path, 2), 2);
  CHECK(corona == IntPolynomial{0, 0, 9, 18, 15, 6, 1});
  CHECK(kind_of([] { formula_family(Family::star, 2); }) == ErrorKind::FamilyDomainError);
  CHECK(kind_of([] { formula_family(Family::complete_bipartite, 3); }) == ErrorKind::FamilyDomainError);
}

TEST_CASE("family formulas match counting") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(formula_family(Family::complete, n) == pd_polynomial(make_family(Family::complete, n)));
    CHECK(formula_family(Family::path, n) == pd_polynomial(make_family(Family::path, n)));
    CHECK(formula_family(Family::empty, n) == pd_polynomial(make_family(Family::empty, n)));
    if (n >= 3) {
      CHECK(formula_family(Family::cycle, n) == pd_polynomial(make_family(Family::cycle, n)));
      CHECK(formula_family(Family::star, n) == pd_polynomial(make_family(Family::star, n)));
    }
    if (n >= 4) CHECK(formula_family(Family::wheel, n) == pd_polynomial(make_family(Family::wheel, n)));
  }
  for (Family h : {Family::path, Family::cycle})
    for (int k = 1; k <= 3; ++k) {
      const Graph base = make_family(h, 3);
      CHECK(corona_complete_poly(base, k) == pd_polynomial(corona(base, make_family(Family::complete, k))));
    }
}

TEST_CASE("disjoint union rule") {
  const IntPolynomial k2{0, 2, 1};
  CHECK(disjoint_union_poly(k2, IntPolynomial::monomial(1)) == IntPolynomial{0, 0, 2, 1});
  CHECK(disjoint_union_poly(k2, k2) == IntPolynomial{0, 0, 4, 4, 1});
  const Graph c3 = make_family(Family::cycle, 3);
  const Graph p4 = make_family(Family::path, 4);
  CHECK(disjoint_union_poly(pd_polynomial(c3), pd_polynomial(p4)) == testing::naive_pd(disjoint_union(c3, p4)));
  CHECK(kind_of([&] { disjoint_union_poly(IntPolynomial{1, 1}, k2); }) == ErrorKind::DomainError);
}

TEST_CASE("join rule hand expansions") {
  const Graph k1 = make_family(Family::empty, 1);
  CHECK(join_poly(make_family(Family::empty, 3), k1) == IntPolynomial{0, 1, 6, 4, 1});
  CHECK(join_poly(make_family(Family::empty, 2), make_family(Family::complete, 2)) == IntPolynomial{0, 4, 6, 4, 1});
  CHECK(join_poly(k1, k1) == IntPolynomial{0, 2, 1});
}

TEST_CASE("dominating vertex rule") {
  CHECK(dominating_vertex_poly(make_family(Family::empty, 3)) == IntPolynomial{0, 1, 6, 4, 1});
  CHECK(dominating_vertex_poly(make_family(Family::empty, 1)) == IntPolynomial{0, 2, 1});
  CHECK(dominating_vertex_poly(make_family(Family::cycle, 3)) == IntPolynomial{0, 4, 6, 4, 1});
}

TEST_CASE("identification rule") {
  const Graph p2 = make_family(Family::path, 2);
  const Graph p3 = make_family(Family::path, 3);
  const Graph k3 = make_family(Family::complete, 3);
  const std::vector<Gadget> middles{{p3, 1}, {p3, 1}};
  CHECK(identification_poly(p2, middles) == kTriangleFactor * kTriangleFactor);
  CHECK(testing::naive_pd(identify(p2, middles)) == kTriangleFactor * kTriangleFactor);
  const std::vector<Gadget> single{{k3, 2}};
  CHECK(identification_poly(make_family(Family::empty, 1), single) == kTriangleFactor);
  const std::vector<Gadget> mixed{{k3, 0}, {p3, 1}};
  CHECK(identification_poly(p2, mixed) == kTriangleFactor * kTriangleFactor);
  CHECK(testing::naive_pd(identify(p2, mixed)) == kTriangleFactor * kTriangleFactor);
}

TEST_CASE("identification hypotheses are enforced") {
  const Graph p2 = make_family(Family::path, 2);
  const Graph p3 = make_family(Family::path, 3);
  const std::vector<Gadget> endpoint{{p3, 1}, {p3, 0}};
  CHECK(kind_of([&] { identification_poly(p2, endpoint); }) == ErrorKind::HypothesisNotMet);
  const std::vector<Gadget> star{{make_family(Family::star, 4), 3}, {p3, 1}};
  CHECK(kind_of([&] { identification_poly(p2, star); }) == ErrorKind::HypothesisNotMet);
  CHECK(identification_hypothesis_failure({p3, 1}).empty());
  CHECK_FALSE(identification_hypothesis_failure({p3, 2}).empty());
}

TEST_CASE("decomposition rules match brute force on random instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph a = random_graph(rng, 1 + static_cast<int>(rng() % 6), 0.4);
    const Graph b = random_graph(rng, 1 + static_cast<int>(rng() % 5), 0.4);
    const IntPolynomial pa = pd_polynomial(a);
    const IntPolynomial pb = pd_polynomial(b);
    CHECK(disjoint_union_poly(pa, pb) == testing::naive_pd(disjoint_union(a, b)));
    CHECK(join_poly(a, b) == testing::naive_pd(join(a, b)));
    CHECK(dominating_vertex_poly(a) == testing::naive_pd(add_dominating_vertex(a)));
    CHECK(formula_pd_polynomial(join(a, b)) == pd_polynomial(join(a, b)));
  }
}

TEST_CASE("equality conditions match counting") {
  CHECK(zf_equals_pd_condition(disjoint_union(make_family(Family::complete, 2), make_family(Family::empty, 1))));
  CHECK_FALSE(zf_equals_pd_condition(make_family(Family::path, 3)));
  CHECK_FALSE(zf_equals_pd_condition(make_family(Family::complete, 3)));
  CHECK(dom_equals_pd_condition(make_family(Family::complete, 3)));
  CHECK_FALSE(dom_equals_pd_condition(make_family(Family::path, 3)));
  CHECK(dom_equals_pd_condition(make_family(Family::empty, 5)));

  for (int n = 1; n <= 6; ++n)
    for (const auto& line : testing::read_lines("graphs" + std::to_string(n) + ".g6")) {
      const Graph g = from_graph6(line);
      const IntPolynomial p = pd_polynomial(g);
      CHECK(zf_equals_pd_condition(g) == (zf_polynomial(g) == p));
      CHECK(dom_equals_pd_condition(g) == (dom_polynomial(g) == p));
    }
}

TEST_CASE("path recognition") {
  CHECK(is_path_graph(make_family(Family::path, 5)));
  CHECK(is_path_graph(Graph::from_edge_list(4, {{2, 0}, {0, 3}, {3, 1}})));
  CHECK_FALSE(is_path_graph(make_family(Family::cycle, 4)));
  CHECK_FALSE(is_path_graph(make_family(Family::star, 4)));
}
