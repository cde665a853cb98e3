#include <doctest.h>

#include <random>

#include "bridge.hpp"
#include "pdpoly/error.hpp"
#include "pdpoly/graph.hpp"
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

}  // namespace

TEST_CASE("edge list construction") {
  const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.edge_count() == 1);
  CHECK(k2.has_edge(1, 0));

  const Graph p3 = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(p3 == make_family(Family::path, 3));

  const Graph dup = Graph::from_edge_list(3, {{0, 1}, {0, 1}});
  CHECK(dup.edge_count() == 1);
  CHECK(dup.degree(2) == 0);

  CHECK(kind_of([] { Graph::from_edge_list(3, {{0, 3}}); }) == ErrorKind::InvalidVertex);
  CHECK(kind_of([] { Graph::from_edge_list(3, {{1, 1}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { Graph::from_edge_list(65, {}); }) == ErrorKind::TooLarge);
}

TEST_CASE("graph6 examples match the reference decoder") {
  for (const char* text : {"A_", "A?", "Bw"}) {
    const Graph g = from_graph6(text);
    CHECK(testing::to_matrix(g) == oracle::decode_graph6(text));
    CHECK(to_graph6(g) == text);
  }
  CHECK(from_graph6("A_") == make_family(Family::complete, 2));
  CHECK(from_graph6("A?").edge_count() == 0);
  CHECK(from_graph6("Bw") == make_family(Family::complete, 3));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK(kind_of([] { from_graph6("Bww"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { from_graph6("B"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { from_graph6("A "); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { from_graph6(""); }) == ErrorKind::FormatError);
}

TEST_CASE("graph6 round trip and reference decoding over the catalogs") {
  for (int n = 1; n <= 8; ++n) {
    for (const auto& line : testing::read_lines("graphs" + std::to_string(n) + ".g6")) {
      const Graph g = from_graph6(line);
      REQUIRE(g.n() == n);
      CHECK(to_graph6(g) == line);
      CHECK(from_graph6(to_graph6(g)) == g);
      if (n <= 6) CHECK(testing::to_matrix(g) == oracle::decode_graph6(line));
    }
  }
}

TEST_CASE("edge list text") {
  const Graph g = from_edge_list_text("# K3\n3 3\n0 1\n1 2 # tail comment\n0 2\n");
  CHECK(g == make_family(Family::complete, 3));
  CHECK(from_edge_list_text(to_edge_list_text(g)) == g);
  CHECK(kind_of([] { from_edge_list_text("3 2\n0 1\n"); }) == ErrorKind::FormatError);
  CHECK(kind_of([] { from_edge_list_text("3 1\n0 x\n"); }) == ErrorKind::FormatError);
  CHECK(parse_graph_text("Bw\n") == make_family(Family::complete, 3));
  CHECK(parse_graph_text("2 1\n0 1\n") == make_family(Family::complete, 2));
}

TEST_CASE("composition examples") {
  const Graph star = join(make_family(Family::empty, 3), make_family(Family::empty, 1));
  CHECK(star.edge_count() == 3);
  CHECK(star.degree(3) == 3);
  CHECK(star == make_family(Family::star, 4));

  const Graph u = disjoint_union(make_family(Family::complete, 2), make_family(Family::empty, 1));
  CHECK(u.n() == 3);
  CHECK(u.edge_count() == 1);

  // Two triangles {0,2,3} and {1,4,5} joined by the edge 01.
  const Graph c = corona(make_family(Family::path, 2), make_family(Family::complete, 2));
  CHECK(c.n() == 6);
  CHECK(c.edge_count() == 7);
  CHECK(c == Graph::from_edge_list(6, {{0, 1}, {0, 2}, {0, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}}));
}

TEST_CASE("identify merges host vertices with gadget anchors") {
  const Graph p3 = make_family(Family::path, 3);
  const std::vector<Gadget> gadgets{{p3, 1}, {p3, 1}};
  const Graph g = identify(make_family(Family::path, 2), gadgets);
  CHECK(g.n() == 6);
  CHECK(g.edge_count() == 5);
  CHECK(g.degree(0) == 3);
  CHECK(g.degree(1) == 3);
  const std::vector<Gadget> short_list{{p3, 1}};
  CHECK(kind_of([&] { identify(make_family(Family::path, 2), short_list); }) == ErrorKind::ArityError);
  const std::vector<Gadget> bad_anchor{{p3, 5}, {p3, 1}};
  CHECK(kind_of([&] { identify(make_family(Family::path, 2), bad_anchor); }) == ErrorKind::InvalidVertex);
}

TEST_CASE("named families") {
  CHECK(make_family(Family::wheel, 4) == make_family(Family::complete, 4));
  const Graph k33 = make_family(Family::complete_bipartite, 3, 3);
  CHECK(k33.edge_count() == 9);
  CHECK(is_complete_bipartite(k33, 3, 3));
  CHECK_FALSE(is_complete_bipartite(make_family(Family::cycle, 6), 3, 3));
  CHECK(make_family(Family::star, 3).edge_count() == 2);
  CHECK(make_family(Family::star, 3).degree(2) == 2);
  CHECK(make_family(Family::wheel, 6).degree(5) == 5);
  CHECK(make_family(Family::cycle, 5).edge_count() == 5);
  CHECK(kind_of([] { make_family(Family::star, 2); }) == ErrorKind::FamilyDomainError);
  CHECK(kind_of([] { make_family(Family::wheel, 3); }) == ErrorKind::FamilyDomainError);
  CHECK(kind_of([] { make_family(Family::cycle, 2); }) == ErrorKind::FamilyDomainError);
  CHECK(family_from_name("complete_bipartite") == Family::complete_bipartite);
}

TEST_CASE("structure report examples") {
  auto r = structure_report(make_family(Family::empty, 5));
  CHECK(r.isolate_count == 5);
  CHECK(r.k2_component_count == 0);
  CHECK(r.components.size() == 5);

  const Graph k2 = make_family(Family::complete, 2);
  r = structure_report(disjoint_union(disjoint_union(k2, k2), make_family(Family::empty, 1)));
  CHECK(r.isolate_count == 1);
  CHECK(r.k2_component_count == 2);
  CHECK(r.components.size() == 3);

  r = structure_report(make_family(Family::star, 4));
  CHECK(r.isolate_count == 0);
  CHECK(r.components.size() == 1);
}

TEST_CASE("edge counts under composition and component partition") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph a = random_graph(rng, 1 + trial % 7, 0.4);
    const Graph b = random_graph(rng, 1 + trial % 5, 0.5);
    CHECK(join(a, b).edge_count() == a.edge_count() + b.edge_count() + a.n() * b.n());
    CHECK(disjoint_union(a, b).edge_count() == a.edge_count() + b.edge_count());
    Word seen = 0;
    for (VertexSet c : structure_report(a).components) {
      CHECK((seen & c.bits()) == 0);
      seen |= c.bits();
    }
    CHECK(seen == a.full());
  }
}
