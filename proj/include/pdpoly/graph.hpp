#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdpoly/vertex_set.hpp"

namespace pdpoly {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per
/// vertex. Immutable once built; every operation returns a new graph.
class Graph {
 public:
  /// Throws InvalidVertex for endpoints outside [0, n) and SelfLoop for u == v.
  /// Duplicate edges collapse.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Adopts adjacency words directly; validates symmetry and loops.
  static Graph from_adjacency(std::vector<Word> adjacency);

  int n() const noexcept { return static_cast<int>(adj_.size()); }
  Word full() const noexcept { return full_mask(n()); }

  Word neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
  Word closed_neighbors(int v) const noexcept { return adj_[static_cast<std::size_t>(v)] | bit(v); }
  VertexSet neighborhood(int v) const noexcept { return {n(), neighbors(v)}; }
  int degree(int v) const noexcept;
  bool has_edge(int u, int v) const noexcept { return (neighbors(u) >> v) & 1U; }

  std::span<const Word> adjacency() const noexcept { return adj_; }
  int edge_count() const noexcept;
  std::vector<Edge> edges() const;

  VertexSet vertices() const noexcept { return VertexSet::all(n()); }
  bool is_connected() const noexcept;
  /// Subgraph induced by `keep`, relabeled to 0..|keep|-1 in increasing order.
  Graph induced(VertexSet keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::vector<Word> adj) : adj_(std::move(adj)) {}
  std::vector<Word> adj_;
};

// Composition ------------------------------------------------------------

Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);
/// One copy of g1 plus n(g1) copies of g2; vertex i of g1 is joined to every
/// vertex of copy i. Copy i occupies [n1 + i*n2, n1 + (i+1)*n2).
Graph corona(const Graph& g1, const Graph& g2);

struct Gadget {
  Graph graph;
  int anchor = 0;
};

/// Merges vertex i of h with the anchor of gadgets[i]. Vertices of h keep
/// their labels; the non-anchor vertices of each gadget follow in gadget order.
Graph identify(const Graph& h, std::span<const Gadget> gadgets);

/// Adds a vertex adjacent to every existing vertex; it gets label n.
Graph add_dominating_vertex(const Graph& g);

// Named families ---------------------------------------------------------

enum class Family { path, cycle, complete, empty, star, wheel, complete_bipartite };

Family family_from_name(std::string_view name);
std::string_view family_name(Family f);

/// Canonical labelings: paths and cycles run in vertex order; star and wheel
/// hubs are vertex n-1. complete_bipartite takes parts (a, b) with the first
/// part on 0..a-1. Throws FamilyDomainError below each family's minimum.
Graph make_family(Family f, int n, int second = 0);

// Structure --------------------------------------------------------------

struct StructureReport {
  std::vector<VertexSet> components;
  int isolate_count = 0;
  int k2_component_count = 0;
  std::vector<int> degrees;
};

StructureReport structure_report(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

/// True when g is K_{a,b} for some a + b = n with the given part sizes
/// (order of parts irrelevant).
bool is_complete_bipartite(const Graph& g, int a, int b);

}  // namespace pdpoly
