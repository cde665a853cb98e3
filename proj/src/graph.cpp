#include "pdpoly/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "pdpoly/error.hpp"

namespace pdpoly {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::ArityError: return "ArityError";
    case ErrorKind::FamilyDomainError: return "FamilyDomainError";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::NotConnectedForm: return "NotConnectedForm";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::NumericFailure: return "NumericFailure";
    case ErrorKind::IngestError: return "IngestError";
    case ErrorKind::IncompleteCatalog: return "IncompleteCatalog";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidVertex, "graph order must be at least 1, got " + std::to_string(n));
  if (n > kMaxVertices)
    throw Error(ErrorKind::TooLarge, "graph order " + std::to_string(n) + " exceeds the supported maximum of " +
                                         std::to_string(kMaxVertices));
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  check_order(n);
  std::vector<Word> adj(static_cast<std::size_t>(n), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw Error(ErrorKind::InvalidVertex,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(u));
    adj[static_cast<std::size_t>(u)] |= bit(v);
    adj[static_cast<std::size_t>(v)] |= bit(u);
  }
  return Graph(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<Word> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  check_order(n);
  const Word all = full_mask(n);
  for (int v = 0; v < n; ++v) {
    const Word row = adjacency[static_cast<std::size_t>(v)];
    if ((row & ~all) != 0) throw Error(ErrorKind::InvalidVertex, "adjacency bit outside the vertex range");
    if ((row >> v) & 1U) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(v));
    for (Word rest = row; rest != 0; rest &= rest - 1) {
      const int u = std::countr_zero(rest);
      if (((adjacency[static_cast<std::size_t>(u)] >> v) & 1U) == 0)
        throw Error(ErrorKind::FormatError, "asymmetric adjacency between " + std::to_string(u) + " and " +
                                                std::to_string(v));
    }
  }
  return Graph(std::move(adjacency));
}

int Graph::degree(int v) const noexcept { return std::popcount(neighbors(v)); }

int Graph::edge_count() const noexcept {
  int twice = 0;
  for (Word row : adj_) twice += std::popcount(row);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n(); ++u)
    for (Word rest = neighbors(u) & ~full_mask(u + 1); rest != 0; rest &= rest - 1)
      out.emplace_back(u, std::countr_zero(rest));
  return out;
}

bool Graph::is_connected() const noexcept {
  Word seen = bit(0);
  Word frontier = bit(0);
  while (frontier != 0) {
    Word next = 0;
    for (Word rest = frontier; rest != 0; rest &= rest - 1) next |= neighbors(std::countr_zero(rest));
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == full();
}

Graph Graph::induced(VertexSet keep) const {
  const auto members = keep.members();
  std::vector<Word> adj(members.size(), 0);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j)
      if (has_edge(members[i], members[j])) adj[i] |= bit(static_cast<int>(j));
  return from_adjacency(std::move(adj));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const int n1 = g1.n();
  check_order(n1 + g2.n());
  std::vector<Word> adj(g1.adjacency().begin(), g1.adjacency().end());
  for (Word row : g2.adjacency()) adj.push_back(row << n1);
  return Graph::from_adjacency(std::move(adj));
}

Graph join(const Graph& g1, const Graph& g2) {
  const int n1 = g1.n();
  const int n = n1 + g2.n();
  check_order(n);
  const Word left = full_mask(n1);
  const Word right = full_mask(n) & ~left;
  std::vector<Word> adj;
  adj.reserve(static_cast<std::size_t>(n));
  for (Word row : g1.adjacency()) adj.push_back(row | right);
  for (Word row : g2.adjacency()) adj.push_back((row << n1) | left);
  return Graph::from_adjacency(std::move(adj));
}

Graph corona(const Graph& g1, const Graph& g2) {
  const int n1 = g1.n();
  const int n2 = g2.n();
  const int n = n1 * (1 + n2);
  check_order(n);
  std::vector<Edge> edges = g1.edges();
  for (int i = 0; i < n1; ++i) {
    const int offset = n1 + i * n2;
    for (auto [u, v] : g2.edges()) edges.emplace_back(offset + u, offset + v);
    for (int u = 0; u < n2; ++u) edges.emplace_back(i, offset + u);
  }
  return Graph::from_edge_list(n, edges);
}

Graph identify(const Graph& h, std::span<const Gadget> gadgets) {
  if (static_cast<int>(gadgets.size()) != h.n())
    throw Error(ErrorKind::ArityError, "identify needs " + std::to_string(h.n()) + " gadgets, got " +
                                           std::to_string(gadgets.size()));
  int n = h.n();
  for (const auto& gadget : gadgets) {
    if (gadget.anchor < 0 || gadget.anchor >= gadget.graph.n())
      throw Error(ErrorKind::InvalidVertex, "gadget anchor " + std::to_string(gadget.anchor) + " out of range");
    n += gadget.graph.n() - 1;
  }
  check_order(n);
  std::vector<Edge> edges = h.edges();
  int next = h.n();
  for (int i = 0; i < h.n(); ++i) {
    const auto& gadget = gadgets[static_cast<std::size_t>(i)];
    std::vector<int> label(static_cast<std::size_t>(gadget.graph.n()));
    for (int u = 0; u < gadget.graph.n(); ++u) label[static_cast<std::size_t>(u)] = u == gadget.anchor ? i : next++;
    for (auto [u, v] : gadget.graph.edges())
      edges.emplace_back(label[static_cast<std::size_t>(u)], label[static_cast<std::size_t>(v)]);
  }
  return Graph::from_edge_list(n, edges);
}

Graph add_dominating_vertex(const Graph& g) { return join(g, Graph::from_edge_list(1, {})); }

Family family_from_name(std::string_view name) {
  if (name == "path") return Family::path;
  if (name == "cycle") return Family::cycle;
  if (name == "complete") return Family::complete;
  if (name == "empty") return Family::empty;
  if (name == "star") return Family::star;
  if (name == "wheel") return Family::wheel;
  if (name == "complete_bipartite") return Family::complete_bipartite;
  throw Error(ErrorKind::FamilyDomainError, "unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete: return "complete";
    case Family::empty: return "empty";
    case Family::star: return "star";
    case Family::wheel: return "wheel";
    case Family::complete_bipartite: return "complete_bipartite";
  }
  return "unknown";
}

Graph make_family(Family f, int n, int second) {
  auto require = [&](bool ok, const char* what) {
    if (!ok) throw Error(ErrorKind::FamilyDomainError, std::string(family_name(f)) + " requires " + what);
  };
  std::vector<Edge> edges;
  switch (f) {
    case Family::path:
      require(n >= 1, "n >= 1");
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
      return Graph::from_edge_list(n, edges);
    case Family::cycle:
      require(n >= 3, "n >= 3");
      for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
      return Graph::from_edge_list(n, edges);
    case Family::complete:
      require(n >= 1, "n >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
      return Graph::from_edge_list(n, edges);
    case Family::empty:
      require(n >= 1, "n >= 1");
      return Graph::from_edge_list(n, edges);
    case Family::star:
      require(n >= 3, "n >= 3");
      for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, n - 1);
      return Graph::from_edge_list(n, edges);
    case Family::wheel:
      require(n >= 4, "n >= 4");
      for (int v = 0; v + 1 < n; ++v) {
        edges.emplace_back(v, (v + 1) % (n - 1));
        edges.emplace_back(v, n - 1);
      }
      return Graph::from_edge_list(n, edges);
    case Family::complete_bipartite:
      require(n >= 1 && second >= 1, "both parts >= 1");
      for (int u = 0; u < n; ++u)
        for (int v = 0; v < second; ++v) edges.emplace_back(u, n + v);
      return Graph::from_edge_list(n + second, edges);
  }
  throw Error(ErrorKind::FamilyDomainError, "unknown family");
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  Word unseen = g.full();
  while (unseen != 0) {
    const int root = std::countr_zero(unseen);
    Word comp = bit(root);
    Word frontier = comp;
    while (frontier != 0) {
      Word next = 0;
      for (Word rest = frontier; rest != 0; rest &= rest - 1) next |= g.neighbors(std::countr_zero(rest));
      frontier = next & ~comp;
      comp |= next;
    }
    out.emplace_back(g.n(), comp);
    unseen &= ~comp;
  }
  return out;
}

StructureReport structure_report(const Graph& g) {
  StructureReport report;
  report.components = components(g);
  report.degrees.resize(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) {
    report.degrees[static_cast<std::size_t>(v)] = g.degree(v);
    if (g.degree(v) == 0) ++report.isolate_count;
  }
  for (const auto& comp : report.components)
    if (comp.size() == 2) ++report.k2_component_count;
  return report;
}

bool is_complete_bipartite(const Graph& g, int a, int b) {
  if (a + b != g.n() || a < 1 || b < 1) return false;
  if (g.edge_count() != a * b) return false;
  // Every vertex on vertex 0's side must see exactly N(0), and vice versa.
  const Word side0 = g.full() & ~g.neighbors(0);
  const Word side1 = g.neighbors(0);
  for (int v = 0; v < g.n(); ++v) {
    const Word expected = ((side0 >> v) & 1U) ? side1 : side0;
    if (g.neighbors(v) != expected) return false;
  }
  const int s0 = std::popcount(side0);
  return (s0 == a && std::popcount(side1) == b) || (s0 == b && std::popcount(side1) == a);
}

}  // namespace pdpoly
