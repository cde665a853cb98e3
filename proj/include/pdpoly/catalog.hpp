#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdpoly/counting.hpp"
#include "pdpoly/graph.hpp"
#include "pdpoly/polynomial.hpp"

namespace pdpoly {

struct CatalogFlags {
  bool connected = false;
  int isolate_count = 0;
  int gamma_p = 0;  // lowest nonzero power of the polynomial
  bool unimodal = true;
};

struct CatalogEntry {
  std::string key;  // graph6
  int n = 0;
  Graph graph = make_family(Family::empty, 1);
  IntPolynomial poly;
  CatalogFlags flags;
};

struct LineError {
  std::size_t line = 0;  // 1-based
  std::string text;
  std::string message;
};

struct IngestOptions {
  /// Append-only (graph6, coefficients) records; lines already present are
  /// reused instead of recomputed.
  std::optional<std::filesystem::path> results_file;
  int jobs = 1;
  /// Called after each chunk with (graphs done, graphs total).
  std::function<void(std::size_t, std::size_t)> progress;
  CountingOptions counting;
};

struct IngestResult {
  std::vector<CatalogEntry> entries;  // input order
  std::vector<LineError> errors;
  std::size_t resumed = 0;
};

/// One graph6 string per line; blank lines are skipped. Malformed lines are
/// collected as errors. IngestError when no line yields a graph.
IngestResult ingest(const std::filesystem::path& path, const IngestOptions& options = {});
IngestResult ingest_lines(const std::vector<std::string>& lines, const IngestOptions& options = {});

CatalogEntry make_entry(const Graph& g, const IntPolynomial& poly);
CatalogEntry make_entry(const Graph& g, const CountingOptions& counting = {});

/// Every labeled graph on n vertices, edge mask counting upward; bit k of the
/// mask is the k-th pair (i, j), i < j, in lexicographic order.
class LabeledGraphs {
 public:
  /// TooLarge for n > 7, InvalidVertex for n < 1.
  explicit LabeledGraphs(int n);
  std::uint64_t count() const noexcept { return count_; }
  Graph at(std::uint64_t mask) const;
  std::optional<Graph> next();

 private:
  int n_;
  std::vector<Edge> pairs_;
  std::uint64_t count_;
  std::uint64_t cursor_ = 0;
};

LabeledGraphs generate_all_labeled(int n);

using PolynomialClasses = std::map<IntPolynomial, std::vector<std::string>>;

/// Keys grouped by polynomial; a class never mixes orders because the degree
/// is the order.
PolynomialClasses group_by_polynomial(std::span<const CatalogEntry> entries);

struct UniquenessReport {
  /// True when the caller asserts the entries are all graphs of each order up
  /// to isomorphism; otherwise verdicts only mean unique within the file.
  bool complete = false;
  std::vector<std::string> unique_keys;
  std::string scope() const { return complete ? "catalog" : "unique-within-file"; }
};

UniquenessReport uniqueness_report(std::span<const CatalogEntry> entries, bool complete);

struct GraphFamilyCheck {
  std::string name;
  std::vector<Graph> graphs;
  std::vector<IntPolynomial> polys;
  bool all_equal = false;
};

/// Sets of distinct graphs on n vertices sharing one polynomial: C_n with each
/// non-isomorphic single chord, two cycles joined by an edge with and without
/// that edge (n >= 6), and {P_n, C_n, K_n}. DomainError for n < 4.
std::vector<GraphFamilyCheck> nonuniqueness_families(int n);

struct AppendCheckReport {
  std::uint64_t k1_checked = 0;
  std::uint64_t k2_checked = 0;
  std::uint64_t k3_checked = 0;
  std::uint64_t skipped = 0;  // extension order absent from the catalog
  std::vector<std::string> violations;
};

/// For every P-unique G of order n, the classes of x P(G) at order n+1 and
/// (x^2+2x) P(G) at order n+2 must be singletons. G ∪ K_3 and G ∪ P_3 must
/// share a polynomial while having different edge counts; this is counted
/// directly when the union has at most `direct_cap` vertices. The entries must
/// be complete catalogs; IncompleteCatalog when no order n+1 or n+2 is present
/// for any order n.
AppendCheckReport k1_k2_uniqueness_check(std::span<const CatalogEntry> entries, int direct_cap = 12);

struct UnimodalityAudit {
  std::uint64_t checked = 0;
  std::vector<std::string> violations;  // keys
};

UnimodalityAudit unimodality_audit(std::span<const CatalogEntry> entries);

// Suites -------------------------------------------------------------------

struct PropertyResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> examples;  // first few violating keys
  bool report_only = false;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;
  std::uint64_t graphs = 0;
  bool passed() const;
  const PropertyResult* find(std::string_view name) const;
};

/// Per-graph properties over every labeled graph of order 1..max_n.
SuiteReport run_labeled_suite(int max_n, int jobs = 1);

/// Catalog properties: graph6 round trip, gamma_P <= n/3 and its equality
/// cases, structural root classes against numeric distinct roots, the
/// coefficient dichotomy (n <= 7), Rouché checks (n <= 7) and the
/// report-only unimodality audit.
SuiteReport run_catalog_suite(std::span<const CatalogEntry> entries, int jobs = 1);

/// Calls body(i) for i in [0, count) across `jobs` threads.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body);

/// CSV with columns graph6, n, gamma_p, c0..c_maxn, unimodal, class_id.
std::string entries_to_csv(std::span<const CatalogEntry> entries);

}  // namespace pdpoly
