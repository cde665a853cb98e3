#include "pdpoly/catalog.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "pdpoly/closed_forms.hpp"
#include "pdpoly/error.hpp"
#include "pdpoly/graph_io.hpp"
#include "pdpoly/kernels.hpp"
#include "pdpoly/propagation.hpp"
#include "pdpoly/roots.hpp"

namespace pdpoly {

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = count;
          }
        }
      });
  }
  if (failure) std::rethrow_exception(failure);
}

CatalogEntry make_entry(const Graph& g, const IntPolynomial& poly) {
  CatalogEntry e;
  e.key = to_graph6(g);
  e.n = g.n();
  e.graph = g;
  e.poly = poly;
  e.flags.connected = g.is_connected();
  e.flags.isolate_count = structure_report(g).isolate_count;
  e.flags.gamma_p = poly.lowest_power();
  e.flags.unimodal = is_unimodal(poly).unimodal;
  return e;
}

CatalogEntry make_entry(const Graph& g, const CountingOptions& counting) { return make_entry(g, pd_polynomial(g, counting)); }

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::unordered_map<std::string, IntPolynomial> load_results(const std::filesystem::path& path) {
  std::unordered_map<std::string, IntPolynomial> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    const auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::vector<std::string> digits;
    std::stringstream coeffs(trim(std::string_view(line).substr(tab + 1)));
    for (std::string c; std::getline(coeffs, c, ',');) digits.push_back(c);
    try {
      out.insert_or_assign(line.substr(0, tab), IntPolynomial::from_decimal_strings(digits));
    } catch (const Error&) {
      // A torn final record from an interrupted run; recompute it.
    }
  }
  return out;
}

std::string result_record(const CatalogEntry& e) {
  std::string line = e.key + '\t';
  const auto digits = e.poly.to_decimal_strings(static_cast<std::size_t>(e.n) + 1);
  for (std::size_t i = 0; i < digits.size(); ++i) line += (i ? "," : "") + digits[i];
  return line + '\n';
}

constexpr std::size_t kIngestChunk = 256;

}  // namespace

IngestResult ingest_lines(const std::vector<std::string>& lines, const IngestOptions& options) {
  IngestResult result;
  std::vector<Graph> graphs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string text = trim(lines[i]);
    if (text.empty()) continue;
    try {
      graphs.push_back(from_graph6(text));
    } catch (const Error& e) {
      result.errors.push_back({i + 1, text, e.what()});
    }
  }
  if (graphs.empty())
    throw Error(ErrorKind::IngestError,
                result.errors.empty() ? "no graphs in input" : "every line failed: " + result.errors.front().message);

  std::unordered_map<std::string, IntPolynomial> known;
  std::ofstream sink;
  if (options.results_file) {
    known = load_results(*options.results_file);
    sink.open(*options.results_file, std::ios::app);
    if (!sink) throw Error(ErrorKind::IoError, "cannot append to " + options.results_file->string());
  }

  CountingOptions counting = options.counting;
  if (options.jobs > 1) counting.workers = 1;
  result.entries.resize(graphs.size());
  std::vector<char> fresh(graphs.size(), 0);
  for (std::size_t begin = 0; begin < graphs.size(); begin += kIngestChunk) {
    const std::size_t end = std::min(graphs.size(), begin + kIngestChunk);
    parallel_for(end - begin, options.jobs, [&](std::size_t offset) {
      const std::size_t i = begin + offset;
      const std::string key = to_graph6(graphs[i]);
      if (auto hit = known.find(key); hit != known.end() && hit->second.degree() == graphs[i].n()) {
        result.entries[i] = make_entry(graphs[i], hit->second);
      } else {
        result.entries[i] = make_entry(graphs[i], counting);
        fresh[i] = 1;
      }
    });
    for (std::size_t i = begin; i < end; ++i) {
      if (!fresh[i]) {
        ++result.resumed;
      } else if (sink.is_open()) {
        sink << result_record(result.entries[i]);
      }
    }
    if (sink.is_open()) sink.flush();
    if (options.progress) options.progress(end, graphs.size());
  }
  return result;
}

IngestResult ingest(const std::filesystem::path& path, const IngestOptions& options) {
  std::vector<std::string> lines;
  std::stringstream in(read_text_file(path));
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return ingest_lines(lines, options);
}

LabeledGraphs::LabeledGraphs(int n) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidVertex, "labeled enumeration needs n >= 1");
  if (n > 7) throw Error(ErrorKind::TooLarge, "labeled enumeration is limited to n <= 7");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs_.emplace_back(i, j);
  count_ = std::uint64_t{1} << pairs_.size();
}

Graph LabeledGraphs::at(std::uint64_t mask) const {
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs_.size(); ++k)
    if ((mask >> k) & 1U) edges.push_back(pairs_[k]);
  return Graph::from_edge_list(n_, edges);
}

std::optional<Graph> LabeledGraphs::next() {
  if (cursor_ >= count_) return std::nullopt;
  return at(cursor_++);
}

LabeledGraphs generate_all_labeled(int n) { return LabeledGraphs(n); }

PolynomialClasses group_by_polynomial(std::span<const CatalogEntry> entries) {
  PolynomialClasses classes;
  for (const auto& e : entries) classes[e.poly].push_back(e.key);
  return classes;
}

UniquenessReport uniqueness_report(std::span<const CatalogEntry> entries, bool complete) {
  const auto classes = group_by_polynomial(entries);
  UniquenessReport report;
  report.complete = complete;
  for (const auto& e : entries)
    if (classes.at(e.poly).size() == 1) report.unique_keys.push_back(e.key);
  return report;
}

namespace {

GraphFamilyCheck family_check(std::string name, std::vector<Graph> graphs) {
  GraphFamilyCheck check{std::move(name), std::move(graphs), {}, true};
  for (const auto& g : check.graphs) check.polys.push_back(pd_polynomial(g));
  for (const auto& p : check.polys) check.all_equal = check.all_equal && p == check.polys.front();
  return check;
}

std::vector<Edge> cycle_edges(int first, int length) {
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) edges.emplace_back(first + i, first + (i + 1) % length);
  return edges;
}

}  // namespace

std::vector<GraphFamilyCheck> nonuniqueness_families(int n) {
  if (n < 4) throw Error(ErrorKind::DomainError, "non-uniqueness families need n >= 4");
  std::vector<GraphFamilyCheck> out;

  const auto ring = cycle_edges(0, n);
  std::vector<Graph> chords{Graph::from_edge_list(n, ring)};
  for (int j = 2; j <= n / 2; ++j) {
    auto edges = ring;
    edges.emplace_back(0, j);
    chords.push_back(Graph::from_edge_list(n, edges));
  }
  out.push_back(family_check("cycle_with_chord", std::move(chords)));

  if (n >= 6) {
    const int a = n / 2;
    auto edges = cycle_edges(0, a);
    for (auto [u, v] : cycle_edges(0, n - a)) edges.emplace_back(u + a, v + a);
    const Graph without = Graph::from_edge_list(n, edges);
    edges.emplace_back(0, a);
    out.push_back(family_check("bridged_cycles", {Graph::from_edge_list(n, edges), without}));
  }

  out.push_back(family_check("path_cycle_complete", {make_family(Family::path, n), make_family(Family::cycle, n),
                                                     make_family(Family::complete, n)}));
  return out;
}

AppendCheckReport k1_k2_uniqueness_check(std::span<const CatalogEntry> entries, int direct_cap) {
  std::map<IntPolynomial, std::size_t> class_size;
  std::set<int> orders;
  for (const auto& e : entries) {
    ++class_size[e.poly];
    orders.insert(e.n);
  }
  const bool any_pair = std::any_of(orders.begin(), orders.end(),
                                    [&](int n) { return orders.count(n + 1) != 0 || orders.count(n + 2) != 0; });
  if (!any_pair) throw Error(ErrorKind::IncompleteCatalog, "no order n has order n+1 or n+2 alongside it");

  const IntPolynomial k1{0, 1};
  const IntPolynomial k2{0, 2, 1};
  const Graph k3 = make_family(Family::complete, 3);
  const Graph p3 = make_family(Family::path, 3);
  AppendCheckReport report;
  auto size_of = [&](const IntPolynomial& p) {
    const auto it = class_size.find(p);
    return it == class_size.end() ? std::size_t{0} : it->second;
  };
  for (const auto& e : entries) {
    if (class_size[e.poly] != 1) continue;
    for (const auto& [extra, append, counter] :
         {std::tuple{1, &k1, &report.k1_checked}, std::tuple{2, &k2, &report.k2_checked}}) {
      if (orders.count(e.n + extra) == 0) {
        ++report.skipped;
        continue;
      }
      ++*counter;
      const std::size_t size = size_of(e.poly * *append);
      if (size != 1)
        report.violations.push_back(e.key + " plus K" + std::to_string(extra) + " has class size " +
                                    std::to_string(size));
    }
    if (e.n + 3 <= direct_cap) {
      ++report.k3_checked;
      const Graph with_k3 = disjoint_union(e.graph, k3);
      const Graph with_p3 = disjoint_union(e.graph, p3);
      if (pd_polynomial(with_k3) != pd_polynomial(with_p3) || with_k3.edge_count() == with_p3.edge_count())
        report.violations.push_back(e.key + " plus K3 does not collide with plus P3");
    }
  }
  return report;
}

UnimodalityAudit unimodality_audit(std::span<const CatalogEntry> entries) {
  UnimodalityAudit audit;
  for (const auto& e : entries) {
    ++audit.checked;
    if (!is_unimodal(e.poly).unimodal) audit.violations.push_back(e.key);
  }
  return audit;
}

bool SuiteReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.report_only || p.violations == 0; });
}

const PropertyResult* SuiteReport::find(std::string_view name) const {
  for (const auto& p : properties)
    if (p.name == name) return &p;
  return nullptr;
}

namespace {

constexpr std::size_t kExampleLimit = 5;

// (checked, violated) per property for one graph.
using Outcomes = std::vector<std::array<std::uint32_t, 2>>;

void note(Outcomes& o, std::size_t property, bool ok) {
  ++o[property][0];
  if (!ok) ++o[property][1];
}

void merge(SuiteReport& report, const Outcomes& o, const std::string& key) {
  for (std::size_t p = 0; p < o.size(); ++p) {
    auto& r = report.properties[p];
    r.checked += o[p][0];
    r.violations += o[p][1];
    if (o[p][1] != 0 && r.examples.size() < kExampleLimit) r.examples.push_back(key);
  }
}

// Sign of P(num/den) scaled by den^deg.
BigInt scaled_value(const IntPolynomial& p, long num, long den) {
  BigInt total = 0;
  const auto& c = p.coefficients();
  std::vector<BigInt> den_powers(c.size(), 1);
  for (std::size_t i = 1; i < c.size(); ++i) den_powers[i] = den_powers[i - 1] * den;
  BigInt num_power = 1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    total += c[i] * num_power * den_powers[c.size() - 1 - i];
    num_power *= num;
  }
  return total;
}

std::vector<bool> observe_all(const Graph& g, kernels::Observation mode) {
  const std::size_t total = std::size_t{1} << g.n();
  std::vector<Word> sets(total);
  std::vector<Word> out(total);
  for (std::size_t s = 0; s < total; ++s) sets[s] = s;
  kernels::observe_batch(g.adjacency(), mode, sets, out);
  std::vector<bool> full(total);
  for (std::size_t s = 0; s < total; ++s) full[s] = s != 0 && out[s] == g.full();
  return full;
}

IntPolynomial polynomial_of(const std::vector<bool>& marked, int n) {
  std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t s = 0; s < marked.size(); ++s)
    if (marked[s]) ++counts[static_cast<std::size_t>(std::popcount(s))];
  return IntPolynomial(std::move(counts));
}

enum LabeledProperty : std::size_t {
  kSupersetClosure,
  kDeanEquivalence,
  kFortCover,
  kLatticeMatchesDirect,
  kTailMatchesDirect,
  kZfDominated,
  kDomDominated,
  kTopCoefficients,
  kZfCondition,
  kDomCondition,
  kIpBound,
  kZeroMultiplicity,
  kPositiveValues,
  kBinomialSaturation,
  kEarlyMonotone,
  kMinimumChain,
  kConfluence,
  kLabeledCount
};

constexpr std::array<std::string_view, kLabeledCount> kLabeledNames = {
    "superset_closure",    "dean_equivalence",   "fort_cover",        "lattice_matches_direct",
    "tail_matches_direct", "zf_dominated",       "dom_dominated",     "top_coefficients",
    "zf_condition",        "dom_condition",      "ip_bound",          "zero_multiplicity",
    "positive_values",     "binomial_saturation", "early_monotone",   "minimum_chain",
    "confluence"};

Outcomes check_labeled(const Graph& g, std::uint64_t seed) {
  Outcomes o(kLabeledCount, {0, 0});
  const int n = g.n();
  const std::size_t total = std::size_t{1} << n;
  const auto pds = observe_all(g, kernels::Observation::power_domination);
  const auto zfs = observe_all(g, kernels::Observation::zero_forcing);
  const auto doms = observe_all(g, kernels::Observation::domination);
  const auto family = fort_neighborhood_family(g);
  std::mt19937_64 rng(seed);

  for (std::size_t s = 0; s < total; ++s) {
    const VertexSet set(n, s);
    if (pds[s]) {
      bool closed = true;
      for (int v = 0; v < n; ++v) closed = closed && pds[s | bit(v)];
      note(o, kSupersetClosure, closed);
    }
    note(o, kDeanEquivalence, pds[s] == zfs[closed_neighborhood(g, set).bits()]);
    note(o, kFortCover, meets_every_fort(family, set) == pds[s]);
    const VertexSet start = closed_neighborhood(g, set);
    const VertexSet reference = forcing_closure(g, start).colored;
    bool confluent = true;
    for (int run = 0; run < 10; ++run) confluent = confluent && forcing_closure(g, start, &rng).colored == reference;
    note(o, kConfluence, confluent);
  }

  const IntPolynomial p = polynomial_of(pds, n);
  const IntPolynomial z = polynomial_of(zfs, n);
  const IntPolynomial d = polynomial_of(doms, n);
  CountingOptions lattice;
  lattice.method = CountMethod::lattice;
  lattice.workers = 1;
  note(o, kLatticeMatchesDirect, pd_polynomial(g, lattice) == p);

  bool tail_ok = true;
  for (const auto& [power, value] : pd_tail_coefficients(g, n - 1)) tail_ok = tail_ok && p.coeff(power) == value;
  note(o, kTailMatchesDirect, tail_ok);

  bool z_ok = true;
  bool d_ok = true;
  for (int i = 0; i <= n; ++i) {
    z_ok = z_ok && z.coeff(i) <= p.coeff(i);
    d_ok = d_ok && d.coeff(i) <= p.coeff(i);
  }
  note(o, kZfDominated, z_ok);
  note(o, kDomDominated, d_ok);

  const auto report = structure_report(g);
  const int isolates = report.isolate_count;
  bool top_ok = p.coeff(n) == 1 && p.coeff(n - 1) == n - isolates;
  if (n >= 2) {
    const BigInt expected = binomial_coefficient(n, 2) - isolates * (n - isolates) -
                            binomial_coefficient(isolates, 2) - report.k2_component_count;
    top_ok = top_ok && p.coeff(n - 2) == expected;
  }
  note(o, kTopCoefficients, top_ok);

  note(o, kZfCondition, zf_equals_pd_condition(g) == (z == p));
  note(o, kDomCondition, dom_equals_pd_condition(g) == (d == p));

  BigInt all_subsets;
  mpz_ui_pow_ui(all_subsets.get_mpz_t(), 2, static_cast<unsigned long>(n));
  note(o, kIpBound, BigInt(static_cast<unsigned long>(family.size())) <= all_subsets - p.eval_int(1));

  const int gp = gamma_p(g);
  note(o, kZeroMultiplicity, p.lowest_power() == gp);

  bool positive = true;
  for (auto [num, den] : {std::pair{1L, 4L}, std::pair{1L, 2L}, std::pair{1L, 1L}, std::pair{2L, 1L}})
    positive = positive && scaled_value(p, num, den) > 0;
  note(o, kPositiveValues, positive);

  bool saturated = true;
  bool seen_full = false;
  for (int i = 0; i <= n; ++i) {
    const bool full = i > 0 && p.coeff(i) == binomial_coefficient(n, i);
    if (seen_full && !full) saturated = false;
    seen_full = seen_full || full;
  }
  note(o, kBinomialSaturation, saturated);

  bool monotone = true;
  for (int i = 1; 2 * i < n; ++i) monotone = monotone && p.coeff(i) <= p.coeff(i + 1);
  note(o, kEarlyMonotone, monotone);

  note(o, kMinimumChain, gp <= z.lowest_power() && gp <= d.lowest_power());
  return o;
}

enum CatalogProperty : std::size_t {
  kRoundTrip,
  kDegreeIsOrder,
  kZhaoBound,
  kZhaoEquality,
  kRootFinding,
  kRootClassAgreement,
  kRootZeroMultiplicity,
  kConjugatePairs,
  kNoPositiveRealRoot,
  kCoefficientDichotomy,
  kRoucheGraphBound,
  kUniversalBelowGraph,
  kRoucheUniversalForm,
  kUnimodality,
  kCatalogCount
};

constexpr std::array<std::string_view, kCatalogCount> kCatalogNames = {
    "graph6_round_trip",  "degree_is_order",       "zhao_bound",         "zhao_equality",
    "root_finding",       "root_class_agreement",  "root_zero_multiplicity", "conjugate_pairs",
    "no_positive_real_root", "coefficient_dichotomy", "rouche_graph_bound",  "universal_below_graph",
    "rouche_universal_form", "unimodality"};

bool class_matches(RootClass cls, int distinct) {
  switch (cls) {
    case RootClass::empty_graph: return distinct == 1;
    case RootClass::p2_union: return distinct == 2;
    case RootClass::F_union: return distinct == 3;
    case RootClass::other: return distinct >= 4;
  }
  return false;
}

Outcomes check_catalog(const CatalogEntry& e) {
  Outcomes o(kCatalogCount, {0, 0});
  const Graph& g = e.graph;
  const int n = e.n;
  note(o, kRoundTrip, from_graph6(to_graph6(g)) == g && from_graph6(e.key) == g);
  note(o, kDegreeIsOrder, e.poly.degree() == n);
  const int gp = e.poly.lowest_power();
  if (e.flags.connected && n >= 3) {
    note(o, kZhaoBound, 3 * gp <= n);
    if (n % 3 == 0) {
      const bool extremal = recognize_F(g).has_value() || is_complete_bipartite(g, 3, 3);
      note(o, kZhaoEquality, (3 * gp == n) == extremal);
    }
  }
  note(o, kUnimodality, e.flags.unimodal);

  if (e.flags.connected && n <= 7) {
    const IntPolynomial z = zf_polynomial(g, CountingOptions{.workers = 1});
    bool dichotomy = true;
    for (int i = 0; i <= n; ++i)
      if (z.coeff(i) == e.poly.coeff(i)) dichotomy = dichotomy && (z.coeff(i) == 0 || z.coeff(i) == binomial_coefficient(n, i));
    note(o, kCoefficientDichotomy, dichotomy);
  }

  RootReport roots;
  try {
    roots = analyze_graph_roots(g, e.poly);
    note(o, kRootFinding, true);
  } catch (const NumericFailureError&) {
    note(o, kRootFinding, false);
    return o;
  }
  note(o, kRootClassAgreement, class_matches(*roots.classification, roots.distinct_count));
  note(o, kRootZeroMultiplicity, roots.zero_multiplicity == gamma_p(g));
  bool paired = true;
  bool no_positive = true;
  for (const auto& r : roots.roots) {
    if (r.value.imag() != 0) {
      const auto partner = std::find_if(roots.roots.begin(), roots.roots.end(), [&](const Root& q) {
        return std::abs(q.value - std::conj(r.value)) < 1e-7 && q.multiplicity == r.multiplicity;
      });
      paired = paired && partner != roots.roots.end();
    } else {
      no_positive = no_positive && r.value.real() <= 0;
    }
  }
  note(o, kConjugatePairs, paired);
  note(o, kNoPositiveRealRoot, no_positive);

  if (n <= 7) {
    for (const auto& v : roots.rouche_verdicts) {
      note(o, kRoucheGraphBound, v.graph_bound_holds);
      if (v.universal_bound_holds) note(o, kRoucheUniversalForm, *v.universal_bound_holds);
    }
    if (e.flags.connected && n >= 3)
      for (double a : {0.5, 1.0, 2.0}) note(o, kUniversalBelowGraph, universal_bound_below_graph(e.poly, n, a));
  }
  return o;
}

template <std::size_t N>
SuiteReport empty_report(const std::array<std::string_view, N>& names) {
  SuiteReport report;
  for (auto name : names) report.properties.push_back({std::string(name), 0, 0, {}, false});
  return report;
}

}  // namespace

SuiteReport run_labeled_suite(int max_n, int jobs) {
  SuiteReport report = empty_report(kLabeledNames);
  for (int n = 1; n <= max_n; ++n) {
    const LabeledGraphs all(n);
    std::vector<Outcomes> outcomes(all.count());
    parallel_for(all.count(), jobs, [&](std::size_t mask) {
      outcomes[mask] = check_labeled(all.at(mask), (static_cast<std::uint64_t>(n) << 32) ^ mask);
    });
    for (std::size_t mask = 0; mask < outcomes.size(); ++mask)
      merge(report, outcomes[mask], to_graph6(all.at(mask)));
    report.graphs += all.count();
  }
  return report;
}

SuiteReport run_catalog_suite(std::span<const CatalogEntry> entries, int jobs) {
  SuiteReport report = empty_report(kCatalogNames);
  report.properties[kRoucheUniversalForm].report_only = true;
  report.properties[kUnimodality].report_only = true;
  std::vector<Outcomes> outcomes(entries.size());
  parallel_for(entries.size(), jobs, [&](std::size_t i) { outcomes[i] = check_catalog(entries[i]); });
  for (std::size_t i = 0; i < entries.size(); ++i) merge(report, outcomes[i], entries[i].key);
  report.graphs = entries.size();
  return report;
}

std::string entries_to_csv(std::span<const CatalogEntry> entries) {
  int max_n = 0;
  for (const auto& e : entries) max_n = std::max(max_n, e.n);
  std::map<IntPolynomial, std::size_t> class_id;
  for (const auto& e : entries) class_id.try_emplace(e.poly, class_id.size());

  std::string out = "graph6,n,gamma_p";
  for (int i = 0; i <= max_n; ++i) out += ",c" + std::to_string(i);
  out += ",unimodal,class_id\n";
  for (const auto& e : entries) {
    out += e.key + ',' + std::to_string(e.n) + ',' + std::to_string(e.flags.gamma_p);
    for (const auto& c : e.poly.to_decimal_strings(static_cast<std::size_t>(max_n) + 1)) out += ',' + c;
    out += std::string(",") + (e.flags.unimodal ? "true" : "false") + ',' + std::to_string(class_id.at(e.poly)) + '\n';
  }
  return out;
}

}  // namespace pdpoly
