#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pdpoly/catalog.hpp"
#include "pdpoly/closed_forms.hpp"
#include "pdpoly/counting.hpp"
#include "pdpoly/error.hpp"
#include "pdpoly/graph_io.hpp"
#include "pdpoly/propagation.hpp"
#include "pdpoly/roots.hpp"
#include "pdpoly/threshold.hpp"

namespace pdpoly::cli {
namespace {

using json = nlohmann::ordered_json;

constexpr int kSchema = 1;
constexpr int kDefaultVerifyLimit = 12;

json header() { return json{{"schema", kSchema}}; }

json poly_json(const IntPolynomial& p, int n) { return p.to_decimal_strings(static_cast<std::size_t>(n) + 1); }

json set_json(VertexSet s) { return s.members(); }

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge: return kCap;
    case ErrorKind::NumericFailure: return kNumeric;
    default: return kInput;
  }
}

void emit(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

// compute ------------------------------------------------------------------

struct ComputeArgs {
  std::string in;
  std::string format = "auto";
  std::string method = "auto";
  std::string which = "pd";
};

int do_compute(const ComputeArgs& a, std::ostream& out) {
  const Graph g = read_graph_file(a.in, format_from_name(a.format));
  json j = header();
  j["n"] = g.n();
  const bool formula = a.method == "formula";
  CountingOptions options;
  if (!formula) options.method = count_method_from_name(a.method);
  j["method"] = a.method;
  const bool all = a.which == "all";
  if (all || a.which == "pd") j["pd"] = poly_json(formula ? formula_pd_polynomial(g, options) : pd_polynomial(g, options), g.n());
  if (all || a.which == "zf") j["zf"] = poly_json(zf_polynomial(g, options), g.n());
  if (all || a.which == "dom") j["dom"] = poly_json(dom_polynomial(g, options), g.n());
  emit(out, j);
  return kOk;
}

// tail ---------------------------------------------------------------------

int do_tail(const std::string& in, const std::string& format, int kmax, std::ostream& out) {
  const Graph g = read_graph_file(in, format_from_name(format));
  json j = header();
  j["n"] = g.n();
  j["tail"] = json::array();
  for (const auto& [power, count] : pd_tail_coefficients(g, kmax))
    j["tail"].push_back({{"power", power}, {"count", count.get_str()}});
  emit(out, j);
  return kOk;
}

// roots --------------------------------------------------------------------

json report_json(const RootReport& r) {
  json j;
  j["zero_multiplicity"] = r.zero_multiplicity;
  j["distinct_count"] = r.distinct_count;
  j["roots"] = json::array();
  j["multiplicities"] = json::array();
  for (const auto& root : r.roots) {
    j["roots"].push_back({root.value.real(), root.value.imag()});
    j["multiplicities"].push_back(root.multiplicity);
  }
  j["residuals"] = r.residuals;
  j["classification"] = r.classification ? json(root_class_name(*r.classification)) : json(nullptr);
  j["rouche"] = json::array();
  for (const auto& v : r.rouche_verdicts) {
    json e{{"root", {v.root.real(), v.root.imag()}},
           {"f_graph", v.f_graph},
           {"graph_bound", v.graph_bound},
           {"graph_bound_holds", v.graph_bound_holds}};
    if (v.f_universal) {
      e["f_universal"] = *v.f_universal;
      e["universal_bound"] = *v.universal_bound;
      e["universal_bound_holds"] = *v.universal_bound_holds;
      e["universal_below_graph"] = *v.universal_below_graph;
    }
    j["rouche"].push_back(e);
  }
  return j;
}

int do_roots(const std::string& in, const std::string& format, double tol, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph_file(in, format_from_name(format));
  const IntPolynomial p = pd_polynomial(g);
  json j = header();
  j["n"] = g.n();
  j["pd"] = poly_json(p, g.n());
  j["integer_roots"] = json::array();
  for (const auto& [r, m] : integer_roots(p)) j["integer_roots"].push_back({r.get_str(), m});
  try {
    j.update(report_json(analyze_graph_roots(g, p, tol)));
  } catch (const NumericFailureError& e) {
    j.update(report_json(e.partial()));
    j["classification"] = root_class_name(classify_by_distinct_roots(g).cls);
    emit(out, j);
    err << e.what() << '\n';
    return kNumeric;
  }
  emit(out, j);
  return kOk;
}

// threshold ----------------------------------------------------------------

int do_threshold(const std::string& bits, std::ostream& out) {
  const BlockString b = normalize(bits);
  json j = header();
  j["bits"] = b.bits;
  j["n"] = b.size();
  if (b.ends_with_one_block()) {
    const ThresholdRun run = threshold_pd_run(b);
    j["pd"] = poly_json(run.poly, b.size());
    j["operations"] = run.operations;
  } else {
    j["pd"] = poly_json(threshold_pd_polynomial_any(bits), b.size());
  }
  j["blocks"] = json::array();
  for (const auto& block : b.blocks) j["blocks"].push_back({block.symbol, block.length});
  emit(out, j);
  return kOk;
}

// forts --------------------------------------------------------------------

int do_forts(const std::string& in, const std::string& format, bool minimal, bool ip_bound, std::ostream& out) {
  const Graph g = read_graph_file(in, format_from_name(format));
  json j = header();
  j["n"] = g.n();
  j["minimal"] = minimal;
  j["forts"] = json::array();
  for (VertexSet f : enumerate_forts(g, minimal)) j["forts"].push_back(set_json(f));
  j["neighborhood_family"] = json::array();
  for (VertexSet nf : fort_neighborhood_family(g)) j["neighborhood_family"].push_back(set_json(nf));
  if (ip_bound) {
    const IpBoundCheck check = check_ip_bound(g);
    j["ip_bound"] = {{"lhs", check.lhs.get_str()}, {"rhs", check.rhs.get_str()}, {"holds", check.holds}};
  }
  emit(out, j);
  return kOk;
}

// decompose ----------------------------------------------------------------

struct DecomposeArgs {
  std::string op;
  std::vector<std::string> in;
  std::string format = "auto";
  int k = 2;
  std::vector<std::string> gadgets;  // FILE:ANCHOR
  bool verify = false;
  bool no_verify = false;
};

Gadget parse_gadget(const std::string& spec, GraphFormat format) {
  const auto colon = spec.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorKind::FormatError, "gadget '" + spec + "' needs FILE:ANCHOR");
  int anchor = 0;
  const char* first = spec.data() + colon + 1;
  const char* last = spec.data() + spec.size();
  if (auto [ptr, ec] = std::from_chars(first, last, anchor); ec != std::errc() || ptr != last)
    throw Error(ErrorKind::FormatError, "gadget anchor in '" + spec + "' is not an integer");
  return {read_graph_file(spec.substr(0, colon), format), anchor};
}

int do_decompose(const DecomposeArgs& a, std::ostream& out, std::ostream& err) {
  const GraphFormat format = format_from_name(a.format);
  auto need = [&](std::size_t count) {
    if (a.in.size() != count)
      throw Error(ErrorKind::ArityError, a.op + " takes " + std::to_string(count) + " --in graph(s), got " +
                                             std::to_string(a.in.size()));
  };
  std::vector<Graph> graphs;
  for (const auto& path : a.in) graphs.push_back(read_graph_file(path, format));

  IntPolynomial result;
  std::function<Graph()> compose;
  int order = 0;
  if (a.op == "union") {
    need(2);
    result = disjoint_union_poly(pd_polynomial(graphs[0]), pd_polynomial(graphs[1]));
    compose = [&] { return disjoint_union(graphs[0], graphs[1]); };
    order = graphs[0].n() + graphs[1].n();
  } else if (a.op == "join") {
    need(2);
    result = join_poly(graphs[0], graphs[1]);
    compose = [&] { return join(graphs[0], graphs[1]); };
    order = graphs[0].n() + graphs[1].n();
  } else if (a.op == "corona") {
    need(1);
    result = corona_complete_poly(graphs[0], a.k);
    compose = [&] { return corona(graphs[0], make_family(Family::complete, a.k)); };
    order = graphs[0].n() * (a.k + 1);
  } else if (a.op == "dominating-vertex") {
    need(1);
    result = dominating_vertex_poly(graphs[0]);
    compose = [&] { return add_dominating_vertex(graphs[0]); };
    order = graphs[0].n() + 1;
  } else if (a.op == "identify") {
    need(1);
    std::vector<Gadget> gadgets;
    for (const auto& spec : a.gadgets) gadgets.push_back(parse_gadget(spec, format));
    result = identification_poly(graphs[0], gadgets);
    compose = [&, gadgets] { return identify(graphs[0], gadgets); };
    for (const auto& gd : gadgets) order += gd.graph.n();
  } else {
    throw Error(ErrorKind::DomainError, "unknown operation '" + a.op + "'");
  }

  json j = header();
  j["op"] = a.op;
  j["n"] = order;
  j["pd"] = poly_json(result, order);
  const bool verify = !a.no_verify && (a.verify || order <= kDefaultVerifyLimit);
  if (!verify) {
    j["verified"] = nullptr;
    emit(out, j);
    return kOk;
  }
  const IntPolynomial direct = pd_polynomial(compose());
  j["verified"] = direct == result;
  emit(out, j);
  if (direct != result) {
    err << "formula result disagrees with direct count: " << result.to_string() << " vs " << direct.to_string() << '\n';
    return kNumeric;
  }
  return kOk;
}

// catalog ------------------------------------------------------------------

struct CatalogArgs {
  std::string in;
  std::string audit = "suite";
  bool complete = false;
  int jobs = 1;
  std::string csv;
  std::string results;
  bool progress = false;
};

json property_json(const PropertyResult& p) {
  return {{"name", p.name},
          {"checked", p.checked},
          {"violations", p.violations},
          {"examples", p.examples},
          {"report_only", p.report_only}};
}

int do_catalog(const CatalogArgs& a, std::ostream& out, std::ostream& err) {
  IngestOptions options;
  options.jobs = a.jobs;
  if (!a.results.empty()) options.results_file = a.results;
  if (a.progress)
    options.progress = [&err](std::size_t done, std::size_t total) { err << "ingested " << done << "/" << total << '\n'; };
  const IngestResult ingested = ingest(a.in, options);
  const auto& entries = ingested.entries;

  json j = header();
  j["audit"] = a.audit;
  j["graphs"] = entries.size();
  j["resumed"] = ingested.resumed;
  j["errors"] = json::array();
  for (const auto& e : ingested.errors) j["errors"].push_back({{"line", e.line}, {"text", e.text}, {"message", e.message}});

  if (a.audit == "unimodality") {
    const UnimodalityAudit audit = unimodality_audit(entries);
    j["checked"] = audit.checked;
    j["violations"] = audit.violations;
  } else if (a.audit == "uniqueness") {
    const UniquenessReport report = uniqueness_report(entries, a.complete);
    j["scope"] = report.scope();
    j["complete"] = report.complete;
    j["unique"] = report.unique_keys;
    j["shared_classes"] = json::array();
    for (const auto& [poly, keys] : group_by_polynomial(entries))
      if (keys.size() > 1) j["shared_classes"].push_back({{"pd", poly_json(poly, poly.degree())}, {"graphs", keys}});
    if (a.complete) {
      try {
        const AppendCheckReport check = k1_k2_uniqueness_check(entries);
        j["append_check"] = {{"k1_checked", check.k1_checked},
                             {"k2_checked", check.k2_checked},
                             {"k3_checked", check.k3_checked},
                             {"skipped", check.skipped},
                             {"violations", check.violations}};
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::IncompleteCatalog) throw;
        j["append_check"] = nullptr;
      }
    }
  } else if (a.audit == "roots") {
    j["results"] = json::array();
    std::map<std::string, std::size_t> by_class;
    std::size_t positive_real_part = 0;
    std::size_t failures = 0;
    for (const auto& e : entries) {
      json row{{"graph6", e.key}};
      try {
        const RootReport r = analyze_graph_roots(e.graph, e.poly);
        row["classification"] = root_class_name(*r.classification);
        row["distinct_count"] = r.distinct_count;
        row["zero_multiplicity"] = r.zero_multiplicity;
        ++by_class[std::string(root_class_name(*r.classification))];
        positive_real_part += r.rouche_verdicts.size();
      } catch (const NumericFailureError& ex) {
        row["error"] = ex.what();
        ++failures;
      }
      j["results"].push_back(row);
    }
    j["by_class"] = by_class;
    j["positive_real_part_roots"] = positive_real_part;
    j["numeric_failures"] = failures;
  } else if (a.audit == "suite") {
    const SuiteReport report = run_catalog_suite(entries, a.jobs);
    j["passed"] = report.passed();
    j["properties"] = json::array();
    for (const auto& p : report.properties) j["properties"].push_back(property_json(p));
  } else {
    throw Error(ErrorKind::DomainError, "unknown audit '" + a.audit + "'");
  }

  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw Error(ErrorKind::IoError, "cannot write " + a.csv);
    csv << entries_to_csv(entries);
  }
  emit(out, j);
  if (!ingested.errors.empty()) {
    err << ingested.errors.size() << " line(s) could not be read; first: line " << ingested.errors.front().line << ": "
        << ingested.errors.front().message << '\n';
    return kPartial;
  }
  return kOk;
}

// gen ----------------------------------------------------------------------

int do_gen(const std::string& family, const std::string& params, const std::string& out_format, std::ostream& out) {
  std::vector<int> values;
  std::stringstream ss(params);
  for (std::string item; std::getline(ss, item, ',');) {
    int v = 0;
    const char* last = item.data() + item.size();
    if (auto [ptr, ec] = std::from_chars(item.data(), last, v); ec != std::errc() || ptr != last)
      throw Error(ErrorKind::FormatError, "parameter '" + item + "' is not an integer");
    values.push_back(v);
  }
  const Family f = family_from_name(family);
  const std::size_t expected = f == Family::complete_bipartite ? 2 : 1;
  if (values.size() != expected)
    throw Error(ErrorKind::ArityError, std::string(family_name(f)) + " takes " + std::to_string(expected) + " parameter(s)");
  const Graph g = make_family(f, values[0], expected == 2 ? values[1] : 0);
  if (out_format == "edgelist") {
    out << to_edge_list_text(g);
  } else {
    out << to_graph6(g) << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact power domination, zero forcing and domination polynomials", "pdpoly"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"auto", "graph6", "edgelist"};

  ComputeArgs compute_args;
  auto* compute = app.add_subcommand("compute", "Polynomials of one graph");
  compute->add_option("--in", compute_args.in, "Graph file")->required();
  compute->add_option("--format", compute_args.format)->check(CLI::IsMember(formats));
  compute->add_option("--method", compute_args.method)->check(CLI::IsMember({"auto", "lattice", "plain", "formula"}));
  compute->add_option("--which", compute_args.which)->check(CLI::IsMember({"pd", "zf", "dom", "all"}));

  std::string tail_in, tail_format = "auto";
  int kmax = 0;
  auto* tail = app.add_subcommand("tail", "Top coefficients from k-subsets only");
  tail->add_option("--in", tail_in)->required();
  tail->add_option("--format", tail_format)->check(CLI::IsMember(formats));
  tail->add_option("--kmax", kmax)->required()->check(CLI::NonNegativeNumber);

  std::string roots_in, roots_format = "auto";
  double tol = kDefaultRootTolerance;
  auto* roots = app.add_subcommand("roots", "Roots, classification and Rouché checks");
  roots->add_option("--in", roots_in)->required();
  roots->add_option("--format", roots_format)->check(CLI::IsMember(formats));
  roots->add_option("--tol", tol)->check(CLI::PositiveNumber);

  std::string bits;
  auto* threshold = app.add_subcommand("threshold", "Threshold graph from a binary string");
  threshold->add_option("--bits", bits)->required();

  std::string forts_in, forts_format = "auto";
  bool minimal = false;
  bool ip_bound = false;
  auto* forts = app.add_subcommand("forts", "Forts and their closed neighborhoods");
  forts->add_option("--in", forts_in)->required();
  forts->add_option("--format", forts_format)->check(CLI::IsMember(formats));
  forts->add_flag("--minimal", minimal);
  forts->add_flag("--ip-bound", ip_bound);

  DecomposeArgs decompose_args;
  auto* decompose = app.add_subcommand("decompose", "Polynomial of a composed graph from its parts");
  decompose->add_option("--op", decompose_args.op)
      ->required()
      ->check(CLI::IsMember({"union", "join", "corona", "dominating-vertex", "identify"}));
  decompose->add_option("--in", decompose_args.in)->required();
  decompose->add_option("--format", decompose_args.format)->check(CLI::IsMember(formats));
  decompose->add_option("--k", decompose_args.k, "Order of the complete graph in a corona");
  decompose->add_option("--gadget", decompose_args.gadgets, "FILE:ANCHOR, one per vertex of the host");
  auto* verify = decompose->add_flag("--verify", decompose_args.verify, "Cross-check by direct counting at any order");
  decompose->add_flag("--no-verify", decompose_args.no_verify)->excludes(verify);

  CatalogArgs catalog_args;
  auto* catalog = app.add_subcommand("catalog", "Audits over a graph6 catalog");
  catalog->add_option("--in", catalog_args.in)->required();
  catalog->add_option("--audit", catalog_args.audit)->check(CLI::IsMember({"unimodality", "uniqueness", "roots", "suite"}));
  catalog->add_flag("--complete", catalog_args.complete, "Assert the file holds every graph of each order");
  catalog->add_option("--jobs", catalog_args.jobs)->check(CLI::PositiveNumber);
  catalog->add_option("--csv", catalog_args.csv);
  catalog->add_option("--results", catalog_args.results, "Append-only results file for resuming");
  catalog->add_flag("--progress", catalog_args.progress);

  std::string family, params, gen_format = "graph6";
  auto* gen = app.add_subcommand("gen", "Named family as graph6");
  gen->add_option("--family", family)->required();
  gen->add_option("--params", params, "n, or a,b for complete_bipartite")->required();
  gen->add_option("--format", gen_format)->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (compute->parsed()) return do_compute(compute_args, out);
    if (tail->parsed()) return do_tail(tail_in, tail_format, kmax, out);
    if (roots->parsed()) return do_roots(roots_in, roots_format, tol, out, err);
    if (threshold->parsed()) return do_threshold(bits, out);
    if (forts->parsed()) return do_forts(forts_in, forts_format, minimal, ip_bound, out);
    if (decompose->parsed()) return do_decompose(decompose_args, out, err);
    if (catalog->parsed()) return do_catalog(catalog_args, out, err);
    if (gen->parsed()) return do_gen(family, params, gen_format, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::bad_alloc&) {
    err << "TooLarge: out of memory\n";
    return kCap;
  }
  return kUsage;
}

}  // namespace pdpoly::cli
