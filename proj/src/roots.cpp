#include "pdpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>

#include "pdpoly/counting.hpp"

namespace pdpoly {

std::string_view root_class_name(RootClass c) {
  switch (c) {
    case RootClass::empty_graph: return "empty_graph";
    case RootClass::p2_union: return "p2_union";
    case RootClass::F_union: return "F_union";
    case RootClass::other: return "other";
  }
  return "other";
}

namespace {

using Rational = mpq_class;
using QPoly = std::vector<Rational>;
using Complex = std::complex<double>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly derivative(const QPoly& p) {
  QPoly out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<long>(i));
  trim(out);
  return out;
}

QPoly subtract(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// Quotient and remainder; b must be nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  QPoly q;
  const int db = degree(b);
  if (degree(a) >= db) q.assign(static_cast<std::size_t>(degree(a) - db + 1), 0);
  while (degree(a) >= db) {
    const int shift = degree(a) - db;
    const Rational factor = a.back() / b.back();
    q[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= db; ++i) a[static_cast<std::size_t>(i + shift)] -= factor * b[static_cast<std::size_t>(i)];
    trim(a);
  }
  trim(q);
  return {q, a};
}

void make_monic(QPoly& p) {
  if (p.empty()) return;
  const Rational lead = p.back();
  for (auto& c : p) c /= lead;
}

QPoly gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
    make_monic(b);
  }
  make_monic(a);
  return a;
}

QPoly quotient(const QPoly& a, const QPoly& b) { return divmod(a, b).first; }

// Yun's algorithm: f = prod a_i^i with the a_i squarefree and pairwise coprime.
std::vector<std::pair<QPoly, int>> squarefree_factors(const QPoly& f) {
  std::vector<std::pair<QPoly, int>> out;
  const QPoly fp = derivative(f);
  const QPoly a0 = gcd(f, fp);
  QPoly b = quotient(f, a0);
  QPoly c = quotient(fp, a0);
  QPoly d = subtract(c, derivative(b));
  for (int i = 1; degree(b) > 0; ++i) {
    const QPoly a = gcd(b, d);
    b = quotient(b, a);
    c = quotient(d, a);
    d = subtract(c, derivative(b));
    if (degree(a) > 0) out.emplace_back(a, i);
  }
  return out;
}

template <typename T>
std::pair<std::complex<T>, std::complex<T>> eval_with_derivative(const std::vector<T>& c, std::complex<T> z) {
  std::complex<T> p = c.back();
  std::complex<T> dp = 0;
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
  }
  return {p, dp};
}

struct FactorRoots {
  std::vector<Complex> roots;
  bool converged = true;
};

// Aberth-Ehrlich on a squarefree factor with coefficients scaled to unit
// max-norm, then Newton steps in extended precision.
FactorRoots aberth(const QPoly& factor) {
  Rational scale = 0;
  for (const auto& c : factor) scale = std::max<Rational>(scale, abs(c));
  std::vector<double> c;
  std::vector<long double> cl;
  for (const auto& q : factor) {
    const Rational r = q / scale;
    c.push_back(r.get_d());
    cl.push_back(static_cast<long double>(r.get_d()));
  }
  const int d = degree(factor);
  FactorRoots out;
  if (d == 1) {
    const Rational root = -factor[0] / factor[1];
    out.roots.emplace_back(root.get_d(), 0.0);
    return out;
  }

  double radius = 0;
  for (int i = 0; i < d; ++i)
    radius = std::max(radius, std::pow(std::abs(c[static_cast<std::size_t>(i)] / c.back()), 1.0 / (d - i)));
  const double center = -c[static_cast<std::size_t>(d - 1)] / (d * c.back());
  std::vector<Complex> z(static_cast<std::size_t>(d));
  for (int k = 0; k < d; ++k)
    z[static_cast<std::size_t>(k)] = center + radius * std::polar(1.0, 2 * std::numbers::pi * k / d + 0.4);

  // A root is frozen once its correction is tiny or |p(z)| is below the
  // rounding error of Horner's rule at z.
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  std::vector<char> frozen(static_cast<std::size_t>(d), 0);
  bool done = false;
  for (int sweep = 0; sweep < kRootIterationCap && !done; ++sweep) {
    done = true;
    for (int k = 0; k < d; ++k) {
      if (frozen[static_cast<std::size_t>(k)]) continue;
      auto& zk = z[static_cast<std::size_t>(k)];
      const auto [p, dp] = eval_with_derivative(c, zk);
      double bound = 0;
      for (std::size_t i = c.size(); i-- > 0;) bound = bound * std::abs(zk) + std::abs(c[i]);
      if (std::abs(p) <= 4 * d * kEps * bound) {
        frozen[static_cast<std::size_t>(k)] = 1;
        continue;
      }
      Complex repulsion = 0;
      for (int j = 0; j < d; ++j)
        if (j != k) repulsion += 1.0 / (zk - z[static_cast<std::size_t>(j)]);
      const Complex ratio = p / dp;
      Complex w = ratio / (1.0 - ratio * repulsion);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = Complex(1e-8, 1e-8);
      zk -= w;
      if (std::abs(w) <= 1e-14 * std::max(1.0, std::abs(zk))) frozen[static_cast<std::size_t>(k)] = 1;
      else done = false;
    }
  }
  out.converged = done;

  for (auto& zk : z) {
    std::complex<long double> x(zk.real(), zk.imag());
    for (int step = 0; step < 3; ++step) {
      const auto [p, dp] = eval_with_derivative(cl, x);
      if (p == 0.0L || dp == 0.0L) break;
      x -= p / dp;
    }
    zk = Complex(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    if (std::abs(zk.imag()) <= 1e-12 * std::max(1.0, std::abs(zk))) zk.imag(0.0);
  }
  out.roots = std::move(z);
  return out;
}

std::vector<Root> cluster(const std::vector<Root>& raw, double threshold) {
  std::vector<std::size_t> parent(raw.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < raw.size(); ++i)
    for (std::size_t j = i + 1; j < raw.size(); ++j)
      if (std::abs(raw[i].value - raw[j].value) < threshold) parent[find(i)] = find(j);

  std::vector<Root> merged;
  std::vector<std::size_t> slot(raw.size(), raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const std::size_t r = find(i);
    if (slot[r] == raw.size()) {
      slot[r] = merged.size();
      merged.push_back({0.0, 0});
    }
    Root& m = merged[slot[r]];
    m.value += raw[i].value * static_cast<double>(raw[i].multiplicity);
    m.multiplicity += raw[i].multiplicity;
  }
  for (auto& m : merged) m.value /= static_cast<double>(m.multiplicity);
  std::sort(merged.begin(), merged.end(), [](const Root& a, const Root& b) {
    const bool za = a.value == 0.0;
    const bool zb = b.value == 0.0;
    if (za != zb) return za;
    if (a.value.real() != b.value.real()) return a.value.real() > b.value.real();
    return a.value.imag() > b.value.imag();
  });
  return merged;
}

}  // namespace

RootReport find_roots(const IntPolynomial& p, double tol) {
  if (p.degree() < 1) throw Error(ErrorKind::DomainError, "root finding needs a polynomial of degree >= 1");
  RootReport report;
  report.zero_multiplicity = p.lowest_power();
  const IntPolynomial rest = p.shift_down(report.zero_multiplicity);

  std::vector<Root> raw;
  if (report.zero_multiplicity > 0) raw.push_back({0.0, report.zero_multiplicity});
  bool converged = true;
  if (rest.degree() > 0) {
    QPoly f;
    for (const auto& c : rest.coefficients()) f.emplace_back(c);
    for (const auto& [factor, multiplicity] : squarefree_factors(f)) {
      const FactorRoots fr = aberth(factor);
      converged = converged && fr.converged;
      for (const auto& z : fr.roots) raw.push_back({z, multiplicity});
    }
  }

  report.roots = cluster(raw, 1e3 * tol);
  report.distinct_count = static_cast<int>(report.roots.size());
  const double max_coeff = p.max_abs_coefficient().get_d();
  std::string failure;
  for (const auto& r : report.roots) {
    const double residual = std::abs(p.eval_complex(r.value));
    report.residuals.push_back(residual);
    const double bound = tol * max_coeff * std::pow(std::max(1.0, std::abs(r.value)), p.degree());
    if (!(residual <= bound) && failure.empty())
      failure = "residual " + std::to_string(residual) + " exceeds " + std::to_string(bound);
  }
  if (!converged) failure = "no convergence within " + std::to_string(kRootIterationCap) + " iterations";
  if (!failure.empty()) throw NumericFailureError(failure + " for " + p.to_string(), std::move(report));
  return report;
}

namespace {

// Divides q by (x - r) in place when r is a root.
bool divide_out(std::vector<BigInt>& q, const BigInt& r) {
  const std::size_t d = q.size() - 1;
  std::vector<BigInt> quotient(d);
  BigInt carry = 0;
  for (std::size_t i = d + 1; i-- > 1;) {
    carry = q[i] + r * carry;
    quotient[i - 1] = carry;
  }
  if (q[0] + r * carry != 0) return false;
  q = std::move(quotient);
  return true;
}

}  // namespace

std::vector<std::pair<BigInt, int>> integer_roots(const IntPolynomial& p) {
  std::vector<std::pair<BigInt, int>> out;
  if (p.degree() < 1) return out;
  const int m = p.lowest_power();
  if (m > 0) out.emplace_back(0, m);
  std::vector<BigInt> q = p.shift_down(m).coefficients();
  if (q.size() < 2) return out;

  // Fujiwara: |z| <= 2 max |a_i / a_d|^(1/(d-i)).
  const int d = static_cast<int>(q.size()) - 1;
  const double lead = std::abs(q.back().get_d());
  double fujiwara = 0;
  for (int i = 0; i < d; ++i) {
    double ratio = std::abs(q[static_cast<std::size_t>(i)].get_d()) / lead;
    if (i == 0) ratio /= 2;
    fujiwara = std::max(fujiwara, std::pow(ratio, 1.0 / (d - i)));
  }
  const BigInt c0 = abs(q[0]);
  BigInt limit = static_cast<unsigned long>(std::ceil(2 * fujiwara)) + 1;
  if (limit > c0) limit = c0;

  std::vector<std::pair<BigInt, int>> found;
  for (BigInt div = 1; div <= limit && q.size() > 1; ++div) {
    if (!mpz_divisible_p(c0.get_mpz_t(), div.get_mpz_t())) continue;
    for (const BigInt& r : {BigInt(-div), div}) {
      int mult = 0;
      while (q.size() > 1 && divide_out(q, r)) ++mult;
      if (mult > 0) found.emplace_back(r, mult);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  out.insert(out.end(), found.begin(), found.end());
  return out;
}

namespace {

struct FSearch {
  const Graph& g;
  std::vector<std::vector<std::pair<int, int>>> pairs_of;  // per owner
  std::vector<FGadget> chosen;
  Word assigned = 0;
  Word owners = 0;

  bool run() {
    if (assigned == g.full()) {
      const VertexSet core(g.n(), owners);
      return g.induced(core).is_connected();
    }
    const int u = std::countr_one(assigned);
    for (const auto& [a, b] : pairs_of[static_cast<std::size_t>(u)])
      if (try_assign(u, a, b)) return true;
    for (int w = 0; w < g.n(); ++w) {
      if ((assigned & bit(w)) != 0) continue;
      for (const auto& [a, b] : pairs_of[static_cast<std::size_t>(w)])
        if ((a == u || b == u) && try_assign(w, a, b)) return true;
    }
    return false;
  }

  bool try_assign(int owner, int a, int b) {
    const Word used = bit(owner) | bit(a) | bit(b);
    if ((assigned & used) != 0) return false;
    assigned |= used;
    owners |= bit(owner);
    chosen.push_back({owner, a, b, g.has_edge(a, b)});
    if (run()) return true;
    chosen.pop_back();
    owners &= ~bit(owner);
    assigned &= ~used;
    return false;
  }
};

}  // namespace

std::optional<FDecomposition> recognize_F(const Graph& g) {
  const int n = g.n();
  if (n % 3 != 0 || !g.is_connected()) return std::nullopt;
  FSearch search{g, std::vector<std::vector<std::pair<int, int>>>(static_cast<std::size_t>(n)), {}, 0, 0};
  for (int v = 0; v < n; ++v) {
    const auto nbrs = g.neighborhood(v).members();
    for (std::size_t i = 0; i < nbrs.size(); ++i)
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const int a = nbrs[i];
        const int b = nbrs[j];
        if ((g.neighbors(a) & ~bit(b)) == bit(v) && (g.neighbors(b) & ~bit(a)) == bit(v))
          search.pairs_of[static_cast<std::size_t>(v)].emplace_back(a, b);
      }
  }
  if (!search.run()) return std::nullopt;
  FDecomposition out{VertexSet(n, search.owners), std::move(search.chosen)};
  std::sort(out.gadgets.begin(), out.gadgets.end(), [](const FGadget& x, const FGadget& y) { return x.owner < y.owner; });
  return out;
}

RootClassification classify_by_distinct_roots(const Graph& g) {
  RootClassification out;
  if (g.edge_count() == 0) {
    out.cls = RootClass::empty_graph;
    return out;
  }
  const auto comps = components(g);
  if (std::all_of(comps.begin(), comps.end(), [](VertexSet c) { return c.size() <= 2; })) {
    out.cls = RootClass::p2_union;
    return out;
  }
  for (VertexSet c : comps) {
    if (c.size() == 1) continue;
    auto local = recognize_F(g.induced(c));
    if (!local) {
      out.witness.clear();
      out.cls = RootClass::other;
      return out;
    }
    const auto labels = c.members();
    auto relabel = [&](int v) { return labels[static_cast<std::size_t>(v)]; };
    FDecomposition mapped;
    Word core = 0;
    for (int v : local->core.members()) core |= bit(relabel(v));
    mapped.core = VertexSet(g.n(), core);
    for (const auto& gd : local->gadgets)
      mapped.gadgets.push_back({relabel(gd.owner), relabel(gd.first), relabel(gd.second), gd.adjacent});
    out.witness.push_back(std::move(mapped));
  }
  out.cls = RootClass::F_union;
  return out;
}

namespace {

Rational exact_positive(double a) {
  if (!(a > 0) || !std::isfinite(a)) throw Error(ErrorKind::DomainError, "the bound needs a finite a > 0");
  return Rational(a);
}

std::vector<Rational> powers(const Rational& a, int n) {
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, 1);
  for (int i = 1; i <= n; ++i) out[static_cast<std::size_t>(i)] = out[static_cast<std::size_t>(i - 1)] * a;
  return out;
}

using CoeffFn = std::function<BigInt(int)>;

Rational bound_from(int n, const Rational& a, const CoeffFn& numerator_coeff, const CoeffFn& count) {
  const auto pw = powers(a, n);
  Rational num = 0;
  Rational den = 0;
  for (int i = 1; i <= n; ++i) {
    num += numerator_coeff(i) * pw[static_cast<std::size_t>(i)];
    for (int k = i; k <= n; ++k)
      den += count(k) * binomial_coefficient(k, i) * pw[static_cast<std::size_t>(k - i)];
  }
  if (den == 0) throw Error(ErrorKind::DomainError, "bound denominator vanishes");
  return num / den;
}

Rational graph_bound(const IntPolynomial& p, double a) {
  const CoeffFn coeff = [&](int i) { return p.coeff(i); };
  return bound_from(p.degree(), exact_positive(a), coeff, coeff);
}

Rational universal_bound(int n, double a) {
  if (n < 3) throw Error(ErrorKind::DomainError, "the universal bound needs n >= 3");
  const int c = (n + 2) / 3;
  const CoeffFn numerator = [&](int i) { return i < c ? BigInt(0) : binomial_coefficient(n - c, i - c); };
  const CoeffFn count = [&](int k) { return binomial_coefficient(n, k); };
  return bound_from(n, exact_positive(a), numerator, count);
}

}  // namespace

double rouche_bound_graph(const IntPolynomial& p, double a) { return graph_bound(p, a).get_d(); }

double rouche_bound_graph(const Graph& g, double a) { return rouche_bound_graph(pd_polynomial(g), a); }

double rouche_bound_universal(int n, double a) { return universal_bound(n, a).get_d(); }

bool universal_bound_below_graph(const IntPolynomial& p, int n, double a) {
  return universal_bound(n, a) <= graph_bound(p, a);
}

RootReport analyze_graph_roots(const Graph& g, double tol) { return analyze_graph_roots(g, pd_polynomial(g), tol); }

RootReport analyze_graph_roots(const Graph& g, const IntPolynomial& p, double tol) {
  RootReport report = find_roots(p, tol);
  report.classification = classify_by_distinct_roots(g).cls;
  const int n = g.n();
  const bool universal = n >= 3 && g.is_connected();
  for (const auto& r : report.roots) {
    const double a = r.value.real();
    if (!(a > 0)) continue;
    const double b = std::abs(r.value.imag());
    RoucheVerdict v;
    v.root = r.value;
    const Rational fg = graph_bound(p, a);
    v.f_graph = fg.get_d();
    v.graph_bound = std::min(v.f_graph, std::pow(v.f_graph, 1.0 / n));
    v.graph_bound_holds = b >= v.graph_bound - 1e-6;
    if (universal) {
      const Rational fu = universal_bound(n, a);
      const double f = fu.get_d();
      v.f_universal = f;
      v.universal_bound = std::min(f, std::pow(f, n));
      v.universal_bound_holds = b >= *v.universal_bound - 1e-6;
      v.universal_below_graph = fu <= fg;
    }
    report.rouche_verdicts.push_back(v);
  }
  return report;
}

}  // namespace pdpoly
