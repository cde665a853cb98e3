#include "pdpoly/propagation.hpp"

#include <algorithm>
#include <bit>

#include "pdpoly/counting.hpp"
#include "pdpoly/error.hpp"
#include "pdpoly/kernels.hpp"

namespace pdpoly {

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  Word out = s.bits();
  for (Word rest = s.bits(); rest != 0; rest &= rest - 1) out |= g.neighbors(std::countr_zero(rest));
  return {g.n(), out};
}

ClosureResult forcing_closure(const Graph& g, VertexSet colored, std::mt19937_64* order_rng) {
  const int n = g.n();
  Word state = colored.bits();
  std::vector<int> uncolored_count(static_cast<std::size_t>(n));
  std::vector<int> worklist;
  for (int v = 0; v < n; ++v) {
    uncolored_count[static_cast<std::size_t>(v)] = std::popcount(g.neighbors(v) & ~state);
    if ((state >> v) & 1U && uncolored_count[static_cast<std::size_t>(v)] == 1) worklist.push_back(v);
  }

  ClosureResult result;
  result.trace.initial = colored;
  result.trace.after_domination = colored;
  while (!worklist.empty()) {
    if (order_rng != nullptr) {
      std::uniform_int_distribution<std::size_t> pick(0, worklist.size() - 1);
      std::swap(worklist[pick(*order_rng)], worklist.back());
    }
    const int forcer = worklist.back();
    worklist.pop_back();
    if (uncolored_count[static_cast<std::size_t>(forcer)] != 1) continue;
    const Word target_bit = g.neighbors(forcer) & ~state;
    const int target = std::countr_zero(target_bit);
    state |= target_bit;
    result.trace.forces.emplace_back(forcer, target);
    for (Word rest = g.neighbors(target); rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if (--uncolored_count[static_cast<std::size_t>(w)] == 1 && ((state >> w) & 1U)) worklist.push_back(w);
    }
    if (uncolored_count[static_cast<std::size_t>(target)] == 1) worklist.push_back(target);
  }
  result.colored = VertexSet(n, state);
  result.trace.final = result.colored;
  return result;
}

PropagationTrace power_domination_trace(const Graph& g, VertexSet s) {
  const VertexSet dominated = closed_neighborhood(g, s);
  auto closure = forcing_closure(g, dominated);
  closure.trace.initial = s;
  closure.trace.after_domination = dominated;
  return closure.trace;
}

namespace {

bool observes_all(const Graph& g, VertexSet s, kernels::Observation mode) {
  const Word set = s.bits();
  Word out = 0;
  kernels::observe_batch(g.adjacency(), mode, std::span<const Word>(&set, 1), std::span<Word>(&out, 1));
  return out == g.full();
}

int minimum_size(const Graph& g, kernels::Observation mode) {
  const int n = g.n();
  std::vector<Word> batch;
  std::vector<Word> out;
  for (int k = 1; k <= n; ++k) {
    const BigInt total = binomial_coefficient(n, k);
    Word subset = full_mask(k);
    for (BigInt done = 0; done < total;) {
      batch.clear();
      while (batch.size() < 256 && done < total) {
        batch.push_back(subset);
        ++done;
        if (done < total) subset = next_same_popcount(subset);
      }
      out.resize(batch.size());
      kernels::observe_batch(g.adjacency(), mode, batch, out);
      if (std::find(out.begin(), out.end(), g.full()) != out.end()) return k;
    }
  }
  return n;
}

}  // namespace

bool is_power_dominating(const Graph& g, VertexSet s) {
  return observes_all(g, s, kernels::Observation::power_domination);
}

bool is_zero_forcing(const Graph& g, VertexSet s) { return observes_all(g, s, kernels::Observation::zero_forcing); }

bool is_dominating(const Graph& g, VertexSet s) { return observes_all(g, s, kernels::Observation::domination); }

int gamma_p(const Graph& g) { return minimum_size(g, kernels::Observation::power_domination); }
int zero_forcing_number(const Graph& g) { return minimum_size(g, kernels::Observation::zero_forcing); }
int domination_number(const Graph& g) { return minimum_size(g, kernels::Observation::domination); }

bool is_fort(const Graph& g, VertexSet f) {
  if (f.none()) return false;
  for (Word outside = g.full() & ~f.bits(); outside != 0; outside &= outside - 1)
    if (std::popcount(g.neighbors(std::countr_zero(outside)) & f.bits()) == 1) return false;
  return true;
}

namespace {

void check_fort_cap(const Graph& g, int cap) {
  if (g.n() > cap)
    throw Error(ErrorKind::TooLarge, "fort enumeration is exhaustive; order " + std::to_string(g.n()) +
                                         " exceeds cap " + std::to_string(cap));
}

// One bit per subset of the vertex set.
class SubsetBitmap {
 public:
  explicit SubsetBitmap(int n) : words_((std::size_t{1} << n) / 64 + 1, 0) {}
  bool test(Word s) const { return (words_[s >> 6] >> (s & 63)) & 1U; }
  void set(Word s) { words_[s >> 6] |= Word{1} << (s & 63); }

 private:
  std::vector<Word> words_;
};

}  // namespace

std::vector<VertexSet> enumerate_forts(const Graph& g, bool minimal_only, int cap) {
  check_fort_cap(g, cap);
  const int n = g.n();
  const Word limit = Word{1} << n;
  std::vector<VertexSet> forts;
  for (Word f = 1; f < limit; ++f)
    if (is_fort(g, VertexSet(n, f))) forts.emplace_back(n, f);
  if (!minimal_only) return forts;

  // contains_fort[S]: some fort is a subset of S. Filled by an OR over
  // single-vertex removals, in increasing order so subsets resolve first.
  SubsetBitmap is_fort_bit(n);
  for (auto f : forts) is_fort_bit.set(f.bits());
  SubsetBitmap contains_fort(n);
  for (Word s = 1; s < limit; ++s) {
    bool hit = is_fort_bit.test(s);
    for (Word rest = s; rest != 0 && !hit; rest &= rest - 1) hit = contains_fort.test(s & ~(rest & (~rest + 1)));
    if (hit) contains_fort.set(s);
  }
  std::vector<VertexSet> minimal;
  for (auto f : forts) {
    bool has_smaller = false;
    for (Word rest = f.bits(); rest != 0 && !has_smaller; rest &= rest - 1)
      has_smaller = contains_fort.test(f.bits() & ~(rest & (~rest + 1)));
    if (!has_smaller) minimal.push_back(f);
  }
  return minimal;
}

std::vector<VertexSet> fort_neighborhood_family(const Graph& g, int cap) {
  const auto forts = enumerate_forts(g, false, cap);
  std::vector<VertexSet> family;
  family.reserve(forts.size());
  for (auto f : forts) family.push_back(closed_neighborhood(g, f));
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

bool meets_every_fort(std::span<const VertexSet> family, VertexSet s) {
  return std::all_of(family.begin(), family.end(), [&](VertexSet nf) { return nf.intersects(s); });
}

bool is_pds_via_forts(const Graph& g, VertexSet s, int cap) {
  return meets_every_fort(fort_neighborhood_family(g, cap), s);
}

IpBoundCheck check_ip_bound(const Graph& g, int cap) {
  IpBoundCheck check;
  check.lhs = static_cast<unsigned long>(fort_neighborhood_family(g, cap).size());
  BigInt all_subsets;
  mpz_ui_pow_ui(all_subsets.get_mpz_t(), 2, static_cast<unsigned long>(g.n()));
  check.rhs = all_subsets - pd_set_count(g);
  check.holds = check.lhs <= check.rhs;
  return check;
}

}  // namespace pdpoly
