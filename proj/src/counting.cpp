#include "pdpoly/counting.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

#include "pdpoly/error.hpp"

namespace pdpoly {

CountMethod count_method_from_name(std::string_view name) {
  if (name == "auto") return CountMethod::automatic;
  if (name == "lattice") return CountMethod::lattice;
  if (name == "plain") return CountMethod::plain;
  throw Error(ErrorKind::DomainError, "unknown counting method '" + std::string(name) + "'");
}

namespace {

constexpr std::size_t kBatch = 512;

// Machine-word binomials; the counting caps keep n far below overflow.
std::uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

// The k-subset of rank `rank` in increasing numeric (colex) order.
Word unrank_colex(std::uint64_t rank, int k) {
  Word s = 0;
  for (int i = k; i >= 1; --i) {
    int c = i - 1;
    while (choose(c + 1, i) <= rank) ++c;
    rank -= choose(c, i);
    s |= bit(c);
  }
  return s;
}

IntPolynomial to_polynomial(const std::vector<std::uint64_t>& counts) {
  std::vector<BigInt> coeffs;
  coeffs.reserve(counts.size());
  for (auto c : counts) {
    BigInt value;
    mpz_import(value.get_mpz_t(), 1, 1, sizeof(c), 0, 0, &c);
    coeffs.push_back(std::move(value));
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial count_plain(const Graph& g, kernels::Observation mode, kernels::Isa isa) {
  const int n = g.n();
  const Word limit = Word{1} << n;
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  std::vector<Word> batch(kBatch);
  std::vector<Word> out(kBatch);
  for (Word base = 1; base < limit; base += kBatch) {
    const std::size_t used = static_cast<std::size_t>(std::min<Word>(kBatch, limit - base));
    for (std::size_t i = 0; i < used; ++i) batch[i] = base + i;
    kernels::observe_batch(g.adjacency(), mode, std::span<const Word>(batch.data(), used),
                           std::span<Word>(out.data(), used), isa);
    for (std::size_t i = 0; i < used; ++i)
      if (out[i] == g.full()) ++counts[static_cast<std::size_t>(std::popcount(batch[i]))];
  }
  return to_polynomial(counts);
}

// Status bit per subset, indexed by the subset's own bit pattern. Layer k is
// written only while layer k-1 is complete and read-only; words are shared
// between layers, so every access goes through atomic_ref.
class LatticeBits {
 public:
  explicit LatticeBits(int n) : words_(std::max<std::size_t>(1, (std::size_t{1} << n) / 64), 0) {}

  bool test(Word s) const {
    const Word w = std::atomic_ref<Word>(words_[s >> 6]).load(std::memory_order_relaxed);
    return (w >> (s & 63)) & 1U;
  }
  void set(Word s) {
    std::atomic_ref<Word>(words_[s >> 6]).fetch_or(Word{1} << (s & 63), std::memory_order_relaxed);
  }

 private:
  mutable std::vector<Word> words_;
};

struct LayerJob {
  const Graph* graph;
  kernels::Observation mode;
  kernels::Isa isa;
  LatticeBits* bits;
  int k;
};

std::uint64_t run_layer_range(const LayerJob& job, std::uint64_t first_rank, std::uint64_t count) {
  const Graph& g = *job.graph;
  std::uint64_t marked = 0;
  std::vector<Word> pending;
  std::vector<Word> out(kBatch);
  pending.reserve(kBatch);
  auto flush = [&] {
    kernels::observe_batch(g.adjacency(), job.mode, pending, std::span<Word>(out.data(), pending.size()), job.isa);
    for (std::size_t i = 0; i < pending.size(); ++i)
      if (out[i] == g.full()) {
        job.bits->set(pending[i]);
        ++marked;
      }
    pending.clear();
  };

  Word s = unrank_colex(first_rank, job.k);
  for (std::uint64_t i = 0; i < count; ++i) {
    bool inherited = false;
    for (Word rest = s; rest != 0 && !inherited; rest &= rest - 1) inherited = job.bits->test(s & ~(rest & (~rest + 1)));
    if (inherited) {
      job.bits->set(s);
      ++marked;
    } else {
      pending.push_back(s);
      if (pending.size() == kBatch) flush();
    }
    if (i + 1 < count) s = next_same_popcount(s);
  }
  if (!pending.empty()) flush();
  return marked;
}

IntPolynomial count_lattice(const Graph& g, kernels::Observation mode, const CountingOptions& options) {
  const int n = g.n();
  LatticeBits bits(n);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  int workers = options.workers > 0 ? options.workers : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::max(workers, 1);

  for (int k = 1; k <= n; ++k) {
    const LayerJob job{&g, mode, options.isa, &bits, k};
    const std::uint64_t layer = choose(n, k);
    const std::uint64_t chunks = std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), layer / 4096 + 1);
    if (chunks <= 1) {
      counts[static_cast<std::size_t>(k)] = run_layer_range(job, 0, layer);
      continue;
    }
    std::vector<std::uint64_t> partial(chunks, 0);
    {
      std::vector<std::jthread> pool;
      for (std::uint64_t c = 0; c < chunks; ++c) {
        const std::uint64_t begin = layer * c / chunks;
        const std::uint64_t end = layer * (c + 1) / chunks;
        pool.emplace_back([&, c, begin, end] { partial[c] = run_layer_range(job, begin, end - begin); });
      }
    }
    for (auto p : partial) counts[static_cast<std::size_t>(k)] += p;
  }
  return to_polynomial(counts);
}

}  // namespace

IntPolynomial count_polynomial(const Graph& g, kernels::Observation mode, const CountingOptions& options) {
  const CountMethod method = options.method == CountMethod::automatic ? CountMethod::lattice : options.method;
  const int cap = method == CountMethod::lattice ? options.lattice_cap : options.plain_cap;
  if (g.n() > cap)
    throw Error(ErrorKind::TooLarge, "order " + std::to_string(g.n()) + " exceeds the " +
                                         (method == CountMethod::lattice ? "lattice" : "plain") + " counting cap " +
                                         std::to_string(cap));
  if (g.n() > 40) throw Error(ErrorKind::TooLarge, "subset enumeration beyond 40 vertices is not supported");
  return method == CountMethod::lattice ? count_lattice(g, mode, options) : count_plain(g, mode, options.isa);
}

IntPolynomial pd_polynomial(const Graph& g, const CountingOptions& options) {
  return count_polynomial(g, kernels::Observation::power_domination, options);
}

IntPolynomial zf_polynomial(const Graph& g, const CountingOptions& options) {
  return count_polynomial(g, kernels::Observation::zero_forcing, options);
}

IntPolynomial dom_polynomial(const Graph& g, const CountingOptions& options) {
  return count_polynomial(g, kernels::Observation::domination, options);
}

BigInt pd_set_count(const Graph& g, const CountingOptions& options) { return pd_polynomial(g, options).eval_int(1); }

namespace {

// Zero forcing inside G[S]: vertices outside S do not exist.
bool zero_forces_induced(const Graph& g, Word inside, Word start) {
  Word colored = start & inside;
  for (;;) {
    const Word before = colored;
    for (Word rest = colored; rest != 0; rest &= rest - 1) {
      const Word uncolored = g.neighbors(std::countr_zero(rest)) & inside & ~colored;
      if (uncolored != 0 && (uncolored & (uncolored - 1)) == 0) colored |= uncolored;
    }
    if (colored == inside) return true;
    if (colored == before) return false;
  }
}

}  // namespace

std::vector<std::pair<int, BigInt>> pd_tail_coefficients(const Graph& g, int kmax) {
  const int n = g.n();
  kmax = std::clamp(kmax, 0, n - 1);
  std::vector<std::pair<int, BigInt>> out;
  for (int k = 0; k <= kmax; ++k) {
    const std::uint64_t total = choose(n, k);
    BigInt hits = 0;
    Word s = full_mask(k);
    for (std::uint64_t i = 0; i < total; ++i) {
      const Word rest = g.full() & ~s;
      Word reach = 0;
      for (Word r = rest; r != 0; r &= r - 1) reach |= g.neighbors(std::countr_zero(r));
      if (zero_forces_induced(g, s, s & reach)) ++hits;
      if (i + 1 < total) s = next_same_popcount(s);
    }
    out.emplace_back(n - k, hits);
  }
  return out;
}

}  // namespace pdpoly
