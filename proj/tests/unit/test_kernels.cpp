#include <doctest.h>

#include <cstdlib>
#include <random>

#include "bridge.hpp"
#include "pdpoly/counting.hpp"
#include "pdpoly/kernels.hpp"

using namespace pdpoly;
using kernels::Isa;
using kernels::Observation;

namespace {

constexpr Observation kModes[] = {Observation::power_domination, Observation::zero_forcing, Observation::domination};

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

oracle::Rule rule_of(Observation mode) {
  switch (mode) {
    case Observation::power_domination: return oracle::Rule::power;
    case Observation::zero_forcing: return oracle::Rule::zero_forcing;
    case Observation::domination: return oracle::Rule::domination;
  }
  return oracle::Rule::power;
}

}  // namespace

TEST_CASE("scalar kernel agrees with the reference simulator") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 1 + trial % 8;
    const Graph g = random_graph(rng, n, 0.35);
    const auto m = testing::to_matrix(g);
    const std::size_t total = std::size_t{1} << n;
    std::vector<Word> sets(total);
    std::vector<Word> out(total);
    for (std::size_t s = 0; s < total; ++s) sets[s] = s;
    for (Observation mode : kModes) {
      kernels::observe_batch(g.adjacency(), mode, sets, out, Isa::scalar);
      for (std::size_t s = 1; s < total; ++s)
        CHECK((out[s] == g.full()) == oracle::observes_all(m, oracle::set_of_mask(s, n), rule_of(mode)));
    }
  }
}

TEST_CASE("AVX2 kernel is bit-identical to the scalar kernel") {
  if (!kernels::isa_supported(Isa::avx2)) {
    MESSAGE("AVX2 not available on this machine; equivalence not exercised");
    return;
  }
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 64);
    const Graph g = random_graph(rng, n, trial % 3 == 0 ? 0.05 : 3.0 / n);
    const std::size_t count = 1 + rng() % 67;  // exercises partial lanes
    std::vector<Word> sets(count);
    for (auto& s : sets) s = rng() & rng() & g.full();
    for (Observation mode : kModes) {
      std::vector<Word> a(count);
      std::vector<Word> b(count);
      kernels::observe_batch(g.adjacency(), mode, sets, a, Isa::scalar);
      kernels::observe_batch(g.adjacency(), mode, sets, b, Isa::avx2);
      CHECK(a == b);
    }
  }
}

TEST_CASE("counting is identical under either instruction set") {
  if (!kernels::isa_supported(Isa::avx2)) return;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = random_graph(rng, 4 + trial % 9, 0.3);
    for (CountMethod method : {CountMethod::lattice, CountMethod::plain}) {
      CountingOptions scalar;
      scalar.method = method;
      scalar.isa = Isa::scalar;
      CountingOptions wide = scalar;
      wide.isa = Isa::avx2;
      CHECK(pd_polynomial(g, scalar) == pd_polynomial(g, wide));
      CHECK(zf_polynomial(g, scalar) == zf_polynomial(g, wide));
    }
  }
}

TEST_CASE("dispatch names") {
  CHECK(kernels::isa_name(Isa::scalar) == "scalar");
  CHECK(kernels::isa_supported(Isa::scalar));
  CHECK(kernels::isa_supported(kernels::best_isa()));
  if (std::getenv("PDPOLY_FORCE_SCALAR") != nullptr) CHECK(kernels::best_isa() == Isa::scalar);
}
