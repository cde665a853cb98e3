#include "pdpoly/kernels.hpp"

#include <bit>
#include <cstdlib>

#include "pdpoly/error.hpp"

namespace pdpoly::kernels {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  static const Isa chosen = [] {
    if (std::getenv("PDPOLY_FORCE_SCALAR") != nullptr) return Isa::scalar;
    return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
  }();
  return chosen;
}

void observe_batch(std::span<const Word> adjacency, Observation mode, std::span<const Word> sets, std::span<Word> out,
                   Isa isa) {
  if (out.size() < sets.size()) throw Error(ErrorKind::DomainError, "observe_batch output span too small");
  const int n = static_cast<int>(adjacency.size());
  if (isa == Isa::avx2 && isa_supported(Isa::avx2)) {
    avx2::observe(adjacency.data(), n, mode, sets.data(), out.data(), sets.size());
    return;
  }
  scalar::observe(adjacency.data(), n, mode, sets.data(), out.data(), sets.size());
}

namespace scalar {

namespace {

Word dominate(const Word* adjacency, Word set) {
  Word colored = set;
  for (Word rest = set; rest != 0; rest &= rest - 1) colored |= adjacency[std::countr_zero(rest)];
  return colored;
}

Word force(const Word* adjacency, Word colored, Word full) {
  for (;;) {
    const Word before = colored;
    for (Word rest = colored; rest != 0 && colored != full; rest &= rest - 1) {
      const Word uncolored = adjacency[std::countr_zero(rest)] & ~colored;
      if (uncolored != 0 && (uncolored & (uncolored - 1)) == 0) colored |= uncolored;
    }
    if (colored == before) return colored;
  }
}

}  // namespace

void observe(const Word* adjacency, int n, Observation mode, const Word* sets, Word* out, std::size_t count) {
  const Word full = full_mask(n);
  for (std::size_t i = 0; i < count; ++i) {
    switch (mode) {
      case Observation::power_domination: out[i] = force(adjacency, dominate(adjacency, sets[i]), full); break;
      case Observation::zero_forcing: out[i] = force(adjacency, sets[i], full); break;
      case Observation::domination: out[i] = dominate(adjacency, sets[i]); break;
    }
  }
}

}  // namespace scalar

}  // namespace pdpoly::kernels
