// AVX2 variant of the observation kernel: four start sets per 256-bit
// register, one 64-bit lane each. Functions carry a target attribute instead
// of the whole file being built with -mavx2, so nothing shared with the scalar
// path is ever compiled for AVX2.

#include "pdpoly/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#endif

namespace pdpoly::kernels::avx2 {

#if defined(__x86_64__) || defined(__i386__)

namespace {

constexpr std::size_t kLanes = 4;

__attribute__((target("avx2"))) inline __m256i lanes_holding(__m256i sets, __m256i probe) {
  return _mm256_cmpeq_epi64(_mm256_and_si256(sets, probe), probe);
}

__attribute__((target("avx2"))) __m256i dominate(const Word* adjacency, int n, __m256i sets) {
  __m256i colored = sets;
  for (int v = 0; v < n; ++v) {
    const __m256i probe = _mm256_set1_epi64x(static_cast<long long>(bit(v)));
    const __m256i row = _mm256_set1_epi64x(static_cast<long long>(adjacency[v]));
    colored = _mm256_or_si256(colored, _mm256_and_si256(row, lanes_holding(sets, probe)));
  }
  return colored;
}

__attribute__((target("avx2"))) __m256i force(const Word* adjacency, int n, __m256i colored) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i full = _mm256_set1_epi64x(static_cast<long long>(full_mask(n)));
  for (;;) {
    const __m256i before = colored;
    for (int v = 0; v < n; ++v) {
      const __m256i probe = _mm256_set1_epi64x(static_cast<long long>(bit(v)));
      const __m256i row = _mm256_set1_epi64x(static_cast<long long>(adjacency[v]));
      const __m256i active = lanes_holding(colored, probe);
      const __m256i uncolored = _mm256_andnot_si256(colored, row);
      const __m256i single =
          _mm256_cmpeq_epi64(_mm256_and_si256(uncolored, _mm256_sub_epi64(uncolored, one)), zero);
      const __m256i empty = _mm256_cmpeq_epi64(uncolored, zero);
      const __m256i fire = _mm256_andnot_si256(empty, _mm256_and_si256(active, single));
      colored = _mm256_or_si256(colored, _mm256_and_si256(uncolored, fire));
    }
    const __m256i done = _mm256_cmpeq_epi64(colored, full);
    if (_mm256_movemask_epi8(done) == -1) return colored;
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi64(colored, before)) == -1) return colored;
  }
}

__attribute__((target("avx2"))) void observe_avx2(const Word* adjacency, int n, Observation mode, const Word* sets,
                                                  Word* out, std::size_t count) {
  const Word padding = full_mask(n);
  for (std::size_t base = 0; base < count; base += kLanes) {
    alignas(32) Word lane_in[kLanes];
    alignas(32) Word lane_out[kLanes];
    const std::size_t used = count - base < kLanes ? count - base : kLanes;
    for (std::size_t i = 0; i < kLanes; ++i) lane_in[i] = i < used ? sets[base + i] : padding;
    __m256i state = _mm256_load_si256(reinterpret_cast<const __m256i*>(lane_in));
    switch (mode) {
      case Observation::power_domination: state = force(adjacency, n, dominate(adjacency, n, state)); break;
      case Observation::zero_forcing: state = force(adjacency, n, state); break;
      case Observation::domination: state = dominate(adjacency, n, state); break;
    }
    _mm256_store_si256(reinterpret_cast<__m256i*>(lane_out), state);
    for (std::size_t i = 0; i < used; ++i) out[base + i] = lane_out[i];
  }
}

}  // namespace

void observe(const Word* adjacency, int n, Observation mode, const Word* sets, Word* out, std::size_t count) {
  observe_avx2(adjacency, n, mode, sets, out, count);
}

#else

void observe(const Word* adjacency, int n, Observation mode, const Word* sets, Word* out, std::size_t count) {
  scalar::observe(adjacency, n, mode, sets, out, count);
}

#endif

}  // namespace pdpoly::kernels::avx2
