#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "pdpoly/vertex_set.hpp"

namespace pdpoly::kernels {

/// Which color-change rules a batch evaluation applies.
enum class Observation {
  power_domination,  // one domination step, then forcing to a fixed point
  zero_forcing,      // forcing only
  domination,        // domination step only
};

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);
bool isa_supported(Isa isa);

/// Widest supported instruction set, unless PDPOLY_FORCE_SCALAR is set in the
/// environment.
Isa best_isa();

/// For every start set in `sets`, writes the set of vertices colored once the
/// selected rules stop changing anything. `adjacency` holds one open
/// neighborhood word per vertex. All variants produce identical output.
void observe_batch(std::span<const Word> adjacency, Observation mode, std::span<const Word> sets, std::span<Word> out,
                   Isa isa);

inline void observe_batch(std::span<const Word> adjacency, Observation mode, std::span<const Word> sets,
                          std::span<Word> out) {
  observe_batch(adjacency, mode, sets, out, best_isa());
}

/// Raw entry points, one per instruction set; `count` sets in, `count` out.
namespace scalar {
void observe(const Word* adjacency, int n, Observation mode, const Word* sets, Word* out, std::size_t count);
}
namespace avx2 {
void observe(const Word* adjacency, int n, Observation mode, const Word* sets, Word* out, std::size_t count);
}

}  // namespace pdpoly::kernels
