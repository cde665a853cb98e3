#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "pdpoly/graph.hpp"
#include "pdpoly/polynomial.hpp"

namespace pdpoly {

struct Block {
  int symbol = 0;  // 0 or 1
  int length = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

/// Binary string generating a threshold graph, split into maximal runs. After
/// normalize() the first symbol equals the second, so the first block has at
/// least two symbols; this does not change the generated graph.
struct BlockString {
  std::string bits;
  std::vector<Block> blocks;
  bool normalized = false;

  int size() const noexcept { return static_cast<int>(bits.size()); }
  bool ends_with_one_block() const noexcept { return !blocks.empty() && blocks.back().symbol == 1; }
};

/// Throws TooShort below two symbols and FormatError for anything but 0/1.
BlockString normalize(std::string_view bits);

/// Vertex i is symbol i; TooLarge beyond 64 symbols. for i < j the edge ij exists iff symbol j is 1.
Graph threshold_graph(const BlockString& b);

/// True iff some v in s has every 1-vertex in N[v] and every 0-block at or
/// after v's block has at most one vertex outside s. Requires the last block
/// to be a 1-block (NotConnectedForm otherwise). Limited to 64 symbols.
bool is_threshold_pds(const BlockString& b, VertexSet s);

struct ThresholdRun {
  IntPolynomial poly;
  /// Coefficient writes plus Pascal-row updates.
  std::uint64_t operations = 0;
};

/// Called with (number of leading blocks consumed, P of the threshold graph on
/// those blocks) each time the recurrence completes a prefix.
using PrefixObserver = std::function<void(int, const IntPolynomial&)>;

/// Block recurrence for connected threshold graphs: a 0-block multiplies by
/// x^b, a 1-block after a 0-block of size b' adds (b'/x) P + (x+1)^(s+b) -
/// (x+1)^s. Binomial rows are advanced one Pascal step at a time, so the whole
/// run costs O(n^2) coefficient operations. Requires a normalized string whose
/// last block is a 1-block (NotConnectedForm otherwise).
ThresholdRun threshold_pd_run(const BlockString& b, const PrefixObserver& observer = {});

IntPolynomial threshold_pd_polynomial(const BlockString& b);

/// Accepts any binary string of length >= 2: normalizes, strips a trailing
/// 0-block of length t and multiplies the connected part's polynomial by x^t.
IntPolynomial threshold_pd_polynomial_any(std::string_view bits);

}  // namespace pdpoly
