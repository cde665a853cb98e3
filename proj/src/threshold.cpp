#include "pdpoly/threshold.hpp"

#include "pdpoly/error.hpp"

namespace pdpoly {

BlockString normalize(std::string_view bits) {
  if (bits.size() < 2) throw Error(ErrorKind::TooShort, "threshold strings need at least two symbols");
  for (char c : bits)
    if (c != '0' && c != '1') throw Error(ErrorKind::FormatError, "threshold strings hold only 0 and 1");
  BlockString out;
  out.bits = std::string(bits);
  out.bits[0] = out.bits[1];
  for (char c : out.bits) {
    const int symbol = c - '0';
    if (out.blocks.empty() || out.blocks.back().symbol != symbol) out.blocks.push_back({symbol, 0});
    ++out.blocks.back().length;
  }
  out.normalized = true;
  return out;
}

Graph threshold_graph(const BlockString& b) {
  std::vector<Edge> edges;
  for (int j = 1; j < b.size(); ++j)
    if (b.bits[static_cast<std::size_t>(j)] == '1')
      for (int i = 0; i < j; ++i) edges.emplace_back(i, j);
  return Graph::from_edge_list(b.size(), edges);
}

namespace {

void require_connected_form(const BlockString& b) {
  if (!b.normalized) throw Error(ErrorKind::DomainError, "threshold string must be normalized first");
  if (!b.ends_with_one_block())
    throw Error(ErrorKind::NotConnectedForm, "threshold string '" + b.bits + "' ends in a 0-block");
}

}  // namespace

bool is_threshold_pds(const BlockString& b, VertexSet s) {
  require_connected_form(b);
  const Graph g = threshold_graph(b);
  Word ones = 0;
  std::vector<int> block_of(static_cast<std::size_t>(b.size()));
  std::vector<Word> block_mask(b.blocks.size(), 0);
  int position = 0;
  for (std::size_t k = 0; k < b.blocks.size(); ++k)
    for (int t = 0; t < b.blocks[k].length; ++t, ++position) {
      block_of[static_cast<std::size_t>(position)] = static_cast<int>(k);
      block_mask[k] |= bit(position);
      if (b.blocks[k].symbol == 1) ones |= bit(position);
    }

  for (int v : s.members()) {
    if ((ones & ~g.closed_neighbors(v)) != 0) continue;
    bool later_zero_blocks_ok = true;
    for (std::size_t k = static_cast<std::size_t>(block_of[static_cast<std::size_t>(v)]); k < b.blocks.size(); ++k) {
      if (b.blocks[k].symbol != 0) continue;
      if (std::popcount(block_mask[k] & ~s.bits()) > 1) later_zero_blocks_ok = false;
    }
    if (later_zero_blocks_ok) return true;
  }
  return false;
}

namespace {

// Row t of Pascal's triangle, advanced one row at a time.
class PascalRow {
 public:
  explicit PascalRow(int max_n, std::uint64_t& ops) : row_(static_cast<std::size_t>(max_n) + 1, 0), ops_(ops) {
    row_[0] = 1;
  }

  int n() const noexcept { return n_; }
  const BigInt& operator[](int j) const { return row_[static_cast<std::size_t>(j)]; }

  void advance_to(int target) {
    for (; n_ < target; ++n_) {
      for (int j = n_ + 1; j >= 1; --j) row_[static_cast<std::size_t>(j)] += row_[static_cast<std::size_t>(j - 1)];
      ops_ += static_cast<std::uint64_t>(n_ + 1);
    }
  }

 private:
  std::vector<BigInt> row_;
  int n_ = 0;
  std::uint64_t& ops_;
};

}  // namespace

ThresholdRun threshold_pd_run(const BlockString& b, const PrefixObserver& observer) {
  require_connected_form(b);
  const int n = b.size();
  const auto& blocks = b.blocks;
  const int omega = static_cast<int>(blocks.size());
  auto length = [&](int i) { return blocks[static_cast<std::size_t>(i - 1)].length; };  // 1-based

  ThresholdRun run;
  std::vector<BigInt> a(static_cast<std::size_t>(n) + 1, 0);  // a[j] = coefficient of x^j
  auto at = [&](int j) -> BigInt& { return a[static_cast<std::size_t>(j)]; };
  PascalRow pascal(n, run.operations);
  auto emit = [&](int prefix_blocks) {
    if (observer) observer(prefix_blocks, IntPolynomial(a));
  };

  int i = 0;
  if (blocks.front().symbol == 1) {
    pascal.advance_to(length(1));
    for (int j = 1; j <= length(1); ++j, ++run.operations) at(j) = pascal[j];
    emit(1);
    i = 2;
  } else {
    const int b1 = length(1);
    const int b2 = length(2);
    at(b1) = 1;
    ++run.operations;
    emit(1);
    at(b1 - 1) = b1;
    ++run.operations;
    pascal.advance_to(b1);
    for (int j = 1; j <= b1; ++j, ++run.operations) at(j) -= pascal[j];
    pascal.advance_to(b1 + b2);
    for (int j = 1; j <= b1 + b2; ++j, ++run.operations) at(j) += pascal[j];
    emit(2);
    i = 3;
  }

  int s = 0;
  for (int k = 1; k < i; ++k) s += length(k);
  while (i <= omega - 1) {
    // 0-block B_i: multiply by x^{b_i}.
    const int zeros = length(i);
    for (int j = s + zeros; j >= zeros + 1; --j, ++run.operations) at(j) = at(j - zeros);
    for (int j = 1; j <= zeros; ++j, ++run.operations) at(j) = 0;
    s += zeros;
    emit(i);
    ++i;

    // 1-block B_i: add (b_{i-1}/x) P + (x+1)^{s+b_i} - (x+1)^s.
    const int ones = length(i);
    for (int j = 1; j <= s - 1; ++j, ++run.operations) at(j) += at(j + 1) * zeros;
    pascal.advance_to(s);
    for (int j = 1; j <= s; ++j, ++run.operations) at(j) -= pascal[j];
    pascal.advance_to(s + ones);
    for (int j = 1; j <= s + ones; ++j, ++run.operations) at(j) += pascal[j];
    s += ones;
    emit(i);
    ++i;
  }
  run.poly = IntPolynomial(std::move(a));
  return run;
}

IntPolynomial threshold_pd_polynomial(const BlockString& b) { return threshold_pd_run(b).poly; }

IntPolynomial threshold_pd_polynomial_any(std::string_view bits) {
  BlockString b = normalize(bits);
  if (b.ends_with_one_block()) return threshold_pd_polynomial(b);
  const int trailing = b.blocks.back().length;
  if (b.blocks.size() == 1) return IntPolynomial::monomial(trailing);
  const BlockString connected = normalize(std::string_view(b.bits).substr(0, b.bits.size() - static_cast<std::size_t>(trailing)));
  return threshold_pd_polynomial(connected).shift(trailing);
}

}  // namespace pdpoly
