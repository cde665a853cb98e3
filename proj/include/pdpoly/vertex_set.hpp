#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pdpoly {

/// Largest graph order the one-word vertex sets can represent.
inline constexpr int kMaxVertices = 64;

using Word = std::uint64_t;

constexpr Word bit(int v) noexcept { return Word{1} << v; }

constexpr Word full_mask(int n) noexcept {
  return n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
}

/// A subset of {0, ..., width-1} stored as a single machine word.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr VertexSet(int width, Word bits) noexcept : width_(width), bits_(bits & full_mask(width)) {}
  VertexSet(int width, std::initializer_list<int> members) : width_(width) {
    for (int v : members) bits_ |= bit(v);
    bits_ &= full_mask(width);
  }

  static constexpr VertexSet empty(int width) noexcept { return {width, 0}; }
  static constexpr VertexSet all(int width) noexcept { return {width, full_mask(width)}; }

  constexpr int width() const noexcept { return width_; }
  constexpr Word bits() const noexcept { return bits_; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool none() const noexcept { return bits_ == 0; }
  constexpr bool is_full() const noexcept { return bits_ == full_mask(width_); }
  constexpr bool contains(int v) const noexcept { return (bits_ >> v) & 1U; }
  constexpr bool is_subset_of(VertexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const noexcept { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(int v) const noexcept { return {width_, bits_ | bit(v)}; }
  constexpr VertexSet without(int v) const noexcept { return {width_, bits_ & ~bit(v)}; }
  constexpr VertexSet complement() const noexcept { return {width_, ~bits_}; }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Word rest = bits_; rest != 0; rest &= rest - 1) out.push_back(std::countr_zero(rest));
    return out;
  }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) noexcept { return {a.width_, a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) noexcept { return {a.width_, a.bits_ & b.bits_}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) noexcept { return {a.width_, a.bits_ & ~b.bits_}; }
  friend constexpr bool operator==(VertexSet, VertexSet) noexcept = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) noexcept { return a.bits_ <=> b.bits_; }

 private:
  int width_ = 0;
  Word bits_ = 0;
};

/// Gosper's hack: next larger word with the same popcount.
constexpr Word next_same_popcount(Word x) noexcept {
  const Word c = x & (~x + 1);
  const Word r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace pdpoly
