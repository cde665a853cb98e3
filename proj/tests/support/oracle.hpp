#pragma once

// Reference implementations used only by the tests. They share no code with
// the library: adjacency is a matrix of bools, sets are std::set<int>, and
// every rule is applied literally.

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Set = std::set<int>;

inline Matrix make_matrix(int n, const std::vector<std::pair<int, int>>& edges) {
  Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (auto [u, v] : edges) {
    m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  return m;
}

inline int order(const Matrix& m) { return static_cast<int>(m.size()); }

inline bool adjacent(const Matrix& m, int u, int v) {
  return m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
}

inline Set closed_nbhd(const Matrix& m, const Set& s) {
  Set out = s;
  for (int v : s)
    for (int u = 0; u < order(m); ++u)
      if (adjacent(m, u, v)) out.insert(u);
  return out;
}

// Rule 2 until nothing changes.
inline Set force(const Matrix& m, Set colored) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : Set(colored)) {
      int uncolored = -1;
      int count = 0;
      for (int u = 0; u < order(m); ++u)
        if (adjacent(m, u, v) && !colored.count(u)) {
          ++count;
          uncolored = u;
        }
      if (count == 1) {
        colored.insert(uncolored);
        changed = true;
      }
    }
  }
  return colored;
}

enum class Rule { power, zero_forcing, domination };

inline bool observes_all(const Matrix& m, const Set& s, Rule rule) {
  if (s.empty()) return false;
  Set result;
  switch (rule) {
    case Rule::power: result = force(m, closed_nbhd(m, s)); break;
    case Rule::zero_forcing: result = force(m, s); break;
    case Rule::domination: result = closed_nbhd(m, s); break;
  }
  return static_cast<int>(result.size()) == order(m);
}

inline Set set_of_mask(std::uint64_t mask, int n) {
  Set s;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U) s.insert(v);
  return s;
}

// Coefficient i counts the i-subsets satisfying the rule.
inline std::vector<long long> polynomial(const Matrix& m, Rule rule) {
  const int n = order(m);
  std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const Set s = set_of_mask(mask, n);
    if (observes_all(m, s, rule)) ++counts[s.size()];
  }
  return counts;
}

inline long long choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Product of coefficient vectors.
inline std::vector<long long> multiply(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// graph6 decoding written directly from the format description.
inline Matrix decode_graph6(const std::string& text) {
  std::vector<int> bytes;
  for (char c : text) bytes.push_back(static_cast<unsigned char>(c) - 63);
  std::size_t pos = 0;
  int n = 0;
  if (bytes[0] == 63) {
    n = (bytes[1] << 12) | (bytes[2] << 6) | bytes[3];
    pos = 4;
  } else {
    n = bytes[0];
    pos = 1;
  }
  Matrix m(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  std::vector<int> bits;
  for (std::size_t i = pos; i < bytes.size(); ++i)
    for (int b = 5; b >= 0; --b) bits.push_back((bytes[i] >> b) & 1);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k)
      if (bits[k]) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = true;
  return m;
}

inline bool connected_within(const Matrix& m, const Set& vertices) {
  if (vertices.empty()) return false;
  Set seen{*vertices.begin()};
  std::vector<int> stack{*vertices.begin()};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int u : vertices)
      if (adjacent(m, u, v) && seen.insert(u).second) stack.push_back(u);
  }
  return seen.size() == vertices.size();
}

// Tries every n/3-subset as the core: each other vertex must have exactly one
// core neighbor, every core vertex must receive exactly two such vertices,
// those two may only see their owner and each other, and the core must be
// connected.
inline bool in_family_F(const Matrix& m) {
  const int n = order(m);
  if (n % 3 != 0 || n == 0) return false;
  const int core_size = n / 3;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (__builtin_popcountll(mask) != core_size) continue;
    const Set core = set_of_mask(mask, n);
    if (!connected_within(m, core)) continue;
    std::vector<std::vector<int>> owned(static_cast<std::size_t>(n));
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (core.count(v)) continue;
      int owner = -1;
      int count = 0;
      for (int c : core)
        if (adjacent(m, v, c)) {
          owner = c;
          ++count;
        }
      if (count != 1) ok = false;
      else owned[static_cast<std::size_t>(owner)].push_back(v);
    }
    for (int c : core) {
      if (!ok) break;
      const auto& pair = owned[static_cast<std::size_t>(c)];
      if (pair.size() != 2) {
        ok = false;
        break;
      }
      for (int v : pair)
        for (int u = 0; u < n; ++u)
          if (adjacent(m, u, v) && u != c && u != pair[0] && u != pair[1]) ok = false;
    }
    if (ok) return true;
  }
  return false;
}

}  // namespace oracle
