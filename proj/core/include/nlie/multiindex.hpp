#pragma once

/*
 * Canonical keys for skew multilinear data.
 *
 * A bracket or cochain on an n-ary skew algebra is determined by its values
 * on strictly increasing basis index tuples; MultiIndex is that canonical
 * key, and normalize_args maps an arbitrary argument tuple to its key and
 * permutation sign.
 */

#include <compare>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nlie {

/// Strictly increasing tuple of 0-based basis indices.
class MultiIndex {
public:
  MultiIndex() = default;

  /// Throws std::invalid_argument unless the indices are non-negative and
  /// strictly increasing.
  explicit MultiIndex(std::vector<int> indices) : m_indices(std::move(indices)) {
    for (std::size_t k = 0; k < m_indices.size(); ++k) {
      if (m_indices[k] < 0)
        throw std::invalid_argument("MultiIndex: negative index");
      if (k > 0 && m_indices[k - 1] >= m_indices[k])
        throw std::invalid_argument("MultiIndex: indices not strictly increasing");
    }
  }

  int size() const { return static_cast<int>(m_indices.size()); }
  int operator[](int k) const { return m_indices[static_cast<std::size_t>(k)]; }
  const std::vector<int>& indices() const { return m_indices; }

  /// Tuple with the entry at position k removed (still strictly increasing).
  MultiIndex erased(int k) const {
    std::vector<int> v = m_indices;
    v.erase(v.begin() + k);
    MultiIndex m;
    m.m_indices = std::move(v);  // removal preserves the invariant
    return m;
  }

  /// True if `index` occurs in the tuple.
  bool contains(int index) const {
    for (int i : m_indices)
      if (i == index) return true;
    return false;
  }

  auto operator<=>(const MultiIndex&) const = default;

private:
  std::vector<int> m_indices;
};

/// Result of sorting an argument tuple: the canonical key and the sign of
/// the sorting permutation; sign 0 signals a repeated index (the key is
/// empty in that case).
struct NormalizedArgs {
  MultiIndex tuple;
  int sign = 0;
};

/// Sorts `indices` into a canonical key.  sign is +1/-1 for an even/odd
/// permutation and 0 when an index repeats.
inline NormalizedArgs normalize_args(std::vector<int> indices) {
  int sign = 1;
  // insertion sort, counting swaps; exact and branch-simple for short tuples
  for (std::size_t i = 1; i < indices.size(); ++i) {
    int v = indices[i];
    std::size_t j = i;
    while (j > 0 && indices[j - 1] > v) {
      indices[j] = indices[j - 1];
      sign = -sign;
      --j;
    }
    indices[j] = v;
  }
  for (std::size_t i = 1; i < indices.size(); ++i)
    if (indices[i - 1] == indices[i]) return {MultiIndex{}, 0};
  return {MultiIndex(std::move(indices)), sign};
}

/// All strictly increasing k-tuples over {0, ..., dim-1} in lexicographic
/// order.  k > dim gives an empty list; k == 0 gives the single empty tuple.
inline std::vector<MultiIndex> increasing_tuples(int dim, int k) {
  std::vector<MultiIndex> out;
  if (k < 0 || k > dim) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(MultiIndex(cur));
    int t = k - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == dim - k + t) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int s = t + 1; s < k; ++s)
      cur[static_cast<std::size_t>(s)] = cur[static_cast<std::size_t>(s - 1)] + 1;
  }
  return out;
}

}  // namespace nlie
