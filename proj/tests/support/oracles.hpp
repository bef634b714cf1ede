#pragma once

/*
 * Independent reference implementations and deterministic random data for
 * the test suite.  Nothing in here shares algorithmic code with the library:
 * rank is recomputed from minors and determinants are expanded recursively,
 * so library results are checked against genuinely separate machinery.
 */

#include "nlie/matrix.hpp"
#include "nlie/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace testsupport {

/// Deterministic RNG for property tests; every test fixes its own seed.
class TestRng {
public:
  explicit TestRng(std::uint64_t seed) : m_engine(seed) {}

  int int_in(int lo, int hi) {  // inclusive bounds
    return std::uniform_int_distribution<int>(lo, hi)(m_engine);
  }

  /// Small rational with numerator in [-num_range, num_range] and
  /// denominator in {1, 1, 2, 3} (biased towards integers).
  nlie::Rational rational(int num_range = 4) {
    static const long dens[] = {1, 1, 2, 3};
    return nlie::Rational(int_in(-num_range, num_range),
                          dens[int_in(0, 3)]);
  }

  nlie::Vec vec(int len, int num_range = 4) {
    nlie::Vec v(len);
    for (auto& x : v) x = rational(num_range);
    return v;
  }

  nlie::Matrix matrix(int rows, int cols, int num_range = 4) {
    nlie::Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rational(num_range);
    return m;
  }

private:
  std::mt19937_64 m_engine;
};

/// Determinant by recursive Laplace expansion along the first row.
inline nlie::Rational oracle_det(const nlie::Matrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("oracle_det: not square");
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  nlie::Rational det;
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j).is_zero()) continue;
    nlie::Matrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(r - 1, cc++) = m.at(r, c);
      }
    }
    nlie::Rational term = m.at(0, j) * oracle_det(minor);
    if (j % 2 == 1) term = -term;
    det += term;
  }
  return det;
}

/// Rank as the size of the largest square submatrix with nonzero
/// determinant, found by exhaustive enumeration of row/column subsets.
inline int oracle_rank_minors(const nlie::Matrix& m) {
  const int r = m.rows(), c = m.cols();
  const int kmax = r < c ? r : c;
  for (int k = kmax; k >= 1; --k) {
    std::vector<int> rowsel(k), colsel(k);
    // iterate strictly increasing k-subsets of rows and of columns
    for (int i = 0; i < k; ++i) rowsel[i] = i;
    while (true) {
      for (int i = 0; i < k; ++i) colsel[i] = i;
      while (true) {
        nlie::Matrix sub(k, k);
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j)
            sub.at(i, j) = m.at(rowsel[i], colsel[j]);
        if (!oracle_det(sub).is_zero()) return k;
        int t = k - 1;
        while (t >= 0 && colsel[t] == c - k + t) --t;
        if (t < 0) break;
        ++colsel[t];
        for (int s = t + 1; s < k; ++s) colsel[s] = colsel[s - 1] + 1;
      }
      int t = k - 1;
      while (t >= 0 && rowsel[t] == r - k + t) --t;
      if (t < 0) break;
      ++rowsel[t];
      for (int s = t + 1; s < k; ++s) rowsel[s] = rowsel[s - 1] + 1;
    }
  }
  return 0;
}

}  // namespace testsupport
