#pragma once

/*
 * Dense exact matrices over the rationals, with reduced row echelon form as
 * the single normalizing primitive: rank, solving and nullspace extraction
 * are all phrased through rref so every result is deterministic.
 */

#include "nlie/rational.hpp"

#include <optional>
#include <vector>

namespace nlie {

/// Coordinate vector over the rationals.
using Vec = std::vector<Rational>;

/// Dense row-major matrix of Rational entries.
class Matrix {
public:
  /// Empty 0x0 matrix.
  Matrix() = default;
  /// rows x cols zero matrix.  Dimensions must be non-negative.
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  /// Builds from explicit rows; all rows must have equal length.
  static Matrix from_rows(std::vector<Vec> rows);
  /// Builds from explicit columns; all columns must have equal length.
  static Matrix from_columns(const std::vector<Vec>& columns);

  int rows() const { return m_rows; }
  int cols() const { return m_cols; }

  Rational& at(int i, int j) { return m_data[index(i, j)]; }
  const Rational& at(int i, int j) const { return m_data[index(i, j)]; }

  /// Copy of row i.
  Vec row(int i) const;
  /// Copy of column j.
  Vec column(int j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  /// Matrix-vector product; v.size() must equal cols().
  Vec apply(const Vec& v) const;

  /// Stacks o below this matrix (column counts must agree).
  Matrix vstack(const Matrix& o) const;
  /// Appends the columns of o to the right (row counts must agree).
  Matrix hstack(const Matrix& o) const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.m_rows == b.m_rows && a.m_cols == b.m_cols && a.m_data == b.m_data;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  std::size_t index(int i, int j) const;

  int m_rows = 0;
  int m_cols = 0;
  std::vector<Rational> m_data;
};

/// Reduced row echelon form together with the pivot column indices
/// (strictly increasing, one per nonzero row of the reduced matrix).
struct RrefResult {
  Matrix matrix;
  std::vector<int> pivot_cols;
};

/// Gauss-Jordan elimination with exact pivoting: scan columns left to right,
/// take the first nonzero entry at or below the current row as pivot,
/// normalize it to 1 and clear its column above and below.  Deterministic.
RrefResult rref(const Matrix& m);

/// Number of pivots of rref(m).
int rank(const Matrix& m);

/// A particular solution of a x = b, or nullopt if the system is
/// inconsistent.  The solution returned is the echelon solution with all
/// free variables set to zero (the lexicographically first one when
/// solutions are ordered by pivot coordinates).
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/// Raw nullspace basis of m (one vector per free column, in increasing free
/// column order; the vector for free column f has entry 1 at f).  Use
/// nullspace() from subspace.hpp for the canonicalized subspace.
std::vector<Vec> nullspace_vectors(const Matrix& m);

}  // namespace nlie
