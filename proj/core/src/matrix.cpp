#include "nlie/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace nlie {

Matrix::Matrix(int rows, int cols) : m_rows(rows), m_cols(cols) {
  if (rows < 0 || cols < 0)
    throw std::invalid_argument("Matrix: negative dimension");
  m_data.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
                Rational());
}

std::size_t Matrix::index(int i, int j) const {
  if (i < 0 || i >= m_rows || j < 0 || j >= m_cols)
    throw std::out_of_range("Matrix: index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(m_cols) +
         static_cast<std::size_t>(j);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::vector<Vec> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  Matrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c)
      throw std::invalid_argument("Matrix: ragged rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& columns) {
  const int c = static_cast<int>(columns.size());
  const int r = c == 0 ? 0 : static_cast<int>(columns[0].size());
  Matrix m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(columns[j].size()) != r)
      throw std::invalid_argument("Matrix: ragged columns");
    for (int i = 0; i < r; ++i) m.at(i, j) = columns[j][i];
  }
  return m;
}

Vec Matrix::row(int i) const {
  Vec v(m_cols);
  for (int j = 0; j < m_cols; ++j) v[j] = at(i, j);
  return v;
}

Vec Matrix::column(int j) const {
  Vec v(m_rows);
  for (int i = 0; i < m_rows; ++i) v[i] = at(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(m_cols, m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (m_cols != o.m_rows)
    throw std::invalid_argument("Matrix: product shape mismatch");
  Matrix p(m_rows, o.m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int k = 0; k < m_cols; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.m_cols; ++j) {
        const Rational& b = o.at(k, j);
        if (!b.is_zero()) p.at(i, j) += a * b;
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (m_rows != o.m_rows || m_cols != o.m_cols)
    throw std::invalid_argument("Matrix: sum shape mismatch");
  Matrix s(m_rows, m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) s.at(i, j) = at(i, j) + o.at(i, j);
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (m_rows != o.m_rows || m_cols != o.m_cols)
    throw std::invalid_argument("Matrix: difference shape mismatch");
  Matrix s(m_rows, m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) s.at(i, j) = at(i, j) - o.at(i, j);
  return s;
}

Matrix Matrix::operator*(const Rational& s) const {
  Matrix m(m_rows, m_cols);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) m.at(i, j) = at(i, j) * s;
  return m;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != m_cols)
    throw std::invalid_argument("Matrix: apply shape mismatch");
  Vec out(m_rows);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) out[i] += at(i, j) * v[j];
  return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
  if (m_cols != o.m_cols && m_rows != 0 && o.m_rows != 0)
    throw std::invalid_argument("Matrix: vstack shape mismatch");
  const int cols = m_rows == 0 ? o.m_cols : m_cols;
  Matrix s(m_rows + o.m_rows, cols);
  for (int i = 0; i < m_rows; ++i)
    for (int j = 0; j < m_cols; ++j) s.at(i, j) = at(i, j);
  for (int i = 0; i < o.m_rows; ++i)
    for (int j = 0; j < o.m_cols; ++j) s.at(m_rows + i, j) = o.at(i, j);
  return s;
}

Matrix Matrix::hstack(const Matrix& o) const {
  if (m_rows != o.m_rows)
    throw std::invalid_argument("Matrix: hstack shape mismatch");
  Matrix s(m_rows, m_cols + o.m_cols);
  for (int i = 0; i < m_rows; ++i) {
    for (int j = 0; j < m_cols; ++j) s.at(i, j) = at(i, j);
    for (int j = 0; j < o.m_cols; ++j) s.at(i, m_cols + j) = o.at(i, j);
  }
  return s;
}

bool Matrix::is_zero() const {
  for (const Rational& r : m_data)
    if (!r.is_zero()) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  RrefResult result{m, {}};
  Matrix& a = result.matrix;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pivot = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a.at(i, c).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(pivot, j), a.at(r, j));
    const Rational inv = a.at(r, c).inverse();
    for (int j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Rational f = a.at(i, c);
      for (int j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    result.pivot_cols.push_back(c);
    ++r;
  }
  return result;
}

int rank(const Matrix& m) {
  return static_cast<int>(rref(m).pivot_cols.size());
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows())
    throw std::invalid_argument("solve: rhs size mismatch");
  Matrix aug = a.hstack(Matrix::from_columns({b}));
  RrefResult red = rref(aug);
  Vec x(a.cols());
  for (std::size_t k = 0; k < red.pivot_cols.size(); ++k) {
    const int p = red.pivot_cols[k];
    if (p == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[p] = red.matrix.at(static_cast<int>(k), a.cols());
  }
  return x;
}

std::vector<Vec> nullspace_vectors(const Matrix& m) {
  RrefResult red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int p : red.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
      v[red.pivot_cols[k]] = -red.matrix.at(static_cast<int>(k), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace nlie
