#include "nlie/subspace.hpp"

#include <stdexcept>
#include <utility>

namespace nlie {

Subspace::Subspace(int ambient_dim) : m_ambient(ambient_dim) {
  if (ambient_dim < 0)
    throw std::invalid_argument("Subspace: negative ambient dimension");
}

Subspace Subspace::from_generators(int ambient_dim,
                                   const std::vector<Vec>& gens) {
  Subspace s(ambient_dim);
  if (gens.empty()) return s;
  for (const Vec& g : gens)
    if (static_cast<int>(g.size()) != ambient_dim)
      throw std::invalid_argument("Subspace: generator length mismatch");
  RrefResult red = rref(Matrix::from_rows(gens));
  for (std::size_t k = 0; k < red.pivot_cols.size(); ++k)
    s.m_basis.push_back(red.matrix.row(static_cast<int>(k)));
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  for (int i = 0; i < ambient_dim; ++i) {
    Vec e(ambient_dim);
    e[i] = 1;
    s.m_basis.push_back(std::move(e));
  }
  return s;
}

bool Subspace::contains(const Vec& v) const {
  if (static_cast<int>(v.size()) != m_ambient)
    throw std::invalid_argument("Subspace: vector length mismatch");
  // Reduce v against the echelon basis; membership iff the residue is zero.
  Vec r = v;
  for (const Vec& row : m_basis) {
    int pivot = 0;
    while (pivot < m_ambient && row[pivot].is_zero()) ++pivot;
    if (pivot == m_ambient || r[pivot].is_zero()) continue;
    const Rational f = r[pivot];
    for (int j = pivot; j < m_ambient; ++j) r[j] -= f * row[j];
  }
  for (const Rational& x : r)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (m_ambient != other.m_ambient)
    throw std::invalid_argument("Subspace: ambient dimension mismatch");
  for (const Vec& v : other.m_basis)
    if (!contains(v)) return false;
  return true;
}

Subspace sum(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("sum: ambient dimension mismatch");
  std::vector<Vec> gens = u.basis();
  gens.insert(gens.end(), w.basis().begin(), w.basis().end());
  return Subspace::from_generators(u.ambient_dim(), gens);
}

Subspace intersect(const Subspace& u, const Subspace& w) {
  if (u.ambient_dim() != w.ambient_dim())
    throw std::invalid_argument("intersect: ambient dimension mismatch");
  const int n = u.ambient_dim();
  if (u.is_zero() || w.is_zero()) return Subspace(n);
  // x lies in both iff x = a^T Bu = b^T Bw; solve Bu^T a - Bw^T b = 0 and
  // map the a-part back through Bu.
  const int ku = u.dim();
  const int kw = w.dim();
  Matrix bu_t = Matrix::from_rows(u.basis()).transpose();        // n x ku
  Matrix bw_t = Matrix::from_rows(w.basis()).transpose() * Rational(-1);
  Matrix sys = bu_t.hstack(bw_t);                                // n x (ku+kw)
  std::vector<Vec> gens;
  for (const Vec& ab : nullspace_vectors(sys)) {
    Vec x(n);
    for (int k = 0; k < ku; ++k) {
      if (ab[k].is_zero()) continue;
      for (int j = 0; j < n; ++j) x[j] += ab[k] * u.basis()[k][j];
    }
    gens.push_back(std::move(x));
  }
  return Subspace::from_generators(n, gens);
}

Subspace nullspace(const Matrix& m) {
  return Subspace::from_generators(m.cols(), nullspace_vectors(m));
}

}  // namespace nlie
