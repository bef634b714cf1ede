#pragma once

/*
 * Rational subspaces in a canonical basis.
 *
 * A Subspace stores the reduced-row-echelon basis of its span, so equal
 * subspaces compare bit-for-bit regardless of which generators produced
 * them.  All set operations (sum, intersection, membership) re-canonicalize.
 */

#include "nlie/matrix.hpp"

#include <vector>

namespace nlie {

/// Linear subspace of K^ambient, held as the canonical RREF basis (rows in
/// pivot order).  Value semantics; equality is structural and, thanks to the
/// canonical form, coincides with equality of subspaces.
class Subspace {
public:
  /// The zero subspace of K^ambient.
  explicit Subspace(int ambient_dim);

  /// Span of the given vectors (each of length ambient_dim).
  static Subspace from_generators(int ambient_dim, const std::vector<Vec>& gens);
  /// All of K^ambient.
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return m_ambient; }
  int dim() const { return static_cast<int>(m_basis.size()); }
  bool is_zero() const { return m_basis.empty(); }

  /// Canonical basis rows (reduced row echelon form, pivot order).
  const std::vector<Vec>& basis() const { return m_basis; }

  /// Membership of a single vector.
  bool contains(const Vec& v) const;
  /// Containment of a whole subspace.
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.m_ambient == b.m_ambient && a.m_basis == b.m_basis;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

private:
  int m_ambient = 0;
  std::vector<Vec> m_basis;
};

/// Sum U + W (smallest subspace containing both).
Subspace sum(const Subspace& u, const Subspace& w);

/// Intersection of two subspaces of the same ambient space.
Subspace intersect(const Subspace& u, const Subspace& w);

/// Kernel of m as a canonical subspace of K^cols.
Subspace nullspace(const Matrix& m);

}  // namespace nlie
