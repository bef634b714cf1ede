#pragma once

/*
 * n-ary skew algebras with rational structure constants.
 *
 * An NLieAlgebra stores the bracket through its values on strictly
 * increasing basis tuples.  The fundamental identity
 *
 *   [x_1,...,x_{n-1},[y_1,...,y_n]]
 *     = sum_i [y_1,...,[x_1,...,x_{n-1},y_i],...,y_n]
 *
 * is checked, not assumed: check_fundamental_identity reports every failing
 * basis tuple, and an empty report is exactly the n-Lie property.
 *
 * Fundamental objects X = (x_1,...,x_{n-1}) act on elements by
 * X.z = [x_1,...,x_{n-1},z]; their product X.Y (a formal sum of
 * (n-1)-tuples) satisfies the Leibniz rule and ad_{X.Y} = [ad_X, ad_Y].
 */

#include "nlie/matrix.hpp"
#include "nlie/multiindex.hpp"
#include "nlie/rational.hpp"

#include <map>
#include <span>
#include <vector>

namespace nlie {

/// Coordinate vector of an algebra element relative to the basis.
using Element = Vec;

namespace detail {

inline void axpy(Element& acc, const Rational& c, const Element& v) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) acc[i] += c * v[i];
}

inline void axpy(Rational& acc, const Rational& c, const Rational& v) {
  acc += c * v;
}

}  // namespace detail

/// Evaluates a skew multilinear map, given by its table on canonical keys,
/// at arbitrary element arguments: expand each argument over its nonzero
/// coordinates, sort the resulting basis tuple and accumulate
/// sign * product-of-coordinates * table value.  V is Element or Rational.
template <class V>
V eval_skew_table(const std::map<MultiIndex, V>& table,
                  std::span<const Element> args, V zero) {
  V acc = std::move(zero);
  const std::size_t n = args.size();
  std::vector<std::vector<int>> support(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < args[k].size(); ++i)
      if (!args[k][i].is_zero()) support[k].push_back(static_cast<int>(i));
    if (support[k].empty()) return acc;
  }
  std::vector<std::size_t> pos(n, 0);
  std::vector<int> tuple(n);
  while (true) {
    Rational coeff(1);
    for (std::size_t k = 0; k < n; ++k) {
      tuple[k] = support[k][pos[k]];
      coeff *= args[k][static_cast<std::size_t>(tuple[k])];
    }
    NormalizedArgs norm = normalize_args(tuple);
    if (norm.sign != 0) {
      auto it = table.find(norm.tuple);
      if (it != table.end())
        detail::axpy(acc, norm.sign > 0 ? coeff : -coeff, it->second);
    }
    // odometer step over the supports
    std::size_t k = 0;
    for (; k < n; ++k) {
      if (++pos[k] < support[k].size()) break;
      pos[k] = 0;
    }
    if (k == n) break;
  }
  return acc;
}

/// n-ary algebra with skew bracket, presented by structure constants on
/// strictly increasing basis tuples (absent key = zero bracket).  Equality
/// is structural: same arity, same dimension, identical constants.
class NLieAlgebra {
public:
  /// Abelian algebra of the given arity (>= 2) and dimension (>= 0).
  NLieAlgebra(int arity, int dim);

  int arity() const { return m_arity; }
  int dim() const { return m_dim; }

  /// Structure constants on canonical keys; values are nonzero elements.
  const std::map<MultiIndex, Element>& sc() const { return m_sc; }

  /// Sets [e_{args...}] = value.  Args need not be sorted: they are
  /// normalized and the value picks up the permutation sign; repeated
  /// indices require value 0.  A zero value erases the key.
  void set_bracket(const std::vector<int>& args, Element value);

  /// Bracket on a canonical key (zero element if absent).
  Element bracket_key(const MultiIndex& key) const;

  /// Bracket on arbitrary basis indices, with the permutation sign.
  Element bracket_indices(const std::vector<int>& args) const;

  /// Full multilinear bracket; args.size() must equal arity and every
  /// element must have length dim.
  Element bracket(std::span<const Element> args) const;
  Element bracket(std::initializer_list<Element> args) const;

  Element zero() const { return Element(static_cast<std::size_t>(m_dim)); }
  Element basis_element(int i) const;

  friend bool operator==(const NLieAlgebra& a, const NLieAlgebra& b) {
    return a.m_arity == b.m_arity && a.m_dim == b.m_dim && a.m_sc == b.m_sc;
  }
  friend bool operator!=(const NLieAlgebra& a, const NLieAlgebra& b) {
    return !(a == b);
  }

private:
  int m_arity;
  int m_dim;
  std::map<MultiIndex, Element> m_sc;
};

/// One failing instance of the fundamental identity on basis tuples.
struct FiViolation {
  std::vector<int> x_indices;  ///< the n-1 outer indices
  std::vector<int> y_indices;  ///< the n inner indices
  Element residual;            ///< nonzero difference LHS - RHS
};

/// Checks the fundamental identity over all strictly increasing basis
/// tuples (sufficient by multilinearity and skewness).  Empty result iff
/// the bracket is n-Lie.
std::vector<FiViolation> check_fundamental_identity(const NLieAlgebra& a);

/// Fundamental object: an (n-1)-tuple of elements acting by
/// X.z = [x_1,...,x_{n-1},z].
struct FundamentalObject {
  std::vector<Element> factors;
};

/// Formal linear combination of (n-1)-tuples of elements; the product of
/// fundamental objects lives here.
struct FOSum {
  struct Term {
    Rational coeff;
    std::vector<Element> factors;
  };
  std::vector<Term> terms;
};

/// X.z = [x_1,...,x_{n-1},z].
Element fo_action(const NLieAlgebra& a, const FundamentalObject& x,
                  const Element& z);

/// Action extended linearly to formal sums.
Element fo_action(const NLieAlgebra& a, const FOSum& x, const Element& z);

/// X.Y = sum_i (y_1,...,X.y_i,...,y_{n-1}).  Terms whose modified factor is
/// zero are dropped.
FOSum fo_product(const NLieAlgebra& a, const FundamentalObject& x,
                 const FundamentalObject& y);

/// Matrix of z -> X.z in the basis (columns are images of basis elements).
Matrix ad_matrix(const NLieAlgebra& a, const FundamentalObject& x);
Matrix ad_matrix(const NLieAlgebra& a, const FOSum& x);

/// The (n-1)-ary bracket [x, . , ... , .] obtained by fixing a first
/// argument.  Requires arity >= 3.
NLieAlgebra fix_element(const NLieAlgebra& a, const Element& x);

}  // namespace nlie
