#include "nlie/algebra.hpp"

#include <stdexcept>
#include <utility>

namespace nlie {

namespace {

bool is_zero_element(const Element& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

NLieAlgebra::NLieAlgebra(int arity, int dim) : m_arity(arity), m_dim(dim) {
  if (arity < 2) throw std::invalid_argument("NLieAlgebra: arity must be >= 2");
  if (dim < 0) throw std::invalid_argument("NLieAlgebra: negative dimension");
}

Element NLieAlgebra::basis_element(int i) const {
  if (i < 0 || i >= m_dim)
    throw std::invalid_argument("NLieAlgebra: basis index out of range");
  Element e = zero();
  e[static_cast<std::size_t>(i)] = 1;
  return e;
}

void NLieAlgebra::set_bracket(const std::vector<int>& args, Element value) {
  if (static_cast<int>(args.size()) != m_arity)
    throw std::invalid_argument("set_bracket: wrong number of arguments");
  for (int i : args)
    if (i < 0 || i >= m_dim)
      throw std::invalid_argument("set_bracket: basis index out of range");
  if (static_cast<int>(value.size()) != m_dim)
    throw std::invalid_argument("set_bracket: value length mismatch");
  NormalizedArgs norm = normalize_args(args);
  if (norm.sign == 0) {
    if (!is_zero_element(value))
      throw std::invalid_argument(
          "set_bracket: repeated index requires a zero value");
    return;
  }
  if (norm.sign < 0)
    for (Rational& x : value) x = -x;
  if (is_zero_element(value))
    m_sc.erase(norm.tuple);
  else
    m_sc[norm.tuple] = std::move(value);
}

Element NLieAlgebra::bracket_key(const MultiIndex& key) const {
  auto it = m_sc.find(key);
  return it == m_sc.end() ? zero() : it->second;
}

Element NLieAlgebra::bracket_indices(const std::vector<int>& args) const {
  NormalizedArgs norm = normalize_args(args);
  if (norm.sign == 0) return zero();
  Element v = bracket_key(norm.tuple);
  if (norm.sign < 0)
    for (Rational& x : v) x = -x;
  return v;
}

Element NLieAlgebra::bracket(std::span<const Element> args) const {
  if (static_cast<int>(args.size()) != m_arity)
    throw std::invalid_argument("bracket: wrong number of arguments");
  for (const Element& v : args)
    if (static_cast<int>(v.size()) != m_dim)
      throw std::invalid_argument("bracket: element length mismatch");
  return eval_skew_table(m_sc, args, zero());
}

Element NLieAlgebra::bracket(std::initializer_list<Element> args) const {
  std::vector<Element> v(args);
  return bracket(std::span<const Element>(v));
}

std::vector<FiViolation> check_fundamental_identity(const NLieAlgebra& a) {
  std::vector<FiViolation> violations;
  const int n = a.arity();
  const int d = a.dim();
  const auto xs = increasing_tuples(d, n - 1);
  const auto ys = increasing_tuples(d, n);
  for (const MultiIndex& x : xs) {
    for (const MultiIndex& y : ys) {
      // LHS: [x_1,...,x_{n-1}, [y_1,...,y_n]]
      Element lhs;
      {
        std::vector<Element> outer;
        outer.reserve(static_cast<std::size_t>(n));
        for (int xi : x.indices()) outer.push_back(a.basis_element(xi));
        outer.push_back(a.bracket_key(y));
        lhs = a.bracket(std::span<const Element>(outer));
      }
      // RHS: sum_i [y_1,...,[x, y_i],...,y_n]
      Element rhs = a.zero();
      for (int i = 0; i < n; ++i) {
        std::vector<int> xy = x.indices();
        xy.push_back(y[i]);
        Element replaced = a.bracket_indices(xy);
        if (is_zero_element(replaced)) continue;
        std::vector<Element> outer;
        outer.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j)
          outer.push_back(j == i ? replaced : a.basis_element(y[j]));
        Element term = a.bracket(std::span<const Element>(outer));
        detail::axpy(rhs, Rational(1), term);
      }
      Element residual = lhs;
      for (int j = 0; j < d; ++j)
        residual[static_cast<std::size_t>(j)] -= rhs[static_cast<std::size_t>(j)];
      if (!is_zero_element(residual))
        violations.push_back({x.indices(), y.indices(), std::move(residual)});
    }
  }
  return violations;
}

Element fo_action(const NLieAlgebra& a, const FundamentalObject& x,
                  const Element& z) {
  if (static_cast<int>(x.factors.size()) != a.arity() - 1)
    throw std::invalid_argument("fo_action: wrong number of factors");
  std::vector<Element> args = x.factors;
  args.push_back(z);
  return a.bracket(std::span<const Element>(args));
}

Element fo_action(const NLieAlgebra& a, const FOSum& x, const Element& z) {
  Element acc = a.zero();
  for (const FOSum::Term& t : x.terms) {
    Element v = fo_action(a, FundamentalObject{t.factors}, z);
    detail::axpy(acc, t.coeff, v);
  }
  return acc;
}

FOSum fo_product(const NLieAlgebra& a, const FundamentalObject& x,
                 const FundamentalObject& y) {
  const std::size_t m = static_cast<std::size_t>(a.arity() - 1);
  if (x.factors.size() != m || y.factors.size() != m)
    throw std::invalid_argument("fo_product: wrong number of factors");
  FOSum out;
  for (std::size_t i = 0; i < m; ++i) {
    Element acted = fo_action(a, x, y.factors[i]);
    if (is_zero_element(acted)) continue;
    FOSum::Term term{Rational(1), y.factors};
    term.factors[i] = std::move(acted);
    out.terms.push_back(std::move(term));
  }
  return out;
}

Matrix ad_matrix(const NLieAlgebra& a, const FundamentalObject& x) {
  std::vector<Vec> cols;
  cols.reserve(static_cast<std::size_t>(a.dim()));
  for (int j = 0; j < a.dim(); ++j)
    cols.push_back(fo_action(a, x, a.basis_element(j)));
  return Matrix::from_columns(cols);
}

Matrix ad_matrix(const NLieAlgebra& a, const FOSum& x) {
  Matrix acc(a.dim(), a.dim());
  for (const FOSum::Term& t : x.terms)
    acc = acc + ad_matrix(a, FundamentalObject{t.factors}) * t.coeff;
  return acc;
}

NLieAlgebra fix_element(const NLieAlgebra& a, const Element& x) {
  if (a.arity() < 3)
    throw std::invalid_argument("fix_element: arity must be >= 3");
  if (static_cast<int>(x.size()) != a.dim())
    throw std::invalid_argument("fix_element: element length mismatch");
  NLieAlgebra out(a.arity() - 1, a.dim());
  for (const MultiIndex& key : increasing_tuples(a.dim(), a.arity() - 1)) {
    std::vector<Element> args;
    args.reserve(static_cast<std::size_t>(a.arity()));
    args.push_back(x);
    for (int i : key.indices()) args.push_back(a.basis_element(i));
    Element value = a.bracket(std::span<const Element>(args));
    if (!is_zero_element(value)) out.set_bracket(key.indices(), std::move(value));
  }
  return out;
}

}  // namespace nlie
