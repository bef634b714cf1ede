#include "nlie/induce.hpp"

#include <stdexcept>
#include <utility>

namespace nlie {

namespace {

bool is_zero_element(const Element& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void require_tau(const NLieAlgebra& a, const TraceMap& tau) {
  if (static_cast<int>(tau.coeffs.size()) != a.dim())
    throw std::invalid_argument("trace map length does not match dimension");
}

/// Direct derivation test on structure constants:
/// f([e_K]) = sum_k [e_{k_1},...,f(e_{k_i}),...,e_{k_n}] for all keys.
bool is_derivation(const NLieAlgebra& a, const Matrix& f) {
  if (f.rows() != a.dim() || f.cols() != a.dim())
    throw std::invalid_argument("derivation matrix shape mismatch");
  for (const MultiIndex& key : increasing_tuples(a.dim(), a.arity())) {
    Element lhs = f.apply(a.bracket_key(key));
    Element rhs = a.zero();
    for (int i = 0; i < a.arity(); ++i) {
      std::vector<Element> args;
      args.reserve(static_cast<std::size_t>(a.arity()));
      for (int j = 0; j < a.arity(); ++j)
        args.push_back(j == i ? f.column(key[j]) : a.basis_element(key[j]));
      detail::axpy(rhs, Rational(1), a.bracket(std::span<const Element>(args)));
    }
    if (lhs != rhs) return false;
  }
  return true;
}

}  // namespace

Rational TraceMap::apply(const Element& v) const {
  if (v.size() != coeffs.size())
    throw std::invalid_argument("TraceMap: element length mismatch");
  Rational acc;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!coeffs[i].is_zero() && !v[i].is_zero()) acc += coeffs[i] * v[i];
  return acc;
}

Subspace trace_space(const NLieAlgebra& a) {
  std::vector<Vec> rows;
  rows.reserve(a.sc().size());
  for (const auto& [key, value] : a.sc()) rows.push_back(value);
  if (rows.empty()) return Subspace::full(a.dim());
  return nullspace(Matrix::from_rows(rows));
}

bool is_trace(const NLieAlgebra& a, const TraceMap& tau) {
  require_tau(a, tau);
  for (const auto& [key, value] : a.sc())
    if (!tau.apply(value).is_zero()) return false;
  return true;
}

NLieAlgebra induce(const NLieAlgebra& a, const TraceMap& tau) {
  require_tau(a, tau);
  if (!is_trace(a, tau))
    throw std::invalid_argument("induce: the functional is not a trace");
  NLieAlgebra out(a.arity() + 1, a.dim());
  for (const MultiIndex& key : increasing_tuples(a.dim(), a.arity() + 1)) {
    // signed omission sum; omitting from a sorted tuple keeps it sorted
    Element value = a.zero();
    for (int m = 0; m < key.size(); ++m) {
      const Rational t = tau.coeffs[static_cast<std::size_t>(key[m])];
      if (t.is_zero()) continue;
      detail::axpy(value, m % 2 == 0 ? t : -t, a.bracket_key(key.erased(m)));
    }
    if (!is_zero_element(value)) out.set_bracket(key.indices(), std::move(value));
  }
  for (const auto& [key, value] : out.sc())
    if (!tau.apply(value).is_zero())
      throw std::invalid_argument("induce: functional is not a trace of the result");
  if (!check_fundamental_identity(out).empty())
    throw std::invalid_argument(
        "induce: result violates the fundamental identity "
        "(input bracket is not n-Lie)");
  return out;
}

TraceMap compose_trace_derivation(const NLieAlgebra& a, const TraceMap& tau,
                                  const Matrix& f) {
  require_tau(a, tau);
  if (!is_derivation(a, f))
    throw std::invalid_argument(
        "compose_trace_derivation: matrix is not a derivation");
  // (tau o f)_j = sum_i tau_i f_{ij}
  Vec out(static_cast<std::size_t>(a.dim()));
  for (int j = 0; j < a.dim(); ++j) {
    Rational acc;
    for (int i = 0; i < a.dim(); ++i)
      if (!tau.coeffs[static_cast<std::size_t>(i)].is_zero())
        acc += tau.coeffs[static_cast<std::size_t>(i)] * f.at(i, j);
    out[static_cast<std::size_t>(j)] = acc;
  }
  return TraceMap{std::move(out)};
}

std::optional<Element> find_unit(const NLieAlgebra& a, const TraceMap& tau) {
  require_tau(a, tau);
  if (!is_trace(a, tau))
    throw std::invalid_argument("find_unit: the functional is not a trace");
  const int d = a.dim();
  const int n = a.arity();
  const auto tuples = increasing_tuples(d, n);
  // Left-hand side with u = e_j, stacked over all tuples:
  //   tau(u) [e_T] + sum_i (-1)^i tau(e_{t_i}) [u, e_{t_1},...,^e_{t_i},...]
  std::vector<Vec> columns(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    Vec col;
    col.reserve(tuples.size() * static_cast<std::size_t>(d));
    for (const MultiIndex& t : tuples) {
      Element lhs = a.zero();
      detail::axpy(lhs, tau.coeffs[static_cast<std::size_t>(j)],
                   a.bracket_key(t));
      for (int i = 0; i < n; ++i) {
        const Rational ti = tau.coeffs[static_cast<std::size_t>(t[i])];
        if (ti.is_zero()) continue;
        std::vector<int> args{j};
        for (int k = 0; k < n; ++k)
          if (k != i) args.push_back(t[k]);
        detail::axpy(lhs, i % 2 == 0 ? -ti : ti, a.bracket_indices(args));
      }
      col.insert(col.end(), lhs.begin(), lhs.end());
    }
    columns[static_cast<std::size_t>(j)] = std::move(col);
  }
  Vec rhs;
  rhs.reserve(tuples.size() * static_cast<std::size_t>(d));
  for (const MultiIndex& t : tuples) {
    Element v = a.bracket_key(t);
    rhs.insert(rhs.end(), v.begin(), v.end());
  }
  return solve(Matrix::from_columns(columns), rhs);
}

}  // namespace nlie
