#include "nlie/structure.hpp"

#include <stdexcept>
#include <utility>

namespace nlie {

Subspace product_subspace(const NLieAlgebra& a,
                          const std::vector<Subspace>& factors) {
  const int n = a.arity();
  if (static_cast<int>(factors.size()) != n)
    throw std::invalid_argument(
        "product_subspace: need one factor per bracket slot");
  for (const Subspace& s : factors)
    if (s.ambient_dim() != a.dim())
      throw std::invalid_argument(
          "product_subspace: factor ambient dimension mismatch");
  for (const Subspace& s : factors)
    if (s.is_zero()) return Subspace(a.dim());

  // One generator per choice of basis vectors, enumerated odometer-style.
  std::vector<Vec> gens;
  std::vector<std::size_t> pos(static_cast<std::size_t>(n), 0);
  std::vector<Element> args(static_cast<std::size_t>(n));
  while (true) {
    for (std::size_t k = 0; k < args.size(); ++k)
      args[k] = factors[k].basis()[pos[k]];
    Element value = a.bracket(args);
    bool zero = true;
    for (const Rational& c : value)
      if (!c.is_zero()) {
        zero = false;
        break;
      }
    if (!zero) gens.push_back(std::move(value));
    std::size_t k = 0;
    for (; k < args.size(); ++k) {
      if (++pos[k] < factors[k].basis().size()) break;
      pos[k] = 0;
    }
    if (k == args.size()) break;
  }
  return Subspace::from_generators(a.dim(), gens);
}

Subspace derived_subalgebra(const NLieAlgebra& a) {
  return product_subspace(
      a, std::vector<Subspace>(static_cast<std::size_t>(a.arity()),
                               Subspace::full(a.dim())));
}

bool is_subalgebra(const NLieAlgebra& a, const Subspace& s) {
  std::vector<Subspace> factors(static_cast<std::size_t>(a.arity()), s);
  return s.contains(product_subspace(a, factors));
}

bool is_ideal(const NLieAlgebra& a, const Subspace& s) {
  std::vector<Subspace> factors(static_cast<std::size_t>(a.arity()),
                                Subspace::full(a.dim()));
  factors[0] = s;
  return s.contains(product_subspace(a, factors));
}

const Subspace& SeriesReport::term(int p) const {
  if (p < 0) throw std::out_of_range("SeriesReport::term: negative index");
  if (p < static_cast<int>(terms.size()))
    return terms[static_cast<std::size_t>(p)];
  if (!stabilized)
    throw std::out_of_range(
        "SeriesReport::term: index past a non-stabilized chain");
  return terms.back();
}

namespace {

SeriesReport run_series(const NLieAlgebra& a, const Subspace& ideal, int max_p,
                        SeriesReport::Kind kind) {
  if (ideal.ambient_dim() != a.dim())
    throw std::invalid_argument("series: ambient dimension mismatch");
  if (!is_ideal(a, ideal))
    throw std::invalid_argument("series: starting subspace is not an ideal");
  if (max_p < 0) max_p = a.dim() + 1;

  SeriesReport report;
  report.kind = kind;
  report.terms.push_back(ideal);
  if (ideal.is_zero()) {
    report.stabilized = true;
    report.vanishing_index = 0;
    return report;
  }
  while (static_cast<int>(report.terms.size()) <= max_p) {
    const Subspace& prev = report.terms.back();
    std::vector<Subspace> factors(static_cast<std::size_t>(a.arity()),
                                  kind == SeriesReport::Kind::derived ? prev
                                                                      : ideal);
    factors[0] = prev;
    Subspace next = product_subspace(a, factors);
    if (next == prev) {
      report.stabilized = true;
      break;
    }
    report.terms.push_back(std::move(next));
    if (report.terms.back().is_zero()) {
      report.stabilized = true;
      report.vanishing_index = static_cast<int>(report.terms.size()) - 1;
      break;
    }
  }
  return report;
}

}  // namespace

SeriesReport derived_series(const NLieAlgebra& a, const Subspace& ideal,
                            int max_p) {
  return run_series(a, ideal, max_p, SeriesReport::Kind::derived);
}

SeriesReport central_series(const NLieAlgebra& a, const Subspace& ideal,
                            int max_p) {
  return run_series(a, ideal, max_p, SeriesReport::Kind::central);
}

Subspace center(const NLieAlgebra& a) {
  const int d = a.dim();
  std::vector<Matrix> blocks;
  for (const MultiIndex& t : increasing_tuples(d, a.arity() - 1)) {
    // Column j of the block is [e_j, e_{t_1}, ..., e_{t_{n-1}}].
    std::vector<Vec> cols;
    cols.reserve(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
      std::vector<int> args;
      args.reserve(static_cast<std::size_t>(a.arity()));
      args.push_back(j);
      for (int i : t.indices()) args.push_back(i);
      cols.push_back(a.bracket_indices(args));
    }
    Matrix block = Matrix::from_columns(cols);
    if (!block.is_zero()) blocks.push_back(std::move(block));
  }
  if (blocks.empty()) return Subspace::full(d);
  Matrix stacked = blocks.front();
  for (std::size_t i = 1; i < blocks.size(); ++i)
    stacked = stacked.vstack(blocks[i]);
  return nullspace(stacked);
}

std::optional<int> solvability_class(const NLieAlgebra& a) {
  return derived_series(a, Subspace::full(a.dim())).vanishing_index;
}

std::optional<int> nilpotency_class(const NLieAlgebra& a) {
  return central_series(a, Subspace::full(a.dim())).vanishing_index;
}

bool ideal_in_induced(const NLieAlgebra& a, const TraceMap& tau,
                      const Subspace& j) {
  if (j.ambient_dim() != a.dim())
    throw std::invalid_argument("ideal_in_induced: ambient dimension mismatch");
  if (!is_trace(a, tau))
    throw std::invalid_argument("ideal_in_induced: map is not a trace");
  if (!is_ideal(a, j))
    throw std::invalid_argument(
        "ideal_in_induced: subspace is not an ideal of the base algebra");

  const Subspace kernel = nullspace(Matrix::from_rows({tau.coeffs}));
  const bool by_criterion =
      j.contains(derived_subalgebra(a)) || kernel.contains(j);
  const bool by_closure = is_ideal(induce(a, tau), j);
  if (by_criterion != by_closure)
    throw std::logic_error(
        "ideal_in_induced: kernel criterion disagrees with the closure test");
  return by_criterion;
}

}  // namespace nlie
