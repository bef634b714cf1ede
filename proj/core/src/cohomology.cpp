#include "nlie/cohomology.hpp"

#include <stdexcept>
#include <utility>

namespace nlie {

namespace {

bool vec_zero(const Vec& v) {
  for (const Rational& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Rational dot(const Vec& a, const Vec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void check_map_shape(const NLieAlgebra& a, const AdjCochain1& f,
                     const char* where) {
  if (f.rows() != a.dim() || f.cols() != a.dim())
    throw std::invalid_argument(std::string(where) +
                                ": map shape does not match the algebra");
}

void check_adj2(const NLieAlgebra& a, const AdjCochain2& psi,
                const char* where) {
  for (const auto& [key, value] : psi) {
    if (key.size() != a.arity() ||
        (key.size() > 0 && key[key.size() - 1] >= a.dim()) ||
        static_cast<int>(value.size()) != a.dim())
      throw std::invalid_argument(std::string(where) +
                                  ": cochain key or value shape mismatch");
  }
}

void check_scal2(const NLieAlgebra& a, const ScalCochain2& omega,
                 const char* where) {
  for (const auto& [key, value] : omega) {
    (void)value;
    if (key.size() != a.arity() ||
        (key.size() > 0 && key[key.size() - 1] >= a.dim()))
      throw std::invalid_argument(std::string(where) +
                                  ": cochain key shape mismatch");
  }
}

void check_covector(const NLieAlgebra& a, const ScalCochain1& alpha,
                    const char* where) {
  if (static_cast<int>(alpha.size()) != a.dim())
    throw std::invalid_argument(std::string(where) +
                                ": covector length does not match");
}

Element eval_adj2(const NLieAlgebra& a, const AdjCochain2& psi,
                  std::span<const Element> args) {
  return eval_skew_table(psi, args, a.zero());
}

Rational eval_scal2(const ScalCochain2& omega, std::span<const Element> args) {
  return eval_skew_table(omega, args, Rational());
}

std::vector<Element> basis_elements(const NLieAlgebra& a, const MultiIndex& t) {
  std::vector<Element> out;
  out.reserve(t.size());
  for (int i : t.indices()) out.push_back(a.basis_element(i));
  return out;
}

/// Odometer over all ordered n-tuples of basis indices.
bool next_tuple(std::vector<int>& y, int d) {
  for (std::size_t k = 0; k < y.size(); ++k) {
    if (++y[k] < d) return true;
    y[k] = 0;
  }
  return false;
}

}  // namespace

bool all_zero(const AdjCochain3& values) {
  for (const auto& [key, v] : values) {
    (void)key;
    if (!vec_zero(v)) return false;
  }
  return true;
}

bool all_zero(const ScalCochain3& values) {
  for (const auto& [key, v] : values) {
    (void)key;
    if (!v.is_zero()) return false;
  }
  return true;
}

AdjCochain2 d1_adjoint(const NLieAlgebra& a, const AdjCochain1& f) {
  check_map_shape(a, f, "d1_adjoint");
  const int n = a.arity();
  const int d = a.dim();
  AdjCochain2 out;
  for (const MultiIndex& key : increasing_tuples(d, n)) {
    // -f([key]) plus the bracket with f applied in each slot
    Element v = a.zero();
    detail::axpy(v, Rational(-1), f.apply(a.bracket_key(key)));
    for (int slot = 0; slot < n; ++slot) {
      std::vector<Element> args = basis_elements(a, key);
      args[static_cast<std::size_t>(slot)] = f.column(key[slot]);
      detail::axpy(v, Rational(1), a.bracket(args));
    }
    if (!vec_zero(v)) out.emplace(key, std::move(v));
  }
  return out;
}

bool is_derivation(const NLieAlgebra& a, const AdjCochain1& f) {
  return d1_adjoint(a, f).empty();
}

AdjCochain3 d2_adjoint(const NLieAlgebra& a, const AdjCochain2& psi) {
  check_adj2(a, psi, "d2_adjoint");
  const int d = a.dim();
  const auto tuples = increasing_tuples(d, a.arity() - 1);
  AdjCochain3 out;
  for (const MultiIndex& xt : tuples) {
    FundamentalObject fx{basis_elements(a, xt)};
    for (const MultiIndex& yt : tuples) {
      FundamentalObject fy{basis_elements(a, yt)};
      FOSum xy = fo_product(a, fx, fy);
      for (int z = 0; z < d; ++z) {
        Element ez = a.basis_element(z);
        Element v = a.zero();

        // -psi(X.Y, z)
        for (const FOSum::Term& term : xy.terms) {
          std::vector<Element> args = term.factors;
          args.push_back(ez);
          detail::axpy(v, -term.coeff, eval_adj2(a, psi, args));
        }
        // -psi(Y, X.z) and +psi(X, Y.z)
        {
          std::vector<Element> args = fy.factors;
          args.push_back(fo_action(a, fx, ez));
          detail::axpy(v, Rational(-1), eval_adj2(a, psi, args));
        }
        {
          std::vector<Element> args = fx.factors;
          args.push_back(fo_action(a, fy, ez));
          detail::axpy(v, Rational(1), eval_adj2(a, psi, args));
        }
        // +X.psi(Y,z) - Y.psi(X,z)
        {
          std::vector<Element> args = fy.factors;
          args.push_back(ez);
          detail::axpy(v, Rational(1), fo_action(a, fx, eval_adj2(a, psi, args)));
        }
        {
          std::vector<Element> args = fx.factors;
          args.push_back(ez);
          detail::axpy(v, Rational(-1), fo_action(a, fy, eval_adj2(a, psi, args)));
        }
        // -(psi(X,.).Y).z = -sum_i [y_1,...,psi(X,y_i),...,y_{n-1},z]
        for (std::size_t i = 0; i < fy.factors.size(); ++i) {
          std::vector<Element> inner = fx.factors;
          inner.push_back(fy.factors[i]);
          Element pxy = eval_adj2(a, psi, inner);
          std::vector<Element> args = fy.factors;
          args[i] = std::move(pxy);
          args.push_back(ez);
          detail::axpy(v, Rational(-1), a.bracket(args));
        }

        out.emplace(CoboundaryGridKey{xt, yt, z}, std::move(v));
      }
    }
  }
  return out;
}

ScalCochain2 d1_scalar(const NLieAlgebra& a, const ScalCochain1& alpha) {
  check_covector(a, alpha, "d1_scalar");
  ScalCochain2 out;
  for (const auto& [key, value] : a.sc()) {
    Rational v = -dot(alpha, value);
    if (!v.is_zero()) out.emplace(key, std::move(v));
  }
  return out;
}

ScalCochain3 d2_scalar(const NLieAlgebra& a, const ScalCochain2& omega) {
  check_scal2(a, omega, "d2_scalar");
  const int d = a.dim();
  const auto tuples = increasing_tuples(d, a.arity() - 1);
  ScalCochain3 out;
  for (const MultiIndex& xt : tuples) {
    FundamentalObject fx{basis_elements(a, xt)};
    for (const MultiIndex& yt : tuples) {
      FundamentalObject fy{basis_elements(a, yt)};
      FOSum xy = fo_product(a, fx, fy);
      for (int z = 0; z < d; ++z) {
        Element ez = a.basis_element(z);
        Rational v;

        for (const FOSum::Term& term : xy.terms) {
          std::vector<Element> args = term.factors;
          args.push_back(ez);
          v -= term.coeff * eval_scal2(omega, args);
        }
        {
          std::vector<Element> args = fy.factors;
          args.push_back(fo_action(a, fx, ez));
          v -= eval_scal2(omega, args);
        }
        {
          std::vector<Element> args = fx.factors;
          args.push_back(fo_action(a, fy, ez));
          v += eval_scal2(omega, args);
        }

        out.emplace(CoboundaryGridKey{xt, yt, z}, std::move(v));
      }
    }
  }
  return out;
}

std::vector<MultiIndex> cochain2_keys(const NLieAlgebra& a) {
  return increasing_tuples(a.dim(), a.arity());
}

Vec adj1_to_vec(const AdjCochain1& f) {
  Vec v(static_cast<std::size_t>(f.rows()) * static_cast<std::size_t>(f.cols()));
  for (int i = 0; i < f.rows(); ++i)
    for (int j = 0; j < f.cols(); ++j)
      v[static_cast<std::size_t>(i * f.cols() + j)] = f.at(i, j);
  return v;
}

AdjCochain1 vec_to_adj1(int dim, const Vec& v) {
  if (static_cast<int>(v.size()) != dim * dim)
    throw std::invalid_argument("vec_to_adj1: length is not dim*dim");
  Matrix f(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      f.at(i, j) = v[static_cast<std::size_t>(i * dim + j)];
  return f;
}

Vec adj2_to_vec(const NLieAlgebra& a, const AdjCochain2& psi) {
  check_adj2(a, psi, "adj2_to_vec");
  const auto keys = cochain2_keys(a);
  const int d = a.dim();
  Vec v(keys.size() * static_cast<std::size_t>(d));
  for (std::size_t k = 0; k < keys.size(); ++k) {
    auto it = psi.find(keys[k]);
    if (it == psi.end()) continue;
    for (int i = 0; i < d; ++i)
      v[k * static_cast<std::size_t>(d) + static_cast<std::size_t>(i)] =
          it->second[static_cast<std::size_t>(i)];
  }
  return v;
}

AdjCochain2 vec_to_adj2(const NLieAlgebra& a, const Vec& v) {
  const auto keys = cochain2_keys(a);
  const int d = a.dim();
  if (v.size() != keys.size() * static_cast<std::size_t>(d))
    throw std::invalid_argument("vec_to_adj2: length mismatch");
  AdjCochain2 out;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    Element value(v.begin() + static_cast<std::ptrdiff_t>(k * static_cast<std::size_t>(d)),
                  v.begin() + static_cast<std::ptrdiff_t>((k + 1) * static_cast<std::size_t>(d)));
    if (!vec_zero(value)) out.emplace(keys[k], std::move(value));
  }
  return out;
}

Vec scal2_to_vec(const NLieAlgebra& a, const ScalCochain2& omega) {
  check_scal2(a, omega, "scal2_to_vec");
  const auto keys = cochain2_keys(a);
  Vec v(keys.size());
  for (std::size_t k = 0; k < keys.size(); ++k) {
    auto it = omega.find(keys[k]);
    if (it != omega.end()) v[k] = it->second;
  }
  return v;
}

ScalCochain2 vec_to_scal2(const NLieAlgebra& a, const Vec& v) {
  const auto keys = cochain2_keys(a);
  if (v.size() != keys.size())
    throw std::invalid_argument("vec_to_scal2: length mismatch");
  ScalCochain2 out;
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (!v[k].is_zero()) out.emplace(keys[k], v[k]);
  return out;
}

Subspace derivation_space(const NLieAlgebra& a) {
  const int d = a.dim();
  const auto keys = cochain2_keys(a);
  Matrix m(static_cast<int>(keys.size()) * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      Matrix unit(d, d);
      unit.at(i, j) = Rational(1);
      AdjCochain2 image = d1_adjoint(a, unit);
      for (std::size_t k = 0; k < keys.size(); ++k) {
        auto it = image.find(keys[k]);
        if (it == image.end()) continue;
        for (int c = 0; c < d; ++c)
          m.at(static_cast<int>(k) * d + c, i * d + j) =
              it->second[static_cast<std::size_t>(c)];
      }
    }
  return nullspace(m);
}

Subspace inner_derivation_space(const NLieAlgebra& a) {
  std::vector<Vec> gens;
  for (const MultiIndex& t : increasing_tuples(a.dim(), a.arity() - 1))
    gens.push_back(adj1_to_vec(ad_matrix(a, FundamentalObject{basis_elements(a, t)})));
  return Subspace::from_generators(a.dim() * a.dim(), gens);
}

int h1_adjoint_dim(const NLieAlgebra& a) {
  return derivation_space(a).dim() - inner_derivation_space(a).dim();
}

Subspace scalar_1cocycles(const NLieAlgebra& a) {
  const int d = a.dim();
  std::vector<Vec> rows;
  for (const auto& [key, value] : a.sc()) {
    (void)key;
    Vec row(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) row[static_cast<std::size_t>(j)] = -value[static_cast<std::size_t>(j)];
    rows.push_back(std::move(row));
  }
  if (rows.empty()) return Subspace::full(d);
  return nullspace(Matrix::from_rows(rows));
}

namespace {

void require_degree(int degree, const char* where) {
  if (degree != 1 && degree != 2)
    throw std::invalid_argument(std::string(where) + ": degree must be 1 or 2");
}

/// Operator matrix of d2 in the fixed vectorizations (adjoint flavor).
Matrix d2_adjoint_operator(const NLieAlgebra& a) {
  const int d = a.dim();
  const auto keys = cochain2_keys(a);
  const auto tuples = increasing_tuples(d, a.arity() - 1);
  const int grid = static_cast<int>(tuples.size() * tuples.size()) * d;
  Matrix m(grid * d, static_cast<int>(keys.size()) * d);
  for (std::size_t k = 0; k < keys.size(); ++k)
    for (int c = 0; c < d; ++c) {
      AdjCochain2 unit;
      Element value = a.zero();
      value[static_cast<std::size_t>(c)] = Rational(1);
      unit.emplace(keys[k], std::move(value));
      AdjCochain3 image = d2_adjoint(a, unit);
      int g = 0;
      for (const auto& [gkey, v] : image) {
        (void)gkey;
        for (int i = 0; i < d; ++i)
          m.at(g * d + i, static_cast<int>(k) * d + c) = v[static_cast<std::size_t>(i)];
        ++g;
      }
    }
  return m;
}

Matrix d2_scalar_operator(const NLieAlgebra& a) {
  const int d = a.dim();
  const auto keys = cochain2_keys(a);
  const auto tuples = increasing_tuples(d, a.arity() - 1);
  const int grid = static_cast<int>(tuples.size() * tuples.size()) * d;
  Matrix m(grid, static_cast<int>(keys.size()));
  for (std::size_t k = 0; k < keys.size(); ++k) {
    ScalCochain2 unit;
    unit.emplace(keys[k], Rational(1));
    ScalCochain3 image = d2_scalar(a, unit);
    int g = 0;
    for (const auto& [gkey, v] : image) {
      (void)gkey;
      m.at(g, static_cast<int>(k)) = v;
      ++g;
    }
  }
  return m;
}

}  // namespace

Subspace cocycle_space(const NLieAlgebra& a, int degree, Coefficients coeffs) {
  require_degree(degree, "cocycle_space");
  if (degree == 1)
    return coeffs == Coefficients::adjoint ? derivation_space(a)
                                           : scalar_1cocycles(a);
  return coeffs == Coefficients::adjoint ? nullspace(d2_adjoint_operator(a))
                                         : nullspace(d2_scalar_operator(a));
}

Subspace coboundary_space(const NLieAlgebra& a, int degree,
                          Coefficients coeffs) {
  require_degree(degree, "coboundary_space");
  const int d = a.dim();
  if (degree == 1) {
    if (coeffs == Coefficients::adjoint) return inner_derivation_space(a);
    return Subspace(d);  // no coboundaries below degree 1
  }
  if (coeffs == Coefficients::adjoint) {
    std::vector<Vec> gens;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        Matrix unit(d, d);
        unit.at(i, j) = Rational(1);
        gens.push_back(adj2_to_vec(a, d1_adjoint(a, unit)));
      }
    return Subspace::from_generators(
        static_cast<int>(cochain2_keys(a).size()) * d, gens);
  }
  std::vector<Vec> gens;
  for (int j = 0; j < d; ++j) {
    ScalCochain1 unit(static_cast<std::size_t>(d));
    unit[static_cast<std::size_t>(j)] = Rational(1);
    gens.push_back(scal2_to_vec(a, d1_scalar(a, unit)));
  }
  return Subspace::from_generators(static_cast<int>(cochain2_keys(a).size()),
                                   gens);
}

int cohomology_dim(const NLieAlgebra& a, int degree, Coefficients coeffs) {
  return cocycle_space(a, degree, coeffs).dim() -
         coboundary_space(a, degree, coeffs).dim();
}

bool is_derivation_of_induced(const NLieAlgebra& a, const TraceMap& tau,
                              const AdjCochain1& f) {
  check_map_shape(a, f, "is_derivation_of_induced");
  if (!is_trace(a, tau))
    throw std::invalid_argument("is_derivation_of_induced: not a trace");
  if (!is_derivation(a, f))
    throw std::invalid_argument(
        "is_derivation_of_induced: map is not a derivation of the base");
  // criterion: the bracket induced by the composite functional vanishes
  TraceMap sigma = compose_trace_derivation(a, tau, f);
  const bool by_criterion = induce(a, sigma).sc().empty();
  const bool by_direct = is_derivation(induce(a, tau), f);
  if (by_criterion != by_direct)
    throw std::logic_error(
        "is_derivation_of_induced: criterion disagrees with the direct test");
  return by_criterion;
}

namespace {

/// Common walker for the two transfer sums: for every increasing n-tuple X,
/// ordered n-tuple Y over the basis and basis index z, accumulates
///   sum_{i != k} (-1)^{k+n} tau(y_i) tau(y_k) TERM(i, k)
/// where TERM plugs either [X] into the cochain (first sum) or the cochain
/// value at X into the bracket (second sum), replacing y_i and dropping y_k.
bool adj_transfer_sum_vanishes(const NLieAlgebra& a, const TraceMap& tau,
                               const AdjCochain2& phi, bool bracket_into_cochain) {
  const int d = a.dim();
  const int n = a.arity();
  bool any_alive = false;
  for (const Rational& t : tau.coeffs)
    if (!t.is_zero()) any_alive = true;
  if (!any_alive) return true;

  for (const MultiIndex& xt : increasing_tuples(d, n)) {
    Element plug = bracket_into_cochain ? a.bracket_key(xt) : a.zero();
    if (!bracket_into_cochain) {
      auto it = phi.find(xt);
      if (it != phi.end()) plug = it->second;
    }
    if (vec_zero(plug)) continue;

    std::vector<int> y(static_cast<std::size_t>(n), 0);
    do {
      for (int z = 0; z < d; ++z) {
        Element sum = a.zero();
        for (int i = 0; i < n; ++i) {
          const Rational& ti = tau.coeffs[static_cast<std::size_t>(y[static_cast<std::size_t>(i)])];
          if (ti.is_zero()) continue;
          for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const Rational& tk = tau.coeffs[static_cast<std::size_t>(y[static_cast<std::size_t>(k)])];
            if (tk.is_zero()) continue;
            Rational coeff = ti * tk;
            if ((k + n) % 2 != 0) coeff = -coeff;
            std::vector<Element> args;
            args.reserve(static_cast<std::size_t>(n));
            for (int s = 0; s < n; ++s) {
              if (s == k) continue;
              args.push_back(s == i ? plug
                                    : a.basis_element(y[static_cast<std::size_t>(s)]));
            }
            args.push_back(a.basis_element(z));
            if (bracket_into_cochain)
              detail::axpy(sum, coeff, eval_adj2(a, phi, args));
            else
              detail::axpy(sum, coeff, a.bracket(args));
          }
        }
        if (!vec_zero(sum)) return false;
      }
    } while (next_tuple(y, d));
  }
  return true;
}

bool scal_transfer_sum_vanishes(const NLieAlgebra& a, const TraceMap& tau,
                                const ScalCochain2& omega) {
  const int d = a.dim();
  const int n = a.arity();

  for (const MultiIndex& xt : increasing_tuples(d, n)) {
    Element plug = a.bracket_key(xt);
    if (vec_zero(plug)) continue;

    std::vector<int> y(static_cast<std::size_t>(n), 0);
    do {
      for (int z = 0; z < d; ++z) {
        Rational sum;
        for (int i = 0; i < n; ++i) {
          const Rational& ti = tau.coeffs[static_cast<std::size_t>(y[static_cast<std::size_t>(i)])];
          if (ti.is_zero()) continue;
          for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            const Rational& tk = tau.coeffs[static_cast<std::size_t>(y[static_cast<std::size_t>(k)])];
            if (tk.is_zero()) continue;
            Rational coeff = ti * tk;
            if ((k + n) % 2 != 0) coeff = -coeff;
            std::vector<Element> args;
            args.reserve(static_cast<std::size_t>(n));
            for (int s = 0; s < n; ++s) {
              if (s == k) continue;
              args.push_back(s == i ? plug
                                    : a.basis_element(y[static_cast<std::size_t>(s)]));
            }
            args.push_back(a.basis_element(z));
            sum += coeff * eval_scal2(omega, args);
          }
        }
        if (!sum.is_zero()) return false;
      }
    } while (next_tuple(y, d));
  }
  return true;
}

bool tau_kills_cochain(const TraceMap& tau, const AdjCochain2& phi) {
  for (const auto& [key, value] : phi) {
    (void)key;
    if (!tau.apply(value).is_zero()) return false;
  }
  return true;
}

template <class Cochain>
Cochain signed_omission_transfer(const NLieAlgebra& a, const TraceMap& tau,
                                 const Cochain& base) {
  Cochain out;
  for (const MultiIndex& key : increasing_tuples(a.dim(), a.arity() + 1)) {
    typename Cochain::mapped_type v{};
    if constexpr (std::is_same_v<typename Cochain::mapped_type, Element>)
      v = a.zero();
    bool nonzero = false;
    for (int m = 0; m < key.size(); ++m) {
      const Rational& t = tau.coeffs[static_cast<std::size_t>(key[m])];
      if (t.is_zero()) continue;
      auto it = base.find(key.erased(m));
      if (it == base.end()) continue;
      Rational coeff = (m % 2 == 0) ? t : -t;
      detail::axpy(v, coeff, it->second);
      nonzero = true;
    }
    if constexpr (std::is_same_v<typename Cochain::mapped_type, Element>) {
      if (nonzero && !vec_zero(v)) out.emplace(key, std::move(v));
    } else {
      if (nonzero && !v.is_zero()) out.emplace(key, std::move(v));
    }
  }
  return out;
}

}  // namespace

bool check_Z2ad_conditions(const NLieAlgebra& a, const TraceMap& tau,
                           const AdjCochain2& phi) {
  check_adj2(a, phi, "check_Z2ad_conditions");
  if (!is_trace(a, tau))
    throw std::invalid_argument("check_Z2ad_conditions: not a trace");
  return adj_transfer_sum_vanishes(a, tau, phi, /*bracket_into_cochain=*/true) &&
         adj_transfer_sum_vanishes(a, tau, phi, /*bracket_into_cochain=*/false) &&
         tau_kills_cochain(tau, phi);
}

AdjCochain2 induce_cochain2_adjoint(const NLieAlgebra& a, const TraceMap& tau,
                                    const AdjCochain2& phi) {
  check_adj2(a, phi, "induce_cochain2_adjoint");
  if (!is_trace(a, tau))
    throw std::invalid_argument("induce_cochain2_adjoint: not a trace");
  if (!all_zero(d2_adjoint(a, phi)))
    throw std::invalid_argument(
        "induce_cochain2_adjoint: input is not a 2-cocycle");
  if (!adj_transfer_sum_vanishes(a, tau, phi, /*bracket_into_cochain=*/true))
    throw std::invalid_argument(
        "induce_cochain2_adjoint: first transfer sum does not vanish");
  if (!adj_transfer_sum_vanishes(a, tau, phi, /*bracket_into_cochain=*/false))
    throw std::invalid_argument(
        "induce_cochain2_adjoint: second transfer sum does not vanish");
  if (!tau_kills_cochain(tau, phi))
    throw std::invalid_argument(
        "induce_cochain2_adjoint: tau does not kill the cochain values");

  AdjCochain2 out = signed_omission_transfer(a, tau, phi);
  if (!all_zero(d2_adjoint(induce(a, tau), out)))
    throw std::logic_error(
        "induce_cochain2_adjoint: transfer failed to produce a 2-cocycle");
  return out;
}

bool check_Z2scalar_condition(const NLieAlgebra& a, const TraceMap& tau,
                              const ScalCochain2& omega) {
  check_scal2(a, omega, "check_Z2scalar_condition");
  if (!is_trace(a, tau))
    throw std::invalid_argument("check_Z2scalar_condition: not a trace");
  return scal_transfer_sum_vanishes(a, tau, omega);
}

ScalCochain2 induce_cochain2_scalar(const NLieAlgebra& a, const TraceMap& tau,
                                    const ScalCochain2& omega) {
  check_scal2(a, omega, "induce_cochain2_scalar");
  if (!is_trace(a, tau))
    throw std::invalid_argument("induce_cochain2_scalar: not a trace");
  if (!all_zero(d2_scalar(a, omega)))
    throw std::invalid_argument(
        "induce_cochain2_scalar: input is not a 2-cocycle");
  if (!scal_transfer_sum_vanishes(a, tau, omega))
    throw std::invalid_argument(
        "induce_cochain2_scalar: transfer sum does not vanish");

  ScalCochain2 out = signed_omission_transfer(a, tau, omega);
  if (!all_zero(d2_scalar(induce(a, tau), out)))
    throw std::logic_error(
        "induce_cochain2_scalar: transfer failed to produce a 2-cocycle");
  return out;
}

bool d1_tau_compatibility(const NLieAlgebra& a, const TraceMap& tau,
                          const ScalCochain1& alpha) {
  check_covector(a, alpha, "d1_tau_compatibility");
  NLieAlgebra ind = induce(a, tau);
  for (const MultiIndex& key : increasing_tuples(a.dim(), a.arity() + 1)) {
    Rational lhs = -dot(alpha, ind.bracket_key(key));
    Rational rhs;
    for (int m = 0; m < key.size(); ++m) {
      const Rational& t = tau.coeffs[static_cast<std::size_t>(key[m])];
      if (t.is_zero()) continue;
      Rational base = -dot(alpha, a.bracket_key(key.erased(m)));
      rhs += (m % 2 == 0) ? t * base : -t * base;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

bool same_cohomology_class(const NLieAlgebra& a, const AdjCochain1& f1,
                           const AdjCochain1& f2) {
  if (!is_derivation(a, f1) || !is_derivation(a, f2))
    throw std::invalid_argument(
        "same_cohomology_class: arguments must be derivations");
  return inner_derivation_space(a).contains(adj1_to_vec(f2 - f1));
}

bool same_cohomology_class(const NLieAlgebra& a, const ScalCochain1& a1,
                           const ScalCochain1& a2) {
  if (!d1_scalar(a, a1).empty() || !d1_scalar(a, a2).empty())
    throw std::invalid_argument(
        "same_cohomology_class: arguments must be 1-cocycles");
  // no coboundaries in degree 1: classes coincide only on equality
  return a1 == a2;
}

bool same_cohomology_class(const NLieAlgebra& a, const AdjCochain2& psi1,
                           const AdjCochain2& psi2) {
  if (!all_zero(d2_adjoint(a, psi1)) || !all_zero(d2_adjoint(a, psi2)))
    throw std::invalid_argument(
        "same_cohomology_class: arguments must be 2-cocycles");
  Vec diff = adj2_to_vec(a, psi2);
  Vec v1 = adj2_to_vec(a, psi1);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= v1[i];
  return coboundary_space(a, 2, Coefficients::adjoint).contains(diff);
}

bool same_cohomology_class(const NLieAlgebra& a, const ScalCochain2& w1,
                           const ScalCochain2& w2) {
  if (!all_zero(d2_scalar(a, w1)) || !all_zero(d2_scalar(a, w2)))
    throw std::invalid_argument(
        "same_cohomology_class: arguments must be 2-cocycles");
  Vec diff = scal2_to_vec(a, w2);
  Vec v1 = scal2_to_vec(a, w1);
  for (std::size_t i = 0; i < diff.size(); ++i) diff[i] -= v1[i];
  return coboundary_space(a, 2, Coefficients::scalar).contains(diff);
}

}  // namespace nlie
