#include "nlie/catalog.hpp"

#include "nlie/cohomology.hpp"
#include "nlie/structure.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace nlie {

namespace {

// ---- bracket-table construction helpers (1-based index language) ----------

/// 1-based inclusive range {lo, ..., hi}; empty when lo > hi.
std::vector<int> seq(int lo, int hi) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i) v.push_back(i);
  return v;
}

std::vector<int> cat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// The range {lo, ..., hi} with the value `omit` removed.
std::vector<int> seq_omit(int lo, int hi, int omit) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i)
    if (i != omit) v.push_back(i);
  return v;
}

/// Sets a bracket given 1-based argument indices and a value expressed as
/// coefficient/1-based-index pairs.
void set1(NLieAlgebra& a, const std::vector<int>& args1,
          const std::vector<std::pair<Rational, int>>& value1) {
  std::vector<int> args;
  args.reserve(args1.size());
  for (int i : args1) args.push_back(i - 1);
  Element v(static_cast<std::size_t>(a.dim()));
  for (const auto& [c, i] : value1) v[static_cast<std::size_t>(i - 1)] += c;
  a.set_bracket(args, std::move(v));
}

using Params = std::vector<Rational>;

void require(bool ok, const char* constraint) {
  if (!ok)
    throw std::invalid_argument(std::string("catalog: parameter violates ") +
                                constraint);
}

/// Entry maker for the common fixed-parameter-count case.
CatalogEntry entry(std::string name, std::string group, int arity, int dim,
                   std::vector<ParameterSlot> slots,
                   std::vector<Params> samples, std::string provenance,
                   std::function<NLieAlgebra(const Params&)> build) {
  CatalogEntry e;
  e.name = std::move(name);
  e.group = std::move(group);
  e.arity = arity;
  e.dim = dim;
  e.parameters = std::move(slots);
  e.min_params = e.parameters.size();
  e.samples = std::move(samples);
  e.provenance = std::move(provenance);
  e.build = std::move(build);
  return e;
}

std::vector<Params> no_params() { return {Params{}}; }

// ---- induced-by table machinery -------------------------------------------

/// All trace functionals of the form sum of c_i * basis_i with coefficients
/// in {-1, 0, 1}, ordered by the number of nonzero coefficients (plain basis
/// vectors first) and deterministically within each size.
std::vector<Vec> trace_candidates(const NLieAlgebra& a) {
  const Subspace ts = trace_space(a);
  const auto& basis = ts.basis();
  const int t = ts.dim();
  std::vector<std::pair<int, Vec>> weighted;
  std::vector<int> coeff(static_cast<std::size_t>(t), 0);
  // odometer over {0, 1, -1}^t, recorded with its nonzero count
  for (;;) {
    int nonzero = 0;
    Vec v(static_cast<std::size_t>(a.dim()));
    for (int i = 0; i < t; ++i) {
      if (coeff[static_cast<std::size_t>(i)] == 0) continue;
      ++nonzero;
      const Rational c(coeff[static_cast<std::size_t>(i)]);
      for (std::size_t j = 0; j < v.size(); ++j)
        v[j] += c * basis[static_cast<std::size_t>(i)][j];
    }
    if (nonzero > 0) weighted.emplace_back(nonzero, std::move(v));
    int k = 0;
    for (; k < t; ++k) {
      int& c = coeff[static_cast<std::size_t>(k)];
      c = (c == 0) ? 1 : (c == 1 ? -1 : 0);
      if (c != 0) break;
    }
    if (k == t) break;
  }
  std::stable_sort(weighted.begin(), weighted.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Vec> out;
  out.reserve(weighted.size());
  for (auto& [w, v] : weighted) out.push_back(std::move(v));
  return out;
}

std::vector<int> value_support(const Element& v) {
  std::vector<int> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back(static_cast<int>(i));
  return s;
}

bool support_inside(const Element& v, const std::vector<int>& allowed) {
  for (int i : value_support(v))
    if (std::find(allowed.begin(), allowed.end(), i) == allowed.end())
      return false;
  return true;
}

/// Single nonzero bracket whose value lies in the span of its own arguments.
bool matches_single_value_in_key(const NLieAlgebra& a) {
  if (a.sc().size() != 1) return false;
  const auto& [key, value] = *a.sc().begin();
  return support_inside(value, key.indices());
}

/// Single nonzero bracket whose value avoids its own arguments entirely.
bool matches_single_value_off_key(const NLieAlgebra& a) {
  if (a.sc().size() != 1) return false;
  const auto& [key, value] = *a.sc().begin();
  for (int i : value_support(value))
    if (key.contains(i)) return false;
  return !value_support(value).empty();
}

/// Two brackets sharing all but one argument, with values confined to the
/// two non-shared directions and an invertible 2x2 coefficient matrix.
bool matches_two_bracket_family(const NLieAlgebra& a) {
  if (a.sc().size() != 2) return false;
  auto it = a.sc().begin();
  const auto& [k1, v1] = *it;
  ++it;
  const auto& [k2, v2] = *it;
  std::vector<int> shared;
  std::vector<int> diff;
  for (int i : k1.indices())
    (k2.contains(i) ? shared : diff).push_back(i);
  for (int i : k2.indices())
    if (!k1.contains(i)) diff.push_back(i);
  if (static_cast<int>(shared.size()) != k1.size() - 1 || diff.size() != 2)
    return false;
  std::sort(diff.begin(), diff.end());
  if (!support_inside(v1, diff) || !support_inside(v2, diff)) return false;
  const Rational a11 = v1[static_cast<std::size_t>(diff[0])];
  const Rational a12 = v1[static_cast<std::size_t>(diff[1])];
  const Rational a21 = v2[static_cast<std::size_t>(diff[0])];
  const Rational a22 = v2[static_cast<std::size_t>(diff[1])];
  return !(a11 * a22 - a12 * a21).is_zero();
}

/// Three brackets through a common pivot argument, each omitting a distinct
/// basis vector, values confined to the omitted directions, with an
/// invertible 3x3 coefficient matrix.
bool matches_three_bracket_table(const NLieAlgebra& a) {
  if (a.sc().size() != 3 || a.arity() != 3 || a.dim() < 4) return false;
  std::vector<MultiIndex> keys;
  std::vector<Element> values;
  for (const auto& [k, v] : a.sc()) {
    keys.push_back(k);
    values.push_back(v);
  }
  // the pivot is the one index common to all three keys
  std::vector<int> pivots;
  for (int i : keys[0].indices())
    if (keys[1].contains(i) && keys[2].contains(i)) pivots.push_back(i);
  if (pivots.size() != 1) return false;
  const int pivot = pivots[0];
  // each key = {union of arguments} minus one omitted basis vector
  std::vector<int> all;
  for (const MultiIndex& k : keys)
    for (int i : k.indices())
      if (std::find(all.begin(), all.end(), i) == all.end()) all.push_back(i);
  if (all.size() != 4) return false;
  std::sort(all.begin(), all.end());
  std::vector<int> omitted;
  for (const MultiIndex& k : keys)
    for (int i : all)
      if (!k.contains(i)) omitted.push_back(i);
  if (omitted.size() != 3) return false;
  std::vector<int> sorted_omitted = omitted;
  std::sort(sorted_omitted.begin(), sorted_omitted.end());
  if (std::unique(sorted_omitted.begin(), sorted_omitted.end()) !=
      sorted_omitted.end())
    return false;
  if (std::find(sorted_omitted.begin(), sorted_omitted.end(), pivot) !=
      sorted_omitted.end())
    return false;
  Matrix m(3, 3);
  for (int r = 0; r < 3; ++r) {
    if (!support_inside(values[static_cast<std::size_t>(r)], sorted_omitted))
      return false;
    for (int c = 0; c < 3; ++c)
      m.at(r, c) = values[static_cast<std::size_t>(r)]
                         [static_cast<std::size_t>(sorted_omitted
                                                       [static_cast<std::size_t>(
                                                           c)])];
  }
  return rank(m) == 3;
}

struct SourceSpec {
  std::string group;
  std::string name;
  std::vector<Params> param_options;  // tuples admitted by the row's claim
};

struct RowSpec {
  std::string target;
  int target_dim;
  std::optional<NLieAlgebra> exact_target;  // literal table when one exists
  std::function<bool(const NLieAlgebra&)> matcher;
  std::vector<SourceSpec> sources;
};

InducedByWitness search_witness(const SourceSpec& source, const RowSpec& row) {
  InducedByWitness w;
  w.source = source.name;
  auto e = find_entry(source.group, source.name);
  if (!e) throw std::logic_error("induced_by_table: unknown source entry");
  for (const Params& p : source.param_options) {
    NLieAlgebra base = e->instantiate(p);
    for (const Vec& coeffs : trace_candidates(base)) {
      TraceMap tau{coeffs};
      NLieAlgebra ind = induce(base, tau);
      if (row.exact_target && ind == *row.exact_target) {
        w.level = MatchLevel::exact;
        w.params = p;
        w.trace = tau;
        return w;  // nothing beats bit-exact equality
      }
      if (w.level != MatchLevel::shape && row.matcher(ind)) {
        w.level = MatchLevel::shape;
        w.params = p;
        w.trace = tau;
      }
    }
  }
  return w;
}

}  // namespace

// ---- CatalogEntry ---------------------------------------------------------

NLieAlgebra CatalogEntry::instantiate(const std::vector<Rational>& params) const {
  if (params.size() < min_params || params.size() > parameters.size())
    throw std::invalid_argument(
        "catalog: entry " + name + " takes " +
        (min_params == parameters.size()
             ? std::to_string(parameters.size())
             : std::to_string(min_params) + " to " +
                   std::to_string(parameters.size())) +
        " parameter(s), got " + std::to_string(params.size()));
  return build(params);
}

// ---- classification of dimension <= n+1 -----------------------------------

std::vector<CatalogEntry> list_filippov(int n, int dim) {
  if (n < 2) throw std::invalid_argument("list_filippov: arity must be >= 2");
  if (dim < 1 || dim > n + 1)
    throw std::invalid_argument(
        "list_filippov: dimension must be between 1 and arity + 1");
  const std::string ctx = "classification of algebras of dimension <= n+1";
  std::vector<CatalogEntry> out;
  if (dim < n) {
    out.push_back(entry("1", "filippov", n, dim, {}, no_params(),
                        ctx + ", case 1: dimension below the arity forces "
                              "every bracket to vanish",
                        [n, dim](const Params&) {
                          return NLieAlgebra(n, dim);
                        }));
    return out;
  }
  if (dim == n) {
    out.push_back(entry("2a", "filippov", n, dim, {}, no_params(),
                        ctx + ", case 2(a): abelian",
                        [n, dim](const Params&) {
                          return NLieAlgebra(n, dim);
                        }));
    out.push_back(entry("2b", "filippov", n, dim, {}, no_params(),
                        ctx + ", case 2(b): [e1,...,en] = e1",
                        [n, dim](const Params&) {
                          NLieAlgebra a(n, dim);
                          set1(a, seq(1, n), {{Rational(1), 1}});
                          return a;
                        }));
    return out;
  }
  // dim == n + 1
  out.push_back(entry("3a", "filippov", n, dim, {}, no_params(),
                      ctx + ", case 3(a): abelian",
                      [n, dim](const Params&) { return NLieAlgebra(n, dim); }));
  out.push_back(entry("3b", "filippov", n, dim, {}, no_params(),
                      ctx + ", case 3(b): [e2,...,e_{n+1}] = e1",
                      [n, dim](const Params&) {
                        NLieAlgebra a(n, dim);
                        set1(a, seq(2, n + 1), {{Rational(1), 1}});
                        return a;
                      }));
  out.push_back(entry("3c", "filippov", n, dim, {}, no_params(),
                      ctx + ", case 3(c): [e1,...,en] = e1",
                      [n, dim](const Params&) {
                        NLieAlgebra a(n, dim);
                        set1(a, seq(1, n), {{Rational(1), 1}});
                        return a;
                      }));
  out.push_back(entry(
      "3d", "filippov", n, dim,
      {{"a", ""}, {"b", ""}, {"c", ""}, {"d", "ad - bc != 0"}},
      {{Rational(1), Rational(0), Rational(0), Rational(1)},
       {Rational(1), Rational(2), Rational(3), Rational(4)}},
      ctx + ", case 3(d): [e1,...,e_{n-1},e_{n+1}] = a en + b e_{n+1}, "
            "[e1,...,en] = c en + d e_{n+1}; two such algebras with matrices "
            "C1, C2 are isomorphic iff C2 = alpha B C1 B^{-1}",
      [n, dim](const Params& p) {
        require(!(p[0] * p[3] - p[1] * p[2]).is_zero(), "ad - bc != 0");
        NLieAlgebra a(n, dim);
        set1(a, cat(seq(1, n - 1), {n + 1}), {{p[0], n}, {p[1], n + 1}});
        set1(a, seq(1, n), {{p[2], n}, {p[3], n + 1}});
        return a;
      }));
  if (n >= 3) {
    // rank-parameterized diagonal family: the number of parameters supplied
    // sets the rank r, which the classification pins to dim of the derived
    // subalgebra (2 < r <= n)
    std::vector<ParameterSlot> slots;
    for (int i = 1; i <= n; ++i)
      slots.push_back({"a" + std::to_string(i), "a_i != 0"});
    std::vector<Params> samples;
    samples.emplace_back(static_cast<std::size_t>(n), Rational(1));
    Params alt;
    for (int i = 0; i < n; ++i)
      alt.push_back(i % 2 == 0 ? Rational(i + 1) : Rational(-(i + 1)));
    samples.push_back(std::move(alt));
    CatalogEntry e3e = entry(
        "3e", "filippov", n, dim, std::move(slots), std::move(samples),
        ctx + ", case 3(e): [e1,...,^ei,...,e_{n+1}] = a_i e_i for "
              "1 <= i <= r with 2 < r <= n; brackets omit one of the n+1 "
              "basis vectors, following the pattern of case 3(f)",
        [n, dim](const Params& p) {
          const int r = static_cast<int>(p.size());
          require(r > 2 && r <= n, "2 < r <= n");
          NLieAlgebra a(n, dim);
          for (int i = 1; i <= r; ++i) {
            require(!p[static_cast<std::size_t>(i - 1)].is_zero(),
                    "a_i != 0");
            set1(a, seq_omit(1, n + 1, i),
                 {{p[static_cast<std::size_t>(i - 1)], i}});
          }
          return a;
        });
    e3e.min_params = 3;
    out.push_back(std::move(e3e));
  }
  {
    std::vector<ParameterSlot> slots;
    for (int i = 1; i <= n + 1; ++i)
      slots.push_back({"a" + std::to_string(i), "a_i != 0"});
    std::vector<Params> samples;
    samples.emplace_back(static_cast<std::size_t>(n + 1), Rational(1));
    Params alt = {Rational(1), Rational(2), Rational(-1)};
    for (int i = 3; i <= n; ++i) alt.push_back(Rational(i));
    samples.push_back(std::move(alt));
    out.push_back(entry(
        "3f", "filippov", n, dim, std::move(slots), std::move(samples),
        ctx + ", case 3(f): [e1,...,^ei,...,e_{n+1}] = a_i e_i for all "
              "1 <= i <= n+1; simple",
        [n, dim](const Params& p) {
          NLieAlgebra a(n, dim);
          for (int i = 1; i <= n + 1; ++i) {
            require(!p[static_cast<std::size_t>(i - 1)].is_zero(),
                    "a_i != 0");
            set1(a, seq_omit(1, n + 1, i),
                 {{p[static_cast<std::size_t>(i - 1)], i}});
          }
          return a;
        }));
  }
  return out;
}

// ---- classification of dimension n+2 --------------------------------------

std::vector<CatalogEntry> list_bai(int n) {
  if (n < 2) throw std::invalid_argument("list_bai: arity must be >= 2");
  const int dim = n + 2;
  const std::string ctx = "classification of algebras of dimension n+2";
  std::vector<CatalogEntry> out;
  auto fixed = [&](std::string name, std::string what,
                   std::function<void(NLieAlgebra&)> fill) {
    out.push_back(entry(std::move(name), "bai", n, dim, {}, no_params(),
                        ctx + ", case " + what,
                        [n, dim, fill](const Params&) {
                          NLieAlgebra a(n, dim);
                          fill(a);
                          return a;
                        }));
  };
  fixed("1", "1: abelian (derived subalgebra zero)",
        [](NLieAlgebra&) {});
  fixed("2a", "2(a): derived = <e1> central; [e2,...,e_{n+1}] = e1",
        [n](NLieAlgebra& a) { set1(a, seq(2, n + 1), {{Rational(1), 1}}); });
  fixed("2b", "2(b): derived = <e1> not central; [e1,...,en] = e1",
        [n](NLieAlgebra& a) { set1(a, seq(1, n), {{Rational(1), 1}}); });
  fixed("3a", "3(a): [e2,...,e_{n+1}] = e1, [e3,...,e_{n+2}] = e2",
        [n](NLieAlgebra& a) {
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          set1(a, seq(3, n + 2), {{Rational(1), 2}});
        });
  fixed("3b",
        "3(b): [e2,...,e_{n+1}] = e1, [e2,e4,...,e_{n+2}] = e2, "
        "[e1,e4,...,e_{n+2}] = e1",
        [n](NLieAlgebra& a) {
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          set1(a, cat({2}, seq(4, n + 2)), {{Rational(1), 2}});
          set1(a, cat({1}, seq(4, n + 2)), {{Rational(1), 1}});
        });
  fixed("3c", "3(c): [e2,...,e_{n+1}] = e1, [e1,e3,...,e_{n+1}] = e2",
        [n](NLieAlgebra& a) {
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          set1(a, cat({1}, seq(3, n + 1)), {{Rational(1), 2}});
        });
  fixed("3d",
        "3(d): case 3(c) plus [e2,e4,...,e_{n+2}] = e2 and "
        "[e1,e4,...,e_{n+2}] = e1",
        [n](NLieAlgebra& a) {
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          set1(a, cat({1}, seq(3, n + 1)), {{Rational(1), 2}});
          set1(a, cat({2}, seq(4, n + 2)), {{Rational(1), 2}});
          set1(a, cat({1}, seq(4, n + 2)), {{Rational(1), 1}});
        });
  auto alpha_entry = [&](std::string name, std::string what, bool with_tail) {
    out.push_back(entry(
        std::move(name), "bai", n, dim, {{"alpha", "alpha != 0"}},
        {{Rational(1)}, {Rational(-2)}}, ctx + ", case " + what,
        [n, dim, with_tail](const Params& p) {
          require(!p[0].is_zero(), "alpha != 0");
          NLieAlgebra a(n, dim);
          set1(a, seq(2, n + 1), {{p[0], 1}, {Rational(1), 2}});
          set1(a, cat({1}, seq(3, n + 1)), {{Rational(1), 2}});
          if (with_tail) {
            set1(a, cat({2}, seq(4, n + 2)), {{Rational(1), 2}});
            set1(a, cat({1}, seq(4, n + 2)), {{Rational(1), 1}});
          }
          return a;
        }));
  };
  alpha_entry("3e",
              "3(e): [e2,...,e_{n+1}] = alpha e1 + e2, "
              "[e1,e3,...,e_{n+1}] = e2",
              false);
  alpha_entry("3f", "3(f): case 3(e) plus the two e4..e_{n+2} brackets", true);
  fixed("3g", "3(g): [e1,e3,...,e_{n+1}] = e1, [e2,e3,...,e_{n+1}] = e2",
        [n](NLieAlgebra& a) {
          set1(a, cat({1}, seq(3, n + 1)), {{Rational(1), 1}});
          set1(a, cat({2}, seq(3, n + 1)), {{Rational(1), 2}});
        });
  fixed("4a",
        "4(a): [e2,...,e_{n+1}] = e1, [e2,e4,...,e_{n+2}] = -e2, "
        "[e3,...,e_{n+2}] = e3",
        [n](NLieAlgebra& a) {
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          set1(a, cat({2}, seq(4, n + 2)), {{Rational(-1), 2}});
          set1(a, seq(3, n + 2), {{Rational(1), 3}});
        });
  out.push_back(entry(
      "4b", "bai", n, dim, {{"alpha", ""}}, {{Rational(1)}, {Rational(-2)}},
      ctx + ", case 4(b): [e2,...,e_{n+1}] = e1, [e3,...,e_{n+2}] = e3 + "
            "alpha e2, [e2,e4,...,e_{n+2}] = e3, [e1,e4,...,e_{n+2}] = e1",
      [n, dim](const Params& p) {
        NLieAlgebra a(n, dim);
        set1(a, seq(2, n + 1), {{Rational(1), 1}});
        set1(a, seq(3, n + 2), {{Rational(1), 3}, {p[0], 2}});
        set1(a, cat({2}, seq(4, n + 2)), {{Rational(1), 3}});
        set1(a, cat({1}, seq(4, n + 2)), {{Rational(1), 1}});
        return a;
      }));
  fixed("4c",
        "4(c): [e2,...,e_{n+1}] = e1, [e3,...,e_{n+2}] = e3, "
        "[e2,e4,...,e_{n+2}] = e2, [e1,e4,...,e_{n+2}] = 2e1",
        [n](NLieAlgebra& a) {
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          set1(a, seq(3, n + 2), {{Rational(1), 3}});
          set1(a, cat({2}, seq(4, n + 2)), {{Rational(1), 2}});
          set1(a, cat({1}, seq(4, n + 2)), {{Rational(2), 1}});
        });
  fixed("4d",
        "4(d): [e2,...,e_{n+1}] = e1, [e1,e3,...,e_{n+1}] = e2, "
        "[e1,e2,e4,...,e_{n+1}] = e3",
        [n](NLieAlgebra& a) {
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          set1(a, cat({1}, seq(3, n + 1)), {{Rational(1), 2}});
          set1(a, cat({1, 2}, seq(4, n + 1)), {{Rational(1), 3}});
        });
  out.push_back(entry(
      "4e", "bai", n, dim, {{"beta", "beta not in {0, 1}"}},
      {{Rational(2)}, {Rational(-1)}},
      ctx + ", case 4(e): [e1,e4,...,e_{n+2}] = e1, [e2,e4,...,e_{n+2}] = "
            "e3, [e3,...,e_{n+2}] = beta e2 + (1+beta) e3",
      [n, dim](const Params& p) {
        require(!p[0].is_zero() && p[0] != Rational(1), "beta not in {0, 1}");
        NLieAlgebra a(n, dim);
        set1(a, cat({1}, seq(4, n + 2)), {{Rational(1), 1}});
        set1(a, cat({2}, seq(4, n + 2)), {{Rational(1), 3}});
        set1(a, seq(3, n + 2), {{p[0], 2}, {p[0] + Rational(1), 3}});
        return a;
      }));
  fixed("4f",
        "4(f): [e_i,e4,...,e_{n+2}] = e_i for i = 1, 2, 3",
        [n](NLieAlgebra& a) {
          for (int i = 1; i <= 3; ++i)
            set1(a, cat({i}, seq(4, n + 2)), {{Rational(1), i}});
        });
  out.push_back(entry(
      "4g", "bai", n, dim, {{"s", ""}, {"t", ""}, {"u", ""}},
      {{Rational(0), Rational(0), Rational(0)},
       {Rational(1), Rational(1), Rational(1)}},
      ctx + ", case 4(g): [e1,e4,...,e_{n+2}] = e2, [e2,e4,...,e_{n+2}] = "
            "e3, [e3,...,e_{n+2}] = s e1 + t e2 + u e3; (s,t,u) and "
            "(s',t',u') give isomorphic algebras iff s = r^3 s', t = r^2 t', "
            "u = r u' for some nonzero r",
      [n, dim](const Params& p) {
        NLieAlgebra a(n, dim);
        set1(a, cat({1}, seq(4, n + 2)), {{Rational(1), 2}});
        set1(a, cat({2}, seq(4, n + 2)), {{Rational(1), 3}});
        set1(a, seq(3, n + 2), {{p[0], 1}, {p[1], 2}, {p[2], 3}});
        return a;
      }));
  if (n >= 3) {  // the rank range 4 <= r <= n+1 is empty below arity 3
    std::vector<Params> r_samples;
    for (int r = 4; r <= n + 1; ++r) r_samples.push_back({Rational(r)});
    auto check_rank = [n](const Params& p) {
      require(p[0].den() == 1 && p[0] >= Rational(4) &&
                  p[0] <= Rational(n + 1),
              "r integer with 4 <= r <= n+1");
      return static_cast<int>(p[0].num().get_si());
    };
    out.push_back(entry(
        "5a", "bai", n, dim, {{"r", "integer, 4 <= r <= n+1"}}, r_samples,
        ctx + ", case 5(a): derived = <e1,...,er>; [e2,...,e_{n+1}] = e1 "
              "and [e2,...,^ei,...,e_{n+2}] = e_i for 2 <= i <= r",
        [n, dim, check_rank](const Params& p) {
          const int r = check_rank(p);
          NLieAlgebra a(n, dim);
          set1(a, seq(2, n + 1), {{Rational(1), 1}});
          for (int i = 2; i <= r; ++i)
            set1(a, seq_omit(2, n + 2, i), {{Rational(1), i}});
          return a;
        }));
    out.push_back(entry(
        "5b", "bai", n, dim, {{"r", "integer, 4 <= r <= n+1"}}, r_samples,
        ctx + ", case 5(b): derived = <e1,...,er>; "
              "[e1,...,^ei,...,e_{n+1}] = e_i for 1 <= i <= r",
        [n, dim, check_rank](const Params& p) {
          const int r = check_rank(p);
          NLieAlgebra a(n, dim);
          for (int i = 1; i <= r; ++i)
            set1(a, seq_omit(1, n + 1, i), {{Rational(1), i}});
          return a;
        }));
  }
  return out;
}

// ---- three-dimensional Lie algebras ---------------------------------------

std::vector<CatalogEntry> list_lie3() {
  const std::string ctx = "three-dimensional Lie algebra classification";
  std::vector<CatalogEntry> out;
  auto fixed = [&](std::string name, std::string what,
                   std::function<void(NLieAlgebra&)> fill) {
    out.push_back(entry(std::move(name), "lie3", 2, 3, {}, no_params(),
                        ctx + ", " + what,
                        [fill](const Params&) {
                          NLieAlgebra a(2, 3);
                          fill(a);
                          return a;
                        }));
  };
  fixed("abelian", "abelian case", [](NLieAlgebra&) {});
  fixed("L(3,-1)", "L(3,-1): [e1,e2] = e1",
        [](NLieAlgebra& a) { set1(a, {1, 2}, {{Rational(1), 1}}); });
  fixed("L(3,1)", "L(3,1): [e1,e2] = e3",
        [](NLieAlgebra& a) { set1(a, {1, 2}, {{Rational(1), 3}}); });
  out.push_back(entry(
      "L(3,2,a)", "lie3", 2, 3, {{"a", "0 < |a| <= 1"}},
      {{Rational(1)}, {Rational(1, 2)}, {Rational(-1)}},
      ctx + ", L(3,2,a): [e1,e3] = e1, [e2,e3] = a e2",
      [](const Params& p) {
        const Rational& a = p[0];
        require(!a.is_zero() &&
                    (a.sign() > 0 ? a <= Rational(1) : -a <= Rational(1)),
                "0 < |a| <= 1");
        NLieAlgebra g(2, 3);
        set1(g, {1, 3}, {{Rational(1), 1}});
        set1(g, {2, 3}, {{a, 2}});
        return g;
      }));
  fixed("L(3,3)", "L(3,3): [e1,e3] = e1, [e2,e3] = e1 + e2",
        [](NLieAlgebra& a) {
          set1(a, {1, 3}, {{Rational(1), 1}});
          set1(a, {2, 3}, {{Rational(1), 1}, {Rational(1), 2}});
        });
  out.push_back(entry(
      "L(3,4,a)", "lie3", 2, 3, {{"a", "a >= 0"}},
      {{Rational(0)}, {Rational(1)}},
      ctx + ", L(3,4,a): [e1,e3] = a e1 - e2, [e2,e3] = e1 + a e2",
      [](const Params& p) {
        require(p[0].sign() >= 0, "a >= 0");
        NLieAlgebra g(2, 3);
        set1(g, {1, 3}, {{p[0], 1}, {Rational(-1), 2}});
        set1(g, {2, 3}, {{Rational(1), 1}, {p[0], 2}});
        return g;
      }));
  fixed("L(3,5)", "L(3,5): [e1,e2] = e1, [e1,e3] = -2e2, [e2,e3] = e3",
        [](NLieAlgebra& a) {
          set1(a, {1, 2}, {{Rational(1), 1}});
          set1(a, {1, 3}, {{Rational(-2), 2}});
          set1(a, {2, 3}, {{Rational(1), 3}});
        });
  fixed("L(3,6)", "L(3,6): [e1,e2] = e3, [e1,e3] = -e2, [e2,e3] = e1",
        [](NLieAlgebra& a) {
          set1(a, {1, 2}, {{Rational(1), 3}});
          set1(a, {1, 3}, {{Rational(-1), 2}});
          set1(a, {2, 3}, {{Rational(1), 1}});
        });
  return out;
}

// ---- solvable four-dimensional Lie algebras -------------------------------

std::vector<CatalogEntry> list_lie4_solvable() {
  const std::string ctx = "solvable four-dimensional Lie algebra "
                          "classification";
  std::vector<CatalogEntry> out;
  auto fixed = [&](std::string name, std::string what,
                   std::function<void(NLieAlgebra&)> fill) {
    out.push_back(entry(std::move(name), "lie4_solvable", 2, 4, {},
                        no_params(), ctx + ", " + what,
                        [fill](const Params&) {
                          NLieAlgebra a(2, 4);
                          fill(a);
                          return a;
                        }));
  };
  fixed("abelian", "abelian case", [](NLieAlgebra&) {});
  fixed("M2", "M2: [e1,e4] = e1, [e2,e4] = e2, [e3,e4] = e3",
        [](NLieAlgebra& a) {
          set1(a, {1, 4}, {{Rational(1), 1}});
          set1(a, {2, 4}, {{Rational(1), 2}});
          set1(a, {3, 4}, {{Rational(1), 3}});
        });
  out.push_back(entry(
      "M3_a", "lie4_solvable", 2, 4, {{"a", ""}},
      {{Rational(1)}, {Rational(-2)}, {Rational(0)}},
      ctx + ", M3_a: [e1,e4] = e1, [e2,e4] = e3, [e3,e4] = -a e2 + (a+1) e3",
      [](const Params& p) {
        NLieAlgebra a(2, 4);
        set1(a, {1, 4}, {{Rational(1), 1}});
        set1(a, {2, 4}, {{Rational(1), 3}});
        set1(a, {3, 4}, {{-p[0], 2}, {p[0] + Rational(1), 3}});
        return a;
      }));
  fixed("M4", "M4: [e2,e4] = e3, [e3,e4] = e3",
        [](NLieAlgebra& a) {
          set1(a, {2, 4}, {{Rational(1), 3}});
          set1(a, {3, 4}, {{Rational(1), 3}});
        });
  fixed("M5", "M5: [e2,e4] = e3",
        [](NLieAlgebra& a) { set1(a, {2, 4}, {{Rational(1), 3}}); });
  out.push_back(entry(
      "M6_a_b", "lie4_solvable", 2, 4, {{"a", ""}, {"b", ""}},
      {{Rational(1), Rational(1)}, {Rational(0), Rational(2)}},
      ctx + ", M6_a_b: [e1,e4] = e2, [e2,e4] = e3, "
            "[e3,e4] = a e1 + b e2 + e3",
      [](const Params& p) {
        NLieAlgebra a(2, 4);
        set1(a, {1, 4}, {{Rational(1), 2}});
        set1(a, {2, 4}, {{Rational(1), 3}});
        set1(a, {3, 4}, {{p[0], 1}, {p[1], 2}, {Rational(1), 3}});
        return a;
      }));
  out.push_back(entry(
      "M7_a_b", "lie4_solvable", 2, 4,
      {{"a", "a = b != 0, or a = 0, or b = 0"}, {"b", ""}},
      {{Rational(1), Rational(1)}, {Rational(0), Rational(1)},
       {Rational(1), Rational(0)}},
      ctx + ", M7_a_b: [e1,e4] = e2, [e2,e4] = e3, [e3,e4] = a e1 + b e2",
      [](const Params& p) {
        require((p[0] == p[1] && !p[0].is_zero()) || p[0].is_zero() ||
                    p[1].is_zero(),
                "a = b != 0, or a = 0, or b = 0");
        NLieAlgebra a(2, 4);
        set1(a, {1, 4}, {{Rational(1), 2}});
        set1(a, {2, 4}, {{Rational(1), 3}});
        set1(a, {3, 4}, {{p[0], 1}, {p[1], 2}});
        return a;
      }));
  fixed("M8", "M8: [e1,e2] = e2, [e3,e4] = e4",
        [](NLieAlgebra& a) {
          set1(a, {1, 2}, {{Rational(1), 2}});
          set1(a, {3, 4}, {{Rational(1), 4}});
        });
  out.push_back(entry(
      "M9_a", "lie4_solvable", 2, 4,
      {{"a", "X^2 - X - a has no rational root"}},
      {{Rational(1)}, {Rational(-1)}},
      ctx + ", M9_a: [e1,e4] = e1 + a e2, [e2,e4] = e1, [e1,e3] = e1, "
            "[e2,e3] = e2",
      [](const Params& p) {
        // a rational root exists iff 1 + 4a is a square in Q, i.e. both
        // numerator and denominator of 1 + 4a are perfect squares
        const Rational disc = Rational(1) + Rational(4) * p[0];
        const bool square =
            disc.sign() >= 0 &&
            mpz_perfect_square_p(disc.num().get_mpz_t()) != 0 &&
            mpz_perfect_square_p(disc.den().get_mpz_t()) != 0;
        require(!square, "X^2 - X - a has no rational root");
        NLieAlgebra a(2, 4);
        set1(a, {1, 4}, {{Rational(1), 1}, {p[0], 2}});
        set1(a, {2, 4}, {{Rational(1), 1}});
        set1(a, {1, 3}, {{Rational(1), 1}});
        set1(a, {2, 3}, {{Rational(1), 2}});
        return a;
      }));
  // In M11 and M12 the fourth generator acts on the Heisenberg algebra
  // spanned by e1, e2, e3, so its action on the center e2 is pinned to the
  // trace of its action on span{e1, e3}: identity (trace 2) for M11, the
  // rank-one projection onto e1 (trace 1) for M12.
  fixed("M11",
        "M11: [e1,e4] = e1, [e2,e4] = 2e2, [e3,e4] = e3, [e1,e3] = e2",
        [](NLieAlgebra& a) {
          set1(a, {1, 4}, {{Rational(1), 1}});
          set1(a, {2, 4}, {{Rational(2), 2}});
          set1(a, {3, 4}, {{Rational(1), 3}});
          set1(a, {1, 3}, {{Rational(1), 2}});
        });
  fixed("M12", "M12: [e1,e4] = e1, [e2,e4] = e2, [e1,e3] = e2",
        [](NLieAlgebra& a) {
          set1(a, {1, 4}, {{Rational(1), 1}});
          set1(a, {2, 4}, {{Rational(1), 2}});
          set1(a, {1, 3}, {{Rational(1), 2}});
        });
  out.push_back(entry(
      "M13_a", "lie4_solvable", 2, 4, {{"a", ""}},
      {{Rational(0)}, {Rational(1)}},
      ctx + ", M13_a: [e1,e4] = e1 + a e3, [e2,e4] = e2, [e3,e4] = e1, "
            "[e1,e3] = e2",
      [](const Params& p) {
        NLieAlgebra a(2, 4);
        set1(a, {1, 4}, {{Rational(1), 1}, {p[0], 3}});
        set1(a, {2, 4}, {{Rational(1), 2}});
        set1(a, {3, 4}, {{Rational(1), 1}});
        set1(a, {1, 3}, {{Rational(1), 2}});
        return a;
      }));
  out.push_back(entry(
      "M14_a", "lie4_solvable", 2, 4, {{"a", ""}},
      {{Rational(1)}, {Rational(-2)}},
      ctx + ", M14_a: [e1,e4] = a e3, [e3,e4] = e1, [e1,e3] = e2; M14_a "
            "and M14_b are isomorphic iff a = alpha^2 b for some alpha != 0",
      [](const Params& p) {
        NLieAlgebra a(2, 4);
        set1(a, {1, 4}, {{p[0], 3}});
        set1(a, {3, 4}, {{Rational(1), 1}});
        set1(a, {1, 3}, {{Rational(1), 2}});
        return a;
      }));
  return out;
}

CatalogEntry gl2_entry() {
  return entry("gl2", "gl2", 2, 4, {}, no_params(),
               "2x2 matrices under the commutator, in the basis with "
               "[e1,e2] = 2e2, [e1,e3] = -2e3, [e2,e3] = e1 and e4 central",
               [](const Params&) {
                 NLieAlgebra a(2, 4);
                 set1(a, {1, 2}, {{Rational(2), 2}});
                 set1(a, {1, 3}, {{Rational(-2), 3}});
                 set1(a, {2, 3}, {{Rational(1), 1}});
                 return a;
               });
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::vector<CatalogEntry> v) {
    for (CatalogEntry& e : v) out.push_back(std::move(e));
  };
  for (int dim = 1; dim <= 3; ++dim) add(list_filippov(2, dim));
  for (int dim = 2; dim <= 4; ++dim) add(list_filippov(3, dim));
  add(list_bai(2));
  add(list_bai(3));
  add(list_lie3());
  add(list_lie4_solvable());
  out.push_back(gl2_entry());
  return out;
}

std::optional<CatalogEntry> find_entry(const std::string& group,
                                       const std::string& name, int arity) {
  for (CatalogEntry& e : full_catalog())
    if (e.group == group && e.name == name &&
        (arity == 0 || e.arity == arity))
      return std::move(e);
  return std::nullopt;
}

// ---- signatures -----------------------------------------------------------

InvariantSignature invariant_signature(const NLieAlgebra& a) {
  InvariantSignature s;
  s.dim = a.dim();
  s.arity = a.arity();
  s.derived_dim = derived_subalgebra(a).dim();
  s.center_dim = center(a).dim();
  s.solvability = solvability_class(a);
  s.nilpotency = nilpotency_class(a);
  s.derivation_dim = derivation_space(a).dim();
  s.outer_derivation_dim = h1_adjoint_dim(a);
  return s;
}

std::vector<CatalogEntry> signature_match(
    const NLieAlgebra& a, const std::vector<CatalogEntry>& entries) {
  const InvariantSignature target = invariant_signature(a);
  std::vector<CatalogEntry> out;
  for (const CatalogEntry& e : entries) {
    if (e.dim != a.dim() || e.arity != a.arity()) continue;
    for (const Params& p : e.samples) {
      if (invariant_signature(e.instantiate(p)) == target) {
        out.push_back(e);
        break;
      }
    }
  }
  return out;
}

// ---- recognition ----------------------------------------------------------

std::optional<RecognitionResult> recognize_induced(const NLieAlgebra& a) {
  if (a.arity() < 3)
    throw std::invalid_argument(
        "recognize_induced: arity must be at least 3 so the reduced algebra "
        "is at least binary");
  for (int p = 0; p < a.dim(); ++p) {
    bool usable = true;
    for (const auto& [key, value] : a.sc()) {
      if (!key.contains(p) || !value[static_cast<std::size_t>(p)].is_zero()) {
        usable = false;
        break;
      }
    }
    if (!usable) continue;
    NLieAlgebra reduced(a.arity() - 1, a.dim());
    for (const auto& [key, value] : a.sc()) {
      int pos = 0;
      while (key[pos] != p) ++pos;
      Element v = value;
      if (pos % 2 != 0)
        for (Rational& x : v) x = -x;
      reduced.set_bracket(key.erased(pos).indices(), std::move(v));
    }
    Vec coeffs(static_cast<std::size_t>(a.dim()));
    coeffs[static_cast<std::size_t>(p)] = Rational(1);
    TraceMap tau{std::move(coeffs)};
    if (!is_trace(reduced, tau)) continue;
    if (!(induce(reduced, tau) == a)) continue;
    return RecognitionResult{p, std::move(reduced), std::move(tau)};
  }
  return std::nullopt;
}

bool can_be_induced_obstruction(const NLieAlgebra& a) {
  const Subspace derived = derived_subalgebra(a);
  std::vector<Subspace> factors(static_cast<std::size_t>(a.arity()), derived);
  return product_subspace(a, factors).dim() > 0;
}

// ---- induced-by table -----------------------------------------------------

std::vector<InducedByRow> induced_by_table() {
  auto literal = [](int dim, std::vector<std::pair<std::vector<int>,
                                                   std::vector<std::pair<
                                                       Rational, int>>>>
                                 brackets) {
    NLieAlgebra a(3, dim);
    for (auto& [args, value] : brackets) set1(a, args, value);
    return a;
  };

  const std::string m = "lie4_solvable";
  std::vector<RowSpec> rows;
  rows.push_back(RowSpec{
      "[e1,e2,e3] = e1", 4,
      literal(4, {{{1, 2, 3}, {{Rational(1), 1}}}}),
      matches_single_value_in_key,
      {{m, "M3_a", {{Rational(1)}, {Rational(-2)}, {Rational(0)}}},
       {m, "M4", {Params{}}}}});
  rows.push_back(RowSpec{
      "[e2,e3,e4] = e1", 4,
      literal(4, {{{2, 3, 4}, {{Rational(1), 1}}}}),
      matches_single_value_off_key,
      {{m, "M5", {Params{}}},
       {m, "M12", {Params{}}},
       {m, "M13_a", {{Rational(1)}}},
       {m, "M14_a", {{Rational(1)}, {Rational(-2)}}}}});
  rows.push_back(RowSpec{
      "[e1,e2,e4] = a11 e3 + a12 e4, [e1,e2,e3] = a21 e3 + a22 e4 "
      "(invertible coefficient matrix)",
      4, std::nullopt, matches_two_bracket_family,
      {{m, "M6_a_b", {{Rational(0), Rational(2)}}},
       {m, "M7_a_b", {{Rational(0), Rational(1)}}},
       {m, "M8", {Params{}}},
       {m, "M9_a", {{Rational(1)}, {Rational(-1)}}},
       {m, "M11", {Params{}}},
       {m, "M13_a", {{Rational(0)}}}}});
  rows.push_back(RowSpec{
      "[e2,e3,e4] = e1, [e1,e3,e4] = e2, [e1,e2,e4] = e3", 4,
      literal(4, {{{2, 3, 4}, {{Rational(1), 1}}},
                  {{1, 3, 4}, {{Rational(1), 2}}},
                  {{1, 2, 4}, {{Rational(1), 3}}}}),
      matches_three_bracket_table,
      {{"gl2", "gl2", {Params{}}}}});
  rows.push_back(RowSpec{
      "[e1,e2,e3] = e1 (three-dimensional)", 3,
      literal(3, {{{1, 2, 3}, {{Rational(1), 1}}}}),
      matches_single_value_in_key,
      {{"lie3", "L(3,-1)", {Params{}}}}});

  std::vector<InducedByRow> out;
  for (const RowSpec& row : rows) {
    InducedByRow r;
    r.target = row.target;
    r.target_dim = row.target_dim;
    for (const SourceSpec& source : row.sources)
      r.witnesses.push_back(search_witness(source, row));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nlie
