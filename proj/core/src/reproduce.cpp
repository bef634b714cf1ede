/* Implementation of the end-to-end verification suite.  Each numbered claim
 * recomputes one recorded result from the library's own primitives and logs
 * every comparison it makes; a claim passes only when all its comparisons
 * agree.  Randomized claims draw from one fixed-seed generator so the suite
 * is repeatable.
 */
#include "nlie/reproduce.hpp"

#include "nlie/algebra.hpp"
#include "nlie/catalog.hpp"
#include "nlie/cohomology.hpp"
#include "nlie/extension.hpp"
#include "nlie/induce.hpp"
#include "nlie/structure.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nlie {
namespace {

// ---- recording helpers -----------------------------------------------------

void expect_eq(ClaimResult& r, const std::string& what, int got, int want) {
  const bool ok = got == want;
  if (!ok) r.pass = false;
  r.details.push_back(what + " = " + std::to_string(got) + " (recorded " +
                      std::to_string(want) + ")" + (ok ? "" : "  << MISMATCH"));
}

void expect_true(ClaimResult& r, const std::string& what, bool ok) {
  if (!ok) r.pass = false;
  r.details.push_back(what + (ok ? ": yes" : ": no  << MISMATCH"));
}

void expect_at_least(ClaimResult& r, const std::string& what, int got,
                     int floor) {
  const bool ok = got >= floor;
  if (!ok) r.pass = false;
  r.details.push_back(what + " = " + std::to_string(got) +
                      (ok ? "" : " (expected at least " +
                                     std::to_string(floor) + ")  << MISMATCH"));
}

void note(ClaimResult& r, std::string line) {
  r.details.push_back(std::move(line));
}

// ---- the corpus: every catalog entry at every recorded sample --------------

struct CorpusItem {
  std::string label;
  NLieAlgebra algebra;
};

std::string param_suffix(const std::vector<Rational>& params) {
  if (params.empty()) return "";
  std::string out = "(";
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) out += ",";
    out += params[i].str();
  }
  return out + ")";
}

std::vector<CorpusItem> build_corpus() {
  std::vector<CorpusItem> items;
  for (const CatalogEntry& e : full_catalog()) {
    std::string prefix = e.group + "/";
    if (e.group == "filippov" || e.group == "bai")
      prefix += "n=" + std::to_string(e.arity) + "/";
    for (const std::vector<Rational>& params : e.samples)
      items.push_back(
          {prefix + e.name + param_suffix(params), e.instantiate(params)});
  }
  return items;
}

/// One induced bracket: a corpus algebra together with one basis vector of
/// its trace space.
struct InducedPair {
  std::size_t item;
  TraceMap tau;
  NLieAlgebra induced;
};

std::vector<InducedPair> build_pairs(const std::vector<CorpusItem>& items) {
  std::vector<InducedPair> out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const Subspace traces = trace_space(items[i].algebra);
    for (const Vec& b : traces.basis()) {
      TraceMap tau{b};
      out.push_back({i, tau, induce(items[i].algebra, tau)});
    }
  }
  return out;
}

// Frozen sizes of the corpus-driven loops, so a silently shrunken corpus
// fails loudly instead of passing vacuously.
constexpr int kCorpusTotal = 101;
constexpr int kPairsTotal = 188;
constexpr int kSmallTotal = 77;
constexpr int kUnitPairs = 58;
constexpr int kRecognizedTotal = 30;
constexpr int kObstructedTotal = 4;

// ---- randomness ------------------------------------------------------------

Rational rnd_rational(std::mt19937_64& eng, int num_range = 4) {
  static const long dens[] = {1, 1, 2, 3};
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(0, 3);
  return Rational(num(eng), dens[den(eng)]);
}

Vec rnd_vec(std::mt19937_64& eng, int len) {
  Vec v(static_cast<std::size_t>(len));
  for (Rational& x : v) x = rnd_rational(eng);
  return v;
}

Matrix rnd_matrix(std::mt19937_64& eng, int dim) {
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rnd_rational(eng);
  return m;
}

ScalCochain2 rnd_form(std::mt19937_64& eng, const NLieAlgebra& a) {
  ScalCochain2 omega;
  for (const MultiIndex& key : cochain2_keys(a)) {
    Rational v = rnd_rational(eng);
    if (!v.is_zero()) omega.emplace(key, v);
  }
  return omega;
}

// ---- shared fixtures -------------------------------------------------------

TraceMap trace_of(Vec coeffs) { return TraceMap{std::move(coeffs)}; }

NLieAlgebra catalog_algebra(const std::string& group, const std::string& name,
                            const std::vector<Rational>& params = {},
                            int arity = 0) {
  std::optional<CatalogEntry> e = find_entry(group, name, arity);
  if (!e)
    throw std::logic_error("verification suite: missing catalog entry " +
                           group + "/" + name);
  return e->instantiate(params);
}

/// The two-step solvable example [e2,e4] = e3, [e3,e4] = e3.
NLieAlgebra two_step_solvable() {
  return catalog_algebra("lie4_solvable", "M4");
}

/// Unit 2-form on (e1,e2); a cocycle of the example that dies under
/// induction by x1.
ScalCochain2 lambda_form() {
  ScalCochain2 w;
  w.emplace(MultiIndex({0, 1}), Rational(1));
  return w;
}

/// Mixed-sign 2-form on (e2,e4) and (e3,e4); a cocycle of the example that
/// survives induction by x1.
ScalCochain2 mu_form() {
  ScalCochain2 w;
  w.emplace(MultiIndex({1, 3}), Rational(1));
  w.emplace(MultiIndex({2, 3}), Rational(-1));
  return w;
}

/// The ternary table induced from gl2 by the x4 coordinate functional.
NLieAlgebra gl2_ternary_table() {
  NLieAlgebra a(3, 4);
  a.set_bracket({0, 1, 3}, {0, 2, 0, 0});
  a.set_bracket({0, 2, 3}, {0, 0, -2, 0});
  a.set_bracket({1, 2, 3}, {1, 0, 0, 0});
  return a;
}

// ---- claims ----------------------------------------------------------------

void claim_gl2_cohomology(ClaimResult& r) {
  NLieAlgebra g = catalog_algebra("gl2", "gl2");
  expect_eq(r, "dim Z1(gl2)",
            cocycle_space(g, 1, Coefficients::adjoint).dim(), 4);
  expect_eq(r, "dim H1(gl2)", h1_adjoint_dim(g), 1);

  NLieAlgebra gt = induce(g, trace_of({0, 0, 0, 1}));
  expect_eq(r, "dim Z1(gl2 induced by x4)",
            cocycle_space(gt, 1, Coefficients::adjoint).dim(), 7);
  expect_eq(r, "dim H1(gl2 induced by x4)", h1_adjoint_dim(gt), 1);
}

void claim_solvable_cohomology(ClaimResult& r) {
  struct Cited {
    const char* name;
    Vec tau;
    const char* tau_text;
    int h1_base;
    int h1_induced;
  };
  const std::vector<Cited> cited = {
      {"M4", {1, 1, 0, 1}, "x1+x2+x4", 6, 6},
      {"M5", {1, 0, 0, 0}, "x1", 8, 9},
      {"M8", {1, 0, 1, 0}, "x1+x3", 0, 4},
  };
  for (const Cited& c : cited) {
    NLieAlgebra a = catalog_algebra("lie4_solvable", c.name);
    TraceMap tau = trace_of(c.tau);
    expect_true(r, std::string(c.name) + ": " + c.tau_text +
                       " vanishes on all bracket values",
                is_trace(a, tau));
    expect_eq(r, "dim H1(" + std::string(c.name) + ")", h1_adjoint_dim(a),
              c.h1_base);
    expect_eq(r,
              "dim H1(" + std::string(c.name) + " induced by " + c.tau_text +
                  ")",
              h1_adjoint_dim(induce(a, tau)), c.h1_induced);
  }
}

void claim_extension_example(ClaimResult& r) {
  NLieAlgebra a = two_step_solvable();

  const std::vector<MultiIndex> keys = cochain2_keys(a);
  auto coord = [&](const MultiIndex& k) {
    return static_cast<std::size_t>(
        std::find(keys.begin(), keys.end(), k) - keys.begin());
  };
  const std::size_t c13 = coord(MultiIndex({0, 2}));
  const std::size_t c23 = coord(MultiIndex({1, 2}));

  Subspace z2 = cocycle_space(a, 2, Coefficients::scalar);
  expect_eq(r, "dim Z2(scalar)", z2.dim(), 4);
  bool zero13 = true;
  bool zero23 = true;
  for (const Vec& b : z2.basis()) {
    zero13 = zero13 && b[c13].is_zero();
    zero23 = zero23 && b[c23].is_zero();
  }
  expect_true(r, "every scalar 2-cocycle has zero (e1,e3) component", zero13);
  expect_true(r, "every scalar 2-cocycle has zero (e2,e3) component", zero23);

  TraceMap tau = trace_of({1, 0, 0, 0});
  expect_true(r, "the (e1,e2) unit cocycle is non-trivial on the base",
              !is_trivial_extension(a, lambda_form()));
  CentralExtension lt = induce_extension(a, tau, lambda_form());
  expect_true(r, "the (e1,e2) unit cocycle becomes trivial after induction",
              is_trivial_extension(lt.base, lt.omega));

  CentralExtension mt = induce_extension(a, tau, mu_form());
  expect_true(r, "the mixed-sign cocycle stays non-trivial after induction",
              !is_trivial_extension(mt.base, mt.omega));

  NLieAlgebra expected(3, 5);
  expected.set_bracket({0, 1, 3}, {0, 0, 1, 0, 1});
  expected.set_bracket({0, 2, 3}, {0, 0, 1, 0, -1});
  expect_true(r,
              "extended table is [e1,e2,e4] = e3 + c and [e1,e3,e4] = e3 - c",
              mt.total == expected);
}

void claim_induced_solvable(ClaimResult& r,
                            const std::vector<CorpusItem>& items,
                            const std::vector<InducedPair>& pairs) {
  int checked = 0;
  int bad = 0;
  std::string first_bad;
  for (const InducedPair& p : pairs) {
    Subspace d1 = derived_subalgebra(p.induced);
    Subspace d2 = product_subspace(
        p.induced,
        std::vector<Subspace>(static_cast<std::size_t>(p.induced.arity()),
                              d1));
    ++checked;
    if (!d2.is_zero()) {
      ++bad;
      if (first_bad.empty()) first_bad = items[p.item].label;
    }
  }
  expect_eq(r, "induced brackets checked (catalog algebra x trace basis)",
            checked, kPairsTotal);
  expect_true(r, "second derived subalgebra vanished every time", bad == 0);
  if (bad > 0) note(r, "first failure: " + first_bad);
}

void claim_central_series(ClaimResult& r, const std::vector<CorpusItem>& items,
                          const std::vector<InducedPair>& pairs) {
  std::vector<SeriesReport> base_series;
  base_series.reserve(items.size());
  for (const CorpusItem& it : items)
    base_series.push_back(
        central_series(it.algebra, Subspace::full(it.algebra.dim())));

  int checked = 0;
  int units = 0;
  bool inclusion_ok = true;
  bool equality_ok = true;
  std::string first_bad;
  for (const InducedPair& p : pairs) {
    const NLieAlgebra& a = items[p.item].algebra;
    SeriesReport ind = central_series(p.induced, Subspace::full(a.dim()));
    const bool unit = find_unit(a, p.tau).has_value();
    if (unit) ++units;
    for (int q = 0; q <= a.dim(); ++q) {
      const Subspace& cb = base_series[p.item].term(q);
      const Subspace& ci = ind.term(q);
      if (!cb.contains(ci)) {
        inclusion_ok = false;
        if (first_bad.empty()) first_bad = items[p.item].label;
      }
      if (unit && cb != ci) {
        equality_ok = false;
        if (first_bad.empty()) first_bad = items[p.item].label;
      }
    }
    ++checked;
  }
  expect_eq(r, "induced brackets checked", checked, kPairsTotal);
  expect_true(r, "every series term of the induced bracket inside the base "
                 "term",
              inclusion_ok);
  expect_eq(r, "pairs with a unit element", units, kUnitPairs);
  expect_true(r, "series equality whenever a unit exists", equality_ok);
  if (!first_bad.empty()) note(r, "first failure: " + first_bad);
}

void claim_d2_after_d1(ClaimResult& r, const std::vector<CorpusItem>& items,
                       std::mt19937_64& eng) {
  int algebras = 0;
  bool ok = true;
  std::string first_bad;
  for (const CorpusItem& it : items) {
    const NLieAlgebra& a = it.algebra;
    for (int trial = 0; trial < 50; ++trial) {
      Matrix f = rnd_matrix(eng, a.dim());
      if (!all_zero(d2_adjoint(a, d1_adjoint(a, f)))) {
        ok = false;
        if (first_bad.empty()) first_bad = it.label + " (algebra-valued)";
      }
    }
    for (int trial = 0; trial < 50; ++trial) {
      Vec alpha = rnd_vec(eng, a.dim());
      if (!all_zero(d2_scalar(a, d1_scalar(a, alpha)))) {
        ok = false;
        if (first_bad.empty()) first_bad = it.label + " (scalar)";
      }
    }
    ++algebras;
  }
  expect_eq(r, "catalog algebras", algebras, kCorpusTotal);
  note(r, "cochains per algebra: 50 algebra-valued + 50 scalar");
  expect_true(r, "d2 after d1 vanished on every random cochain", ok);
  if (!first_bad.empty()) note(r, "first failure: " + first_bad);
}

void claim_extension_characterization(ClaimResult& r,
                                      const std::vector<CorpusItem>& items,
                                      std::mt19937_64& eng) {
  int algebras = 0;
  int cocycles = 0;
  int non_cocycles = 0;
  bool ok = true;
  std::string first_bad;
  for (const CorpusItem& it : items) {
    const NLieAlgebra& a = it.algebra;
    if (a.dim() > 4) continue;
    ++algebras;
    for (int trial = 0; trial < 100; ++trial) {
      // alternate arbitrary skew forms with guaranteed coboundaries so both
      // sides of the equivalence keep getting exercised
      ScalCochain2 omega = (trial % 2 == 0)
                               ? rnd_form(eng, a)
                               : d1_scalar(a, rnd_vec(eng, a.dim()));
      const bool cocycle = all_zero(d2_scalar(a, omega));
      (cocycle ? cocycles : non_cocycles) += 1;
      const bool fi =
          check_fundamental_identity(build_extension_total(a, omega)).empty();
      if (fi != cocycle) {
        ok = false;
        if (first_bad.empty()) first_bad = it.label;
      }
    }
  }
  expect_eq(r, "small catalog algebras (dim <= 4)", algebras, kSmallTotal);
  expect_at_least(r, "cocycles seen", cocycles, 2000);
  expect_at_least(r, "non-cocycles seen", non_cocycles, 200);
  expect_true(r, "fundamental identity held exactly for the cocycles", ok);
  if (!first_bad.empty()) note(r, "first failure: " + first_bad);
}

void claim_extension_induction_commute(ClaimResult& r,
                                       const std::vector<CorpusItem>& items,
                                       std::mt19937_64& eng) {
  NLieAlgebra a = two_step_solvable();
  TraceMap tau = trace_of({1, 0, 0, 0});
  for (const auto& [text, omega] :
       {std::pair<const char*, ScalCochain2>{"mixed-sign cocycle", mu_form()},
        std::pair<const char*, ScalCochain2>{"(e1,e2) unit cocycle",
                                             lambda_form()}}) {
    CentralExtension e = induce_extension(a, tau, omega);
    NLieAlgebra other =
        induce(central_extend(a, omega).total, extend_trace(a, tau));
    expect_true(r, std::string("worked example, ") + text +
                       ": both orders give identical constants",
                other == e.total);
  }

  int exercised = 0;
  int skipped = 0;
  bool ok = true;
  std::string first_bad;
  for (const CorpusItem& it : items) {
    const NLieAlgebra& b = it.algebra;
    if (b.dim() > 4) continue;
    Subspace z2 = cocycle_space(b, 2, Coefficients::scalar);
    const std::size_t width = static_cast<std::size_t>(z2.ambient_dim());
    const Subspace traces = trace_space(b);
    for (const Vec& tb : traces.basis()) {
      TraceMap t{tb};
      for (int trial = 0; trial < 3; ++trial) {
        Vec v(width);
        for (const Vec& row : z2.basis())
          detail::axpy(v, rnd_rational(eng), row);
        ScalCochain2 omega = vec_to_scal2(b, v);
        if (!check_Z2scalar_condition(b, t, omega)) {
          ++skipped;
          continue;
        }
        CentralExtension e = induce_extension(b, t, omega);
        NLieAlgebra other =
            induce(central_extend(b, omega).total, extend_trace(b, t));
        if (other != e.total) {
          ok = false;
          if (first_bad.empty()) first_bad = it.label;
        }
        ++exercised;
      }
    }
  }
  expect_at_least(r, "randomized cocycle/trace pairs exercised", exercised,
                  100);
  note(r, "pairs skipped by the transfer side condition: " +
              std::to_string(skipped));
  expect_true(r, "both orders always gave identical constants", ok);
  if (!first_bad.empty()) note(r, "first failure: " + first_bad);
}

void claim_recognition_coverage(ClaimResult& r) {
  int recognized = 0;
  bool rec_ok = true;
  std::string first_bad;
  auto run_cases = [&](const char* group,
                       const std::vector<std::string>& names) {
    for (const std::string& name : names) {
      std::optional<CatalogEntry> e = find_entry(group, name, 3);
      if (!e) {
        rec_ok = false;
        if (first_bad.empty())
          first_bad = std::string(group) + "/" + name + " (missing)";
        continue;
      }
      for (const std::vector<Rational>& params : e->samples) {
        NLieAlgebra a = e->instantiate(params);
        std::optional<RecognitionResult> res = recognize_induced(a);
        const bool good = res.has_value() &&
                          induce(res->reduced, res->trace) == a &&
                          !can_be_induced_obstruction(a);
        if (good) {
          ++recognized;
        } else {
          rec_ok = false;
          if (first_bad.empty())
            first_bad =
                std::string(group) + "/" + name + param_suffix(params);
        }
      }
    }
  };
  run_cases("filippov", {"2b", "3a", "3b", "3c", "3d", "3e"});
  run_cases("bai", {"1", "2a", "2b", "3a", "3b", "3c", "3d", "3e", "3f", "3g",
                    "4a", "4b", "4c", "4d", "4e", "4f", "4g"});
  expect_eq(r, "ternary instantiations recognized with verified round-trip",
            recognized, kRecognizedTotal);
  expect_true(r, "every listed case recognized", rec_ok);
  if (!first_bad.empty()) note(r, "first failure: " + first_bad);
  note(r,
       "rank-parameter cases below the top rank: no admissible rank exists "
       "at arity 3, nothing to recognize");

  int obstructed = 0;
  bool obs_ok = true;
  std::string first_obs;
  auto check_obstructed = [&](const NLieAlgebra& a, const std::string& what) {
    const bool good =
        !recognize_induced(a).has_value() && can_be_induced_obstruction(a);
    if (good) {
      ++obstructed;
    } else {
      obs_ok = false;
      if (first_obs.empty()) first_obs = what;
    }
  };
  for (const char* name : {"3f"}) {
    std::optional<CatalogEntry> e = find_entry("filippov", name, 3);
    if (!e) continue;
    for (const std::vector<Rational>& params : e->samples)
      check_obstructed(e->instantiate(params),
                       "filippov/" + std::string(name) + param_suffix(params));
  }
  for (const char* name : {"5a", "5b"}) {
    std::optional<CatalogEntry> e = find_entry("bai", name, 3);
    if (!e) continue;
    for (const std::vector<Rational>& params : e->samples)
      check_obstructed(e->instantiate(params),
                       "bai/" + std::string(name) + param_suffix(params));
  }
  NLieAlgebra simple(3, 4);
  simple.set_bracket({1, 2, 3}, {1, 0, 0, 0});
  simple.set_bracket({0, 2, 3}, {0, 1, 0, 0});
  simple.set_bracket({0, 1, 3}, {0, 0, 1, 0});
  simple.set_bracket({0, 1, 2}, {0, 0, 0, 1});
  expect_true(r,
              "simple four-dimensional ternary algebra rejected by the "
              "non-abelian obstruction",
              !recognize_induced(simple).has_value() &&
                  can_be_induced_obstruction(simple));
  expect_eq(r, "top-rank instantiations rejected by the obstruction",
            obstructed, kObstructedTotal);
  expect_true(r, "every top-rank case rejected", obs_ok);
  if (!first_obs.empty()) note(r, "first failure: " + first_obs);
}

void claim_induced_by_table(ClaimResult& r) {
  const std::vector<InducedByRow> table = induced_by_table();
  expect_eq(r, "table rows", static_cast<int>(table.size()), 5);

  auto resolve = [](const std::string& name) -> std::optional<CatalogEntry> {
    for (const char* g : {"lie4_solvable", "gl2", "lie3"})
      if (std::optional<CatalogEntry> e = find_entry(g, name)) return e;
    return std::nullopt;
  };

  bool flags_consistent = true;
  bool replay_ok = true;
  int verified = 0;
  int unverified = 0;
  for (const InducedByRow& row : table) {
    for (const InducedByWitness& w : row.witnesses) {
      const bool has_trace = w.trace.has_value();
      if (has_trace != (w.level != MatchLevel::unverified))
        flags_consistent = false;
      if (!has_trace) {
        ++unverified;
        continue;
      }
      ++verified;
      std::optional<CatalogEntry> src = resolve(w.source);
      if (!src) {
        replay_ok = false;
        continue;
      }
      NLieAlgebra a = src->instantiate(w.params);
      if (!is_trace(a, *w.trace) || induce(a, *w.trace).sc().empty())
        replay_ok = false;
    }
  }
  expect_true(r, "witness flags consistent with recorded traces",
              flags_consistent);
  expect_true(r, "every recorded witness trace vanishes on brackets and "
                 "induces a nonzero table",
              replay_ok);
  expect_eq(r, "verified witnesses", verified, 12);
  expect_eq(r, "unverified witnesses (reported honestly)", unverified, 2);

  bool gl2_witness = false;
  for (const InducedByRow& row : table)
    for (const InducedByWitness& w : row.witnesses)
      if (w.source == "gl2")
        gl2_witness = w.level != MatchLevel::unverified && w.trace &&
                      *w.trace == trace_of({0, 0, 0, 1});
  expect_true(r, "gl2 witness verified with the x4 trace", gl2_witness);
  expect_true(r, "inducing gl2 by x4 reproduces the three-bracket table",
              induce(catalog_algebra("gl2", "gl2"), trace_of({0, 0, 0, 1})) ==
                  gl2_ternary_table());

  bool l3_ok = false;
  for (const InducedByRow& row : table) {
    if (row.target_dim != 3) continue;
    for (const InducedByWitness& w : row.witnesses) {
      if (w.source != "L(3,-1)" || !w.trace) continue;
      NLieAlgebra b = catalog_algebra("lie3", w.source, w.params);
      NLieAlgebra target(3, 3);
      target.set_bracket({0, 1, 2}, {1, 0, 0});
      l3_ok = w.level == MatchLevel::exact && induce(b, *w.trace) == target;
    }
  }
  expect_true(r,
              "L(3,-1) induces the non-abelian three-dimensional ternary "
              "table exactly",
              l3_ok);
}

void claim_growth_survey(ClaimResult& r, const std::vector<CorpusItem>& items,
                         const std::vector<InducedPair>& pairs) {
  // the cited pairs are asserted ...
  NLieAlgebra g = catalog_algebra("gl2", "gl2");
  NLieAlgebra gt = induce(g, trace_of({0, 0, 0, 1}));
  expect_eq(r, "gl2 by x4: dim Z1 before",
            cocycle_space(g, 1, Coefficients::adjoint).dim(), 4);
  expect_eq(r, "gl2 by x4: dim Z1 after",
            cocycle_space(gt, 1, Coefficients::adjoint).dim(), 7);
  expect_eq(r, "gl2 by x4: dim H1 before", h1_adjoint_dim(g), 1);
  expect_eq(r, "gl2 by x4: dim H1 after", h1_adjoint_dim(gt), 1);
  struct Cited {
    const char* name;
    Vec tau;
    const char* tau_text;
    int before;
    int after;
  };
  for (const Cited& c : std::vector<Cited>{
           {"M4", {1, 1, 0, 1}, "x1+x2+x4", 6, 6},
           {"M5", {1, 0, 0, 0}, "x1", 8, 9},
           {"M8", {1, 0, 1, 0}, "x1+x3", 0, 4}}) {
    NLieAlgebra a = catalog_algebra("lie4_solvable", c.name);
    expect_eq(r, std::string(c.name) + " by " + c.tau_text + ": dim H1 before",
              h1_adjoint_dim(a), c.before);
    expect_eq(r, std::string(c.name) + " by " + c.tau_text + ": dim H1 after",
              h1_adjoint_dim(induce(a, trace_of(c.tau))), c.after);
  }

  // ... the full survey is reported, not asserted
  std::vector<std::pair<int, int>> base_dims;
  base_dims.reserve(items.size());
  for (const CorpusItem& it : items)
    base_dims.emplace_back(
        cocycle_space(it.algebra, 1, Coefficients::adjoint).dim(),
        h1_adjoint_dim(it.algebra));
  note(r, "survey over every catalog algebra and trace basis vector "
          "(reported only):");
  std::size_t prev_item = items.size();
  int tau_index = 0;
  for (const InducedPair& p : pairs) {
    tau_index = (p.item == prev_item) ? tau_index + 1 : 1;
    prev_item = p.item;
    const auto [z1, h1] = base_dims[p.item];
    note(r, "  " + items[p.item].label + " | tau b" +
                std::to_string(tau_index) + " | Z1 " + std::to_string(z1) +
                " -> " +
                std::to_string(
                    cocycle_space(p.induced, 1, Coefficients::adjoint).dim()) +
                " | H1 " + std::to_string(h1) + " -> " +
                std::to_string(h1_adjoint_dim(p.induced)));
  }
  note(r, "induced brackets surveyed: " + std::to_string(pairs.size()));
}

}  // namespace

std::vector<ClaimResult> run_reproduction_suite() {
  std::mt19937_64 eng(0x6e4c696553756974ULL);
  const std::vector<CorpusItem> items = build_corpus();
  const std::vector<InducedPair> pairs = build_pairs(items);

  struct Claim {
    int number;
    const char* label;
    std::function<void(ClaimResult&)> run;
  };
  const std::vector<Claim> claims = {
      {1, "gl2 degree-1 cohomology before and after induction",
       [&](ClaimResult& r) { claim_gl2_cohomology(r); }},
      {2, "four-dimensional solvable examples: degree-1 cohomology under "
          "induction",
       [&](ClaimResult& r) { claim_solvable_cohomology(r); }},
      {3, "extension example: forced cocycle components and induced "
          "(non-)triviality",
       [&](ClaimResult& r) { claim_extension_example(r); }},
      {4, "every induced bracket is two-step solvable",
       [&](ClaimResult& r) { claim_induced_solvable(r, items, pairs); }},
      {5, "central descending series under induction",
       [&](ClaimResult& r) { claim_central_series(r, items, pairs); }},
      {6, "composite of the coboundary operators vanishes on random cochains",
       [&](ClaimResult& r) { claim_d2_after_d1(r, items, eng); }},
      {7, "central extensions satisfy the fundamental identity exactly for "
          "cocycles",
       [&](ClaimResult& r) {
         claim_extension_characterization(r, items, eng);
       }},
      {8, "central extension commutes with trace induction",
       [&](ClaimResult& r) {
         claim_extension_induction_commute(r, items, eng);
       }},
      {9, "recognition coverage of the ternary catalog",
       [&](ClaimResult& r) { claim_recognition_coverage(r); }},
      {10, "induced-by table witnesses",
       [&](ClaimResult& r) { claim_induced_by_table(r); }},
      {11, "degree-1 growth survey across the catalog",
       [&](ClaimResult& r) { claim_growth_survey(r, items, pairs); }},
  };

  std::vector<ClaimResult> out;
  out.reserve(claims.size());
  for (const Claim& c : claims) {
    ClaimResult r{c.number, c.label, true, {}};
    try {
      c.run(r);
    } catch (const std::exception& e) {
      r.pass = false;
      r.details.push_back(std::string("unexpected exception: ") + e.what());
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace nlie
