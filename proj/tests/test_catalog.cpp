#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/catalog.hpp"
#include "nlie/cohomology.hpp"
#include "nlie/structure.hpp"
#include "support/fixtures.hpp"

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

using namespace nlie;

namespace {

NLieAlgebra instantiate(const std::string& group, const std::string& name,
                        std::vector<Rational> params = {}, int arity = 0) {
  auto e = find_entry(group, name, arity);
  REQUIRE(e.has_value());
  return e->instantiate(params);
}

/// The arity-3 part of the catalog: every entry whose bracket is ternary.
std::vector<CatalogEntry> ternary_entries() {
  std::vector<CatalogEntry> out;
  for (CatalogEntry& e : full_catalog())
    if (e.arity == 3) out.push_back(std::move(e));
  return out;
}

}  // namespace

TEST_CASE("every entry instantiates to a well-defined bracket at each sample") {
  int checked = 0;
  for (const CatalogEntry& e : full_catalog()) {
    CAPTURE(e.group);
    CAPTURE(e.name);
    REQUIRE(!e.samples.empty());
    for (const auto& sample : e.samples) {
      NLieAlgebra a = e.instantiate(sample);
      CHECK(a.arity() == e.arity);
      CHECK(a.dim() == e.dim);
      CHECK(check_fundamental_identity(a).empty());
      ++checked;
    }
  }
  CHECK(checked >= 75);  // at least one sample per entry
}

TEST_CASE("catalog size and uniqueness of entry keys") {
  std::vector<CatalogEntry> all = full_catalog();
  CHECK(all.size() == 75);
  std::set<std::tuple<std::string, std::string, int>> keys;
  for (const CatalogEntry& e : all)
    CHECK(keys.insert({e.group, e.name, e.arity}).second);
}

TEST_CASE("the catalog reproduces the shared fixtures") {
  CHECK(instantiate("lie4_solvable", "M4") == testsupport::m4());
  CHECK(instantiate("lie4_solvable", "M5") == testsupport::m5());
  CHECK(instantiate("lie4_solvable", "M8") == testsupport::m8());
  CHECK(instantiate("gl2", "gl2") == testsupport::gl2());
  CHECK(instantiate("filippov", "3f", {1, 1, 1, 1}, 3) ==
        testsupport::simple_3lie_dim4());
  CHECK(instantiate("bai", "3a", {}, 3) == testsupport::fivedim_3lie_chain());
}

TEST_CASE("list_filippov covers the advertised case split") {
  auto names = [](const std::vector<CatalogEntry>& v) {
    std::vector<std::string> out;
    for (const CatalogEntry& e : v) out.push_back(e.name);
    return out;
  };
  CHECK(names(list_filippov(2, 1)) == std::vector<std::string>{"1"});
  CHECK(names(list_filippov(2, 2)) == std::vector<std::string>{"2a", "2b"});
  // no diagonal family of intermediate rank exists below arity 3
  CHECK(names(list_filippov(2, 3)) ==
        std::vector<std::string>{"3a", "3b", "3c", "3d", "3f"});
  CHECK(names(list_filippov(3, 4)) ==
        std::vector<std::string>{"3a", "3b", "3c", "3d", "3e", "3f"});
  CHECK(names(list_filippov(3, 2)) == std::vector<std::string>{"1"});

  CHECK_THROWS_AS(list_filippov(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(list_filippov(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(list_filippov(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(list_filippov(1, 1), std::invalid_argument);
}

TEST_CASE("list_bai covers the advertised case split") {
  std::vector<CatalogEntry> b2 = list_bai(2);
  std::vector<CatalogEntry> b3 = list_bai(3);
  CHECK(b2.size() == 17);  // the rank-parameterized families are empty at n=2
  CHECK(b3.size() == 19);
  for (const CatalogEntry& e : b2) CHECK(e.dim == 4);
  for (const CatalogEntry& e : b3) CHECK(e.dim == 5);
  CHECK(b3.back().name == "5b");
  CHECK_THROWS_AS(list_bai(1), std::invalid_argument);
  CHECK_FALSE(find_entry("bai", "5a", 2).has_value());
}

TEST_CASE("parameter counts are validated") {
  using doctest::Contains;
  auto m4 = find_entry("lie4_solvable", "M4");
  REQUIRE(m4);
  CHECK_THROWS_WITH_AS(m4->instantiate({1}), Contains("takes"),
                       std::invalid_argument);
  auto f3d = find_entry("filippov", "3d", 3);
  REQUIRE(f3d);
  CHECK_THROWS_WITH_AS(f3d->instantiate({1, 2, 3}), Contains("takes"),
                       std::invalid_argument);
  auto f3e = find_entry("filippov", "3e", 3);
  REQUIRE(f3e);
  CHECK(f3e->parameters.size() == 3);
  CHECK(f3e->min_params == 3);
  CHECK_THROWS_WITH_AS(f3e->instantiate({1, 1}), Contains("takes"),
                       std::invalid_argument);
}

TEST_CASE("admissibility constraints reject degenerate parameters") {
  // determinant condition of the two-line family
  CHECK_THROWS_AS(instantiate("filippov", "3d", {1, 2, 2, 4}, 3),
                  std::invalid_argument);
  CHECK(check_fundamental_identity(
            instantiate("filippov", "3d", {1, 2, 3, 4}, 3))
            .empty());
  // nonzero diagonal coefficients
  CHECK_THROWS_AS(instantiate("filippov", "3e", {0, 1, 1}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate("filippov", "3f", {1, 1, 1, 0}, 3),
                  std::invalid_argument);
  CHECK_THROWS_AS(instantiate("bai", "3e", {0}, 3), std::invalid_argument);
  // beta must avoid 0 and 1
  CHECK_THROWS_AS(instantiate("bai", "4e", {0}, 3), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("bai", "4e", {1}, 2), std::invalid_argument);
  // rank parameter: integer in 4..n+1
  CHECK(instantiate("bai", "5a", {4}, 3).dim() == 5);
  CHECK_THROWS_AS(instantiate("bai", "5a", {3}, 3), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("bai", "5a", {5}, 3), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("bai", "5b", {Rational(7, 2)}, 3),
                  std::invalid_argument);
  // M7's coefficient alternative
  CHECK_THROWS_AS(instantiate("lie4_solvable", "M7_a_b", {2, 3}),
                  std::invalid_argument);
  CHECK(check_fundamental_identity(
            instantiate("lie4_solvable", "M7_a_b", {5, 0}))
            .empty());
  // M9 needs an irreducible characteristic polynomial: 1 + 4a must not be
  // a rational square
  CHECK_THROWS_AS(instantiate("lie4_solvable", "M9_a", {2}),
                  std::invalid_argument);  // 1 + 8 = 9
  CHECK_THROWS_AS(instantiate("lie4_solvable", "M9_a", {6}),
                  std::invalid_argument);  // 25
  CHECK_THROWS_AS(instantiate("lie4_solvable", "M9_a", {0}),
                  std::invalid_argument);  // 1
  CHECK_THROWS_AS(instantiate("lie4_solvable", "M9_a", {Rational(3, 4)}),
                  std::invalid_argument);  // 4
  CHECK_THROWS_AS(instantiate("lie4_solvable", "M9_a", {Rational(-1, 4)}),
                  std::invalid_argument);  // 0
  CHECK(check_fundamental_identity(
            instantiate("lie4_solvable", "M9_a", {Rational(1, 4)}))
            .empty());  // 1 + 1 = 2, not a square
  // scaling normalizations of the three-dimensional list
  CHECK_THROWS_AS(instantiate("lie3", "L(3,2,a)", {0}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("lie3", "L(3,2,a)", {2}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate("lie3", "L(3,2,a)", {-2}), std::invalid_argument);
  CHECK(instantiate("lie3", "L(3,2,a)", {-1}).dim() == 3);
  CHECK(instantiate("lie3", "L(3,2,a)", {Rational(1, 2)}).dim() == 3);
  CHECK_THROWS_AS(instantiate("lie3", "L(3,4,a)", {-1}), std::invalid_argument);
  CHECK(instantiate("lie3", "L(3,4,a)", {0}).dim() == 3);
}

TEST_CASE("find_entry narrows by group, name and arity") {
  auto e2 = find_entry("bai", "4e");
  REQUIRE(e2);
  CHECK(e2->arity == 2);  // first match in catalog order
  auto e3 = find_entry("bai", "4e", 3);
  REQUIRE(e3);
  CHECK(e3->arity == 3);
  CHECK(e3->dim == 5);
  auto f = find_entry("filippov", "2b", 3);
  REQUIRE(f);
  CHECK(f->dim == 3);
  CHECK_FALSE(find_entry("lie4_solvable", "M10").has_value());
  CHECK_FALSE(find_entry("nope", "M4").has_value());
  CHECK_FALSE(find_entry("filippov", "3e", 2).has_value());
}

TEST_CASE("invariant signatures of the small fixtures") {
  InvariantSignature g = invariant_signature(testsupport::gl2());
  CHECK(g.dim == 4);
  CHECK(g.arity == 2);
  CHECK(g.derived_dim == 3);
  CHECK(g.center_dim == 1);
  CHECK_FALSE(g.solvability.has_value());
  CHECK_FALSE(g.nilpotency.has_value());
  CHECK(g.derivation_dim == 4);
  CHECK(g.outer_derivation_dim == 1);

  InvariantSignature m = invariant_signature(testsupport::m4());
  CHECK(m.derived_dim == 1);
  CHECK(m.center_dim == 2);
  CHECK(m.solvability == 2);
  CHECK_FALSE(m.nilpotency.has_value());
  CHECK(m.derivation_dim == 8);
  CHECK(m.outer_derivation_dim == 6);

  InvariantSignature z = invariant_signature(NLieAlgebra(2, 3));
  CHECK(z.derived_dim == 0);
  CHECK(z.center_dim == 3);
  CHECK(z.solvability == 1);
  CHECK(z.nilpotency == 1);
  CHECK(z.derivation_dim == 9);
  CHECK(z.outer_derivation_dim == 9);

  CHECK(g == invariant_signature(instantiate("gl2", "gl2")));
  CHECK_FALSE(g == m);
}

TEST_CASE("signature matching filters the catalog down to lookalikes") {
  // m4 is isomorphic to the affine line plus two abelian directions, which
  // the dimension-n+2 split lists as its second non-central case; both must
  // survive the filter and nothing else does
  std::vector<CatalogEntry> hits =
      signature_match(testsupport::m4(), full_catalog());
  std::set<std::pair<std::string, std::string>> names;
  for (const CatalogEntry& e : hits) {
    CHECK(e.dim == 4);
    CHECK(e.arity == 2);
    names.insert({e.group, e.name});
  }
  CHECK(names ==
        std::set<std::pair<std::string, std::string>>{
            {"bai", "2b"}, {"lie4_solvable", "M4"}});

  // nothing in the catalog has the signature of a 5-dim binary abelian
  CHECK(signature_match(NLieAlgebra(2, 6), full_catalog()).empty());
}

TEST_CASE("recognition round-trips every recognizable ternary entry") {
  const std::set<std::pair<std::string, std::string>> not_recognizable = {
      {"filippov", "3f"}, {"bai", "5a"}, {"bai", "5b"}};
  const std::map<std::pair<std::string, std::string>, int> expected_pivot = {
      {{"filippov", "1"}, 0},  {{"filippov", "2a"}, 0},
      {{"filippov", "2b"}, 1}, {{"filippov", "3a"}, 0},
      {{"filippov", "3b"}, 1}, {{"filippov", "3c"}, 1},
      {{"filippov", "3d"}, 0}, {{"filippov", "3e"}, 3},
      {{"bai", "1"}, 0},       {{"bai", "2a"}, 1},
      {{"bai", "2b"}, 1},      {{"bai", "3a"}, 2},
      {{"bai", "3b"}, 3},      {{"bai", "3c"}, 2},
      {{"bai", "3d"}, 3},      {{"bai", "3e"}, 2},
      {{"bai", "3f"}, 3},      {{"bai", "3g"}, 2},
      {{"bai", "4a"}, 3},      {{"bai", "4b"}, 3},
      {{"bai", "4c"}, 3},      {{"bai", "4d"}, 3},
      {{"bai", "4e"}, 3},      {{"bai", "4f"}, 3},
      {{"bai", "4g"}, 3}};

  for (const CatalogEntry& e : ternary_entries()) {
    if (e.group == "gl2") continue;  // binary entry group, never ternary
    CAPTURE(e.group);
    CAPTURE(e.name);
    for (const auto& sample : e.samples) {
      NLieAlgebra a = e.instantiate(sample);
      auto res = recognize_induced(a);
      if (not_recognizable.count({e.group, e.name})) {
        CHECK_FALSE(res.has_value());
        // these cases carry a non-abelian derived subalgebra, which rules
        // out any presentation as a lower-arity bracket plus a trace
        CHECK(can_be_induced_obstruction(a));
      } else {
        REQUIRE(res.has_value());
        CHECK(res->pivot_index == expected_pivot.at({e.group, e.name}));
        CHECK(res->reduced.arity() == 2);
        CHECK(is_trace(res->reduced, res->trace));
        CHECK(induce(res->reduced, res->trace) == a);
        CHECK_FALSE(can_be_induced_obstruction(a));
      }
    }
  }
}

TEST_CASE("recognition recovers the source of the induced gl2 bracket") {
  auto res = recognize_induced(testsupport::gl2_induced_x4());
  REQUIRE(res.has_value());
  CHECK(res->pivot_index == 3);
  CHECK(res->reduced == testsupport::gl2());
  CHECK(res->trace.coeffs == Vec{0, 0, 0, 1});
}

TEST_CASE("recognition requires a ternary or higher bracket") {
  CHECK_THROWS_AS(recognize_induced(testsupport::gl2()),
                  std::invalid_argument);
}

TEST_CASE("the derived-subalgebra obstruction") {
  // non-abelian derived subalgebra: cannot arise from a trace construction
  CHECK(can_be_induced_obstruction(testsupport::gl2()));
  CHECK(can_be_induced_obstruction(testsupport::simple_3lie_dim4()));
  // abelian derived subalgebra: no verdict, and induced brackets land here
  CHECK_FALSE(can_be_induced_obstruction(testsupport::m4()));
  CHECK_FALSE(can_be_induced_obstruction(testsupport::m5()));
  CHECK_FALSE(can_be_induced_obstruction(testsupport::gl2_induced_x4()));
  CHECK_FALSE(can_be_induced_obstruction(testsupport::fivedim_3lie_chain()));
}

TEST_CASE("the induced-by survey reports honest witness levels") {
  std::vector<InducedByRow> table = induced_by_table();
  REQUIRE(table.size() == 5);

  // row layout: target, dimension, expected bracket count of a shape hit
  CHECK(table[0].target_dim == 4);
  CHECK(table[4].target_dim == 3);
  REQUIRE(table[0].witnesses.size() == 2);
  REQUIRE(table[1].witnesses.size() == 4);
  REQUIRE(table[2].witnesses.size() == 6);
  REQUIRE(table[3].witnesses.size() == 1);
  REQUIRE(table[4].witnesses.size() == 1);

  auto witness = [&](int row, int col) -> const InducedByWitness& {
    return table[static_cast<std::size_t>(row)]
        .witnesses[static_cast<std::size_t>(col)];
  };
  auto check_witness = [&](int row, int col, const std::string& source,
                           MatchLevel level, std::vector<Rational> params,
                           Vec trace_coeffs) {
    CAPTURE(row);
    CAPTURE(col);
    const InducedByWitness& w = witness(row, col);
    CHECK(w.source == source);
    CHECK(w.level == level);
    if (level == MatchLevel::unverified) {
      CHECK_FALSE(w.trace.has_value());
    } else {
      CHECK(w.params == params);
      REQUIRE(w.trace.has_value());
      CHECK(w.trace->coeffs == trace_coeffs);
    }
  };

  // single bracket producing a multiple of one of its own arguments
  check_witness(0, 0, "M3_a", MatchLevel::unverified, {}, {});
  check_witness(0, 1, "M4", MatchLevel::shape, {}, {0, 1, 0, 0});

  // single bracket producing a vector outside its arguments
  check_witness(1, 0, "M5", MatchLevel::shape, {}, {1, 0, 0, 0});
  check_witness(1, 1, "M12", MatchLevel::shape, {}, {0, 0, 0, 1});
  check_witness(1, 2, "M13_a", MatchLevel::shape, {1}, {0, 0, 0, 1});
  check_witness(1, 3, "M14_a", MatchLevel::shape, {1}, {0, 0, 0, 1});

  // two brackets with an invertible 2x2 coefficient block
  check_witness(2, 0, "M6_a_b", MatchLevel::shape, {0, 2}, {1, 0, 0, 0});
  check_witness(2, 1, "M7_a_b", MatchLevel::shape, {0, 1}, {1, 0, 0, 0});
  check_witness(2, 2, "M8", MatchLevel::shape, {}, {1, 0, 1, 0});
  check_witness(2, 3, "M9_a", MatchLevel::shape, {1}, {0, 0, 1, 0});
  check_witness(2, 4, "M11", MatchLevel::unverified, {}, {});
  check_witness(2, 5, "M13_a", MatchLevel::shape, {0}, {0, 0, 1, 0});

  // full three-bracket table through a common argument
  check_witness(3, 0, "gl2", MatchLevel::shape, {}, {0, 0, 0, 1});

  // the three-dimensional row is reproduced on the nose
  check_witness(4, 0, "L(3,-1)", MatchLevel::exact, {}, {0, 0, 1});
}

TEST_CASE("induced-by witnesses replay against the library") {
  const std::map<std::string, std::string> group_of = {
      {"gl2", "gl2"}, {"L(3,-1)", "lie3"}};
  const std::vector<std::size_t> expected_brackets = {1, 1, 2, 3, 1};
  std::vector<InducedByRow> table = induced_by_table();
  REQUIRE(table.size() == expected_brackets.size());
  for (std::size_t r = 0; r < table.size(); ++r) {
    for (const InducedByWitness& w : table[r].witnesses) {
      if (!w.trace.has_value()) continue;
      auto it = group_of.find(w.source);
      std::string group = it == group_of.end() ? "lie4_solvable" : it->second;
      NLieAlgebra base = instantiate(group, w.source, w.params);
      REQUIRE(is_trace(base, *w.trace));
      NLieAlgebra ind = induce(base, *w.trace);
      CHECK(ind.sc().size() == expected_brackets[r]);
    }
  }

  // the exact witness reproduces the printed three-dimensional target
  NLieAlgebra target(3, 3);
  target.set_bracket({0, 1, 2}, {1, 0, 0});
  NLieAlgebra base = instantiate("lie3", "L(3,-1)");
  CHECK(induce(base, TraceMap{{0, 0, 1}}) == target);
}
