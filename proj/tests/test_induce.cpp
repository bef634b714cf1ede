#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/induce.hpp"
#include "support/dense_bracket.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <stdexcept>

using namespace nlie;

namespace {

TraceMap trace_of(Vec coeffs) { return TraceMap{std::move(coeffs)}; }

}  // namespace

TEST_CASE("trace spaces of the standard fixtures") {
  // gl2 values are 2e2, -2e3, e1, so traces read off the e4 coordinate
  Subspace t = trace_space(testsupport::gl2());
  CHECK(t.dim() == 1);
  CHECK(t.basis()[0] == Vec{0, 0, 0, 1});

  // single value e3: everything with third coordinate zero
  Subspace t5 = trace_space(testsupport::m5());
  CHECK(t5.dim() == 3);
  CHECK(t5.basis()[0] == Vec{1, 0, 0, 0});
  CHECK(t5.basis()[1] == Vec{0, 1, 0, 0});
  CHECK(t5.basis()[2] == Vec{0, 0, 0, 1});

  CHECK(trace_space(NLieAlgebra(2, 3)) == Subspace::full(3));
  CHECK(trace_space(NLieAlgebra(2, 0)) == Subspace::full(0));
}

TEST_CASE("is_trace") {
  NLieAlgebra g = testsupport::gl2();
  CHECK(is_trace(g, trace_of({0, 0, 0, 1})));
  CHECK(is_trace(g, trace_of({0, 0, 0, 0})));
  CHECK_FALSE(is_trace(g, trace_of({1, 0, 0, 0})));  // tau(e1) survives [e2,e3]
  CHECK_THROWS_AS(is_trace(g, trace_of({1, 0})), std::invalid_argument);
}

TEST_CASE("inducing gl2 along its trace gives the known ternary table") {
  NLieAlgebra ind = induce(testsupport::gl2(), trace_of({0, 0, 0, 1}));
  CHECK(ind == testsupport::gl2_induced_x4());
  CHECK(check_fundamental_identity(ind).empty());
  CHECK(testsupport::dense_fi_holds(
      testsupport::DenseBracket::from_algebra(ind)));
}

TEST_CASE("inducing with the zero functional is abelian") {
  NLieAlgebra ind = induce(testsupport::gl2(), trace_of({0, 0, 0, 0}));
  CHECK(ind.arity() == 3);
  CHECK(ind.dim() == 4);
  CHECK(ind.sc().empty());
}

TEST_CASE("induced tables of the solvable fixtures") {
  NLieAlgebra m5i = induce(testsupport::m5(), trace_of({1, 0, 0, 0}));
  NLieAlgebra m5e(3, 4);
  m5e.set_bracket({0, 1, 3}, {0, 0, 1, 0});
  CHECK(m5i == m5e);

  NLieAlgebra m8i = induce(testsupport::m8(), trace_of({1, 0, 1, 0}));
  NLieAlgebra m8e(3, 4);
  m8e.set_bracket({0, 1, 2}, {0, 1, 0, 0});
  m8e.set_bracket({0, 2, 3}, {0, 0, 0, 1});
  CHECK(m8i == m8e);

  NLieAlgebra m4i = induce(testsupport::m4(), trace_of({1, 1, 0, 1}));
  NLieAlgebra m4e(3, 4);
  m4e.set_bracket({0, 1, 3}, {0, 0, 1, 0});
  m4e.set_bracket({0, 2, 3}, {0, 0, 1, 0});
  m4e.set_bracket({1, 2, 3}, {0, 0, 1, 0});
  CHECK(m4i == m4e);
}

TEST_CASE("induce validates its inputs") {
  CHECK_THROWS_AS(induce(testsupport::gl2(), trace_of({1, 0, 0, 0})),
                  std::invalid_argument);
  CHECK_THROWS_AS(induce(testsupport::gl2(), trace_of({0, 0})),
                  std::invalid_argument);
}

TEST_CASE("induced bracket is linear in the trace") {
  NLieAlgebra m5 = testsupport::m5();
  NLieAlgebra once = induce(m5, trace_of({1, 0, 0, 0}));
  NLieAlgebra scaled = induce(m5, trace_of({Rational(3, 2), 0, 0, 0}));
  for (const auto& [key, value] : once.sc()) {
    Element expect = value;
    for (Rational& x : expect) x *= Rational(3, 2);
    CHECK(scaled.bracket_key(key) == expect);
  }
  CHECK(scaled.sc().size() == once.sc().size());
}

TEST_CASE("iterating the construction on gl2 collapses to abelian") {
  NLieAlgebra ind = testsupport::gl2_induced_x4();
  Subspace t = trace_space(ind);
  CHECK(t.dim() == 1);
  CHECK(t.basis()[0] == Vec{0, 0, 0, 1});
  NLieAlgebra twice = induce(ind, trace_of({0, 0, 0, 1}));
  CHECK(twice.arity() == 4);
  CHECK(twice.sc().empty());
}

TEST_CASE("trace composed with a derivation") {
  NLieAlgebra g = testsupport::gl2();
  // f(e4) = e4, zero elsewhere: a derivation since e4 is central and
  // every bracket value avoids e4
  Matrix f(4, 4);
  f.at(3, 3) = 1;
  TraceMap out = compose_trace_derivation(g, trace_of({0, 0, 0, 1}), f);
  CHECK(out.coeffs == Vec{0, 0, 0, 1});
  CHECK(is_trace(g, out));

  // f(e2) = e1 fails the derivation law on [e1,e2]
  Matrix bad(4, 4);
  bad.at(0, 1) = 1;
  CHECK_THROWS_AS(compose_trace_derivation(g, trace_of({0, 0, 0, 1}), bad),
                  std::invalid_argument);
}

TEST_CASE("unit elements") {
  // gl2 with its trace: u = e4 is the unique unit
  auto u = find_unit(testsupport::gl2(), trace_of({0, 0, 0, 1}));
  REQUIRE(u.has_value());
  CHECK(*u == Element{0, 0, 0, 1});

  // nilpotent fixture: the echelon solution is e1 (third coordinate free)
  auto u5 = find_unit(testsupport::m5(), trace_of({1, 0, 0, 0}));
  REQUIRE(u5.has_value());
  CHECK(*u5 == Element{1, 0, 0, 0});

  // no unit for the split solvable fixture with this trace
  CHECK_FALSE(find_unit(testsupport::m8(), trace_of({1, 0, 1, 0})).has_value());

  // abelian: zero element works
  auto ua = find_unit(NLieAlgebra(2, 3), trace_of({1, 1, 1}));
  REQUIRE(ua.has_value());
  CHECK(*ua == Element{0, 0, 0});

  CHECK_THROWS_AS(find_unit(testsupport::gl2(), trace_of({1, 0, 0, 0})),
                  std::invalid_argument);
}

TEST_CASE("a found unit works on random elements") {
  testsupport::TestRng rng(0x5eed0020);
  for (auto [a, tau] :
       {std::pair{testsupport::gl2(), trace_of({0, 0, 0, 1})},
        std::pair{testsupport::m5(), trace_of({1, 0, 0, 0})}}) {
    NLieAlgebra ind = induce(a, tau);
    auto u = find_unit(a, tau);
    REQUIRE(u.has_value());
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<Element> args;
      args.push_back(*u);
      std::vector<Element> plain;
      for (int k = 0; k < a.arity(); ++k) {
        Element v = rng.vec(a.dim(), 3);
        args.push_back(v);
        plain.push_back(v);
      }
      CHECK(ind.bracket(std::span<const Element>(args)) ==
            a.bracket(std::span<const Element>(plain)));
    }
  }
}

TEST_CASE("induced bracket matches a direct signed omission oracle") {
  // independent recomputation of the induced table via the dense oracle
  testsupport::TestRng rng(0x5eed0021);
  NLieAlgebra a = testsupport::m4();
  TraceMap tau = trace_of({1, 1, 0, 1});
  NLieAlgebra ind = induce(a, tau);
  testsupport::DenseBracket dense = testsupport::DenseBracket::from_algebra(a);
  for (int rep = 0; rep < 15; ++rep) {
    std::vector<Element> args;
    for (int k = 0; k < 3; ++k) args.push_back(rng.vec(4, 2));
    Element expect(4);
    for (int i = 0; i < 3; ++i) {
      std::vector<Vec> omitted;
      for (int j = 0; j < 3; ++j)
        if (j != i) omitted.push_back(args[j]);
      Vec v = dense.eval(omitted);
      Rational c = tau.apply(args[i]);
      if (i % 2 == 1) c = -c;
      for (int j = 0; j < 4; ++j) expect[j] += c * v[j];
    }
    CHECK(ind.bracket(std::span<const Element>(args)) == expect);
  }
}
