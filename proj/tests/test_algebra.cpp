#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nlie/algebra.hpp"
#include "support/dense_bracket.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

#include <stdexcept>

using namespace nlie;
using testsupport::DenseBracket;

TEST_CASE("multiindex invariants") {
  CHECK_THROWS_AS(MultiIndex({1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(MultiIndex({-1, 0}), std::invalid_argument);
  MultiIndex m({0, 2, 5});
  CHECK(m.size() == 3);
  CHECK(m[1] == 2);
  CHECK(m.erased(1) == MultiIndex({0, 5}));
  CHECK(m.contains(5));
  CHECK_FALSE(m.contains(1));
}

TEST_CASE("normalize_args examples") {
  auto n1 = normalize_args({1, 0});
  CHECK(n1.tuple == MultiIndex({0, 1}));
  CHECK(n1.sign == -1);

  auto n2 = normalize_args({0, 0, 2});
  CHECK(n2.sign == 0);

  auto n3 = normalize_args({2, 0, 1});
  CHECK(n3.tuple == MultiIndex({0, 1, 2}));
  CHECK(n3.sign == 1);  // two inversions

  auto n4 = normalize_args({});
  CHECK(n4.sign == 1);
  CHECK(n4.tuple.size() == 0);
}

TEST_CASE("increasing tuples enumeration") {
  auto t = increasing_tuples(4, 2);
  REQUIRE(t.size() == 6);
  CHECK(t.front() == MultiIndex({0, 1}));
  CHECK(t.back() == MultiIndex({2, 3}));
  CHECK(increasing_tuples(2, 3).empty());
  CHECK(increasing_tuples(3, 0).size() == 1);
  CHECK(increasing_tuples(0, 0).size() == 1);
}

TEST_CASE("algebra construction and structure constants") {
  CHECK_THROWS_AS(NLieAlgebra(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(NLieAlgebra(2, -1), std::invalid_argument);

  NLieAlgebra a(2, 3);
  // unsorted arguments pick up the permutation sign
  a.set_bracket({1, 0}, {0, 0, 1});
  CHECK(a.bracket_key(MultiIndex({0, 1})) == Element{0, 0, -1});
  // setting a zero value erases the key
  a.set_bracket({0, 1}, {0, 0, 0});
  CHECK(a.sc().empty());
  // repeated indices demand a zero value
  CHECK_THROWS_AS(a.set_bracket({1, 1}, {1, 0, 0}), std::invalid_argument);
  a.set_bracket({1, 1}, {0, 0, 0});  // allowed no-op

  NLieAlgebra b(2, 0);
  CHECK(b.bracket(std::initializer_list<Element>{Element{}, Element{}}).empty());
  CHECK(check_fundamental_identity(b).empty());

  // arity above dimension forces the abelian algebra
  NLieAlgebra c(4, 2);
  CHECK(c.sc().empty());
  CHECK(check_fundamental_identity(c).empty());
}

TEST_CASE("gl2 bracket values") {
  NLieAlgebra a = testsupport::gl2();
  CHECK(a.bracket({a.basis_element(0), a.basis_element(1)}) ==
        Element{0, 2, 0, 0});
  CHECK(a.bracket({a.basis_element(1), a.basis_element(0)}) ==
        Element{0, -2, 0, 0});
  // [e2+e3, e1] = -2 e2 + 2 e3
  Element v{0, 1, 1, 0};
  CHECK(a.bracket({v, a.basis_element(0)}) == Element{0, -2, 2, 0});
  // central element
  CHECK(a.bracket({a.basis_element(3), v}) == Element{0, 0, 0, 0});
}

TEST_CASE("bracket agrees with the dense oracle on random elements") {
  testsupport::TestRng rng(0x5eed0010);
  for (const NLieAlgebra& a :
       {testsupport::gl2(), testsupport::gl2_induced_x4(),
        testsupport::fivedim_3lie_chain(), testsupport::simple_3lie_dim4()}) {
    DenseBracket dense = DenseBracket::from_algebra(a);
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<Element> args;
      for (int k = 0; k < a.arity(); ++k) args.push_back(rng.vec(a.dim(), 3));
      CHECK(a.bracket(std::span<const Element>(args)) == dense.eval(args));
    }
  }
}

TEST_CASE("bracket is skew") {
  testsupport::TestRng rng(0x5eed0011);
  NLieAlgebra a = testsupport::fivedim_3lie_chain();
  for (int rep = 0; rep < 20; ++rep) {
    Element x = rng.vec(5, 3), y = rng.vec(5, 3), z = rng.vec(5, 3);
    // repeated argument kills the bracket
    CHECK(testsupport::vec_is_zero(a.bracket({x, x, z})));
    // swapping two arguments flips the sign
    Element pq = a.bracket({x, y, z});
    Element qp = a.bracket({y, x, z});
    for (int i = 0; i < 5; ++i) CHECK(pq[i] == -qp[i]);
  }
}

TEST_CASE("fundamental identity checker") {
  CHECK(check_fundamental_identity(testsupport::gl2()).empty());
  CHECK(check_fundamental_identity(testsupport::gl2_induced_x4()).empty());
  CHECK(check_fundamental_identity(testsupport::m4()).empty());
  CHECK(check_fundamental_identity(testsupport::simple_3lie_dim4()).empty());
  CHECK(check_fundamental_identity(testsupport::fivedim_3lie_chain()).empty());

  // mutating one constant of gl2 breaks the Jacobi identity
  NLieAlgebra broken = testsupport::gl2();
  broken.set_bracket({1, 2}, {0, 1, 0, 0});  // was e1
  auto violations = check_fundamental_identity(broken);
  CHECK_FALSE(violations.empty());
  for (const FiViolation& v : violations)
    CHECK_FALSE(testsupport::vec_is_zero(v.residual));
}

TEST_CASE("fi checker agrees with the dense oracle") {
  testsupport::TestRng rng(0x5eed0012);
  int disagreements = 0;
  for (int rep = 0; rep < 30; ++rep) {
    const int n = rng.int_in(2, 3);
    const int d = rng.int_in(std::max(2, n), 4);
    NLieAlgebra a(n, d);
    // sparse random table: mostly fails FI, occasionally passes
    for (const MultiIndex& key : increasing_tuples(d, n))
      if (rng.int_in(0, 2) == 0) {
        Element v = rng.vec(d, 2);
        a.set_bracket(key.indices(), v);
      }
    const bool lib = check_fundamental_identity(a).empty();
    const bool oracle = testsupport::dense_fi_holds(DenseBracket::from_algebra(a));
    if (lib != oracle) ++disagreements;
  }
  CHECK(disagreements == 0);
}

TEST_CASE("fundamental object action and product") {
  NLieAlgebra a = testsupport::gl2();
  FundamentalObject X{{a.basis_element(0)}};
  FundamentalObject Y{{a.basis_element(1)}};

  CHECK(fo_action(a, X, a.basis_element(1)) == Element{0, 2, 0, 0});

  // (e1).(e2) = ([e1,e2]) = (2 e2)
  FOSum p = fo_product(a, X, Y);
  REQUIRE(p.terms.size() == 1);
  CHECK(p.terms[0].coeff == Rational(1));
  REQUIRE(p.terms[0].factors.size() == 1);
  CHECK(p.terms[0].factors[0] == Element{0, 2, 0, 0});

  // zero factors are dropped
  FundamentalObject C{{a.basis_element(3)}};
  CHECK(fo_product(a, X, C).terms.empty());
}

TEST_CASE("leibniz rule and commutator identity for fundamental objects") {
  testsupport::TestRng rng(0x5eed0013);
  for (const NLieAlgebra& a :
       {testsupport::gl2(), testsupport::gl2_induced_x4(),
        testsupport::fivedim_3lie_chain(), testsupport::simple_3lie_dim4()}) {
    const int m = a.arity() - 1;
    for (int rep = 0; rep < 12; ++rep) {
      FundamentalObject X, Y;
      for (int k = 0; k < m; ++k) {
        X.factors.push_back(rng.vec(a.dim(), 2));
        Y.factors.push_back(rng.vec(a.dim(), 2));
      }
      Element z = rng.vec(a.dim(), 2);
      FOSum XY = fo_product(a, X, Y);
      FOSum YX = fo_product(a, Y, X);

      // X.(Y.z) = (X.Y).z + Y.(X.z)
      Element lhs = fo_action(a, X, fo_action(a, Y, z));
      Element rhs = fo_action(a, XY, z);
      Element yxz = fo_action(a, Y, fo_action(a, X, z));
      for (int i = 0; i < a.dim(); ++i) rhs[i] += yxz[i];
      CHECK(lhs == rhs);

      // ad_{X.Y} = ad_X ad_Y - ad_Y ad_X and ad_{X.Y} = -ad_{Y.X}
      Matrix adx = ad_matrix(a, X), ady = ad_matrix(a, Y);
      CHECK(ad_matrix(a, XY) == adx * ady - ady * adx);
      CHECK((ad_matrix(a, XY) + ad_matrix(a, YX)).is_zero());
    }
  }
}

TEST_CASE("fixing a first argument drops the arity by one") {
  NLieAlgebra ind = testsupport::gl2_induced_x4();
  // fixing e4 in the ternary table recovers the gl2 constants
  NLieAlgebra fixed = fix_element(ind, ind.basis_element(3));
  NLieAlgebra expected = testsupport::gl2();
  // [e4, x, y] = -[x, e4, y] = [x, y, e4]; signs must come out right
  CHECK(fixed == expected);

  // fixing a central element gives the abelian algebra
  NLieAlgebra ab = fix_element(testsupport::simple_3lie_dim4(),
                               Element{0, 0, 0, 0});
  CHECK(ab.sc().empty());
  CHECK(ab.arity() == 2);

  CHECK_THROWS_AS(fix_element(testsupport::gl2(), Element{1, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("algebra equality is structural") {
  CHECK(testsupport::gl2() == testsupport::gl2());
  NLieAlgebra a = testsupport::gl2();
  NLieAlgebra b = testsupport::gl2();
  b.set_bracket({0, 3}, {0, 0, 0, 1});
  CHECK(a != b);
  CHECK(NLieAlgebra(2, 3) != NLieAlgebra(3, 3));
  CHECK(NLieAlgebra(2, 3) != NLieAlgebra(2, 4));
}
