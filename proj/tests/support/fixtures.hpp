#pragma once

/*
 * Hand-entered bracket tables shared across the test suite.  Indices are
 * 0-based (basis vector e1 is index 0).
 */

#include "nlie/algebra.hpp"

namespace testsupport {

/// gl2: [e1,e2] = 2 e2, [e1,e3] = -2 e3, [e2,e3] = e1; e4 central.
inline nlie::NLieAlgebra gl2() {
  nlie::NLieAlgebra a(2, 4);
  a.set_bracket({0, 1}, {0, 2, 0, 0});
  a.set_bracket({0, 2}, {0, 0, -2, 0});
  a.set_bracket({1, 2}, {1, 0, 0, 0});
  return a;
}

/// The ternary bracket obtained from gl2 and the trace reading off the e4
/// coordinate: [e1,e2,e4] = 2 e2, [e1,e3,e4] = -2 e3, [e2,e3,e4] = e1.
inline nlie::NLieAlgebra gl2_induced_x4() {
  nlie::NLieAlgebra a(3, 4);
  a.set_bracket({0, 1, 3}, {0, 2, 0, 0});
  a.set_bracket({0, 2, 3}, {0, 0, -2, 0});
  a.set_bracket({1, 2, 3}, {1, 0, 0, 0});
  return a;
}

/// Solvable 4-dim Lie algebra: [e2,e4] = e3, [e3,e4] = e3.
inline nlie::NLieAlgebra m4() {
  nlie::NLieAlgebra a(2, 4);
  a.set_bracket({1, 3}, {0, 0, 1, 0});
  a.set_bracket({2, 3}, {0, 0, 1, 0});
  return a;
}

/// Nilpotent 4-dim Lie algebra: [e2,e4] = e3.
inline nlie::NLieAlgebra m5() {
  nlie::NLieAlgebra a(2, 4);
  a.set_bracket({1, 3}, {0, 0, 1, 0});
  return a;
}

/// Direct sum of two solvable planes: [e1,e2] = e2, [e3,e4] = e4.
inline nlie::NLieAlgebra m8() {
  nlie::NLieAlgebra a(2, 4);
  a.set_bracket({0, 1}, {0, 1, 0, 0});
  a.set_bracket({2, 3}, {0, 0, 0, 1});
  return a;
}

/// Simple 4-dim ternary algebra: omitting e_i from (e1,...,e4) gives e_i.
inline nlie::NLieAlgebra simple_3lie_dim4() {
  nlie::NLieAlgebra a(3, 4);
  a.set_bracket({1, 2, 3}, {1, 0, 0, 0});
  a.set_bracket({0, 2, 3}, {0, 1, 0, 0});
  a.set_bracket({0, 1, 3}, {0, 0, 1, 0});
  a.set_bracket({0, 1, 2}, {0, 0, 0, 1});
  return a;
}

/// 5-dim ternary algebra: [e2,e3,e4] = e1, [e3,e4,e5] = e2.
inline nlie::NLieAlgebra fivedim_3lie_chain() {
  nlie::NLieAlgebra a(3, 5);
  a.set_bracket({1, 2, 3}, {1, 0, 0, 0, 0});
  a.set_bracket({2, 3, 4}, {0, 1, 0, 0, 0});
  return a;
}

}  // namespace testsupport
