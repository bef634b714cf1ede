#pragma once

/*
 * Structural analysis of n-ary skew algebras: products of subspaces,
 * subalgebra/ideal tests, derived and central descending series, the
 * center, and solvability/nilpotency classes.
 *
 * Also decides whether an ideal of A remains an ideal of the trace-induced
 * algebra via the kernel criterion ([A,...,A] contained in J, or J contained
 * in ker tau), cross-checked against the direct closure test.
 */

#include "nlie/algebra.hpp"
#include "nlie/induce.hpp"
#include "nlie/subspace.hpp"

#include <optional>
#include <vector>

namespace nlie {

/// Span of all brackets [v_1,...,v_n] with v_i running over a basis of
/// factors[i].  Needs one factor per bracket slot; multilinearity makes
/// basis sampling complete.
Subspace product_subspace(const NLieAlgebra& a,
                          const std::vector<Subspace>& factors);

/// [A,...,A]: the product of arity() copies of the full space.
Subspace derived_subalgebra(const NLieAlgebra& a);

/// True when [S,...,S] is contained in S.
bool is_subalgebra(const NLieAlgebra& a, const Subspace& s);

/// True when [S,A,...,A] is contained in S (by skewness this covers every
/// argument position).
bool is_ideal(const NLieAlgebra& a, const Subspace& s);

/// A descending chain of subspaces computed from a starting ideal.
struct SeriesReport {
  enum class Kind { derived, central };

  Kind kind = Kind::derived;
  /// terms[0] is the starting ideal; each later term is contained in its
  /// predecessor, and no term repeats its predecessor.
  std::vector<Subspace> terms;
  /// True when the next term would reproduce the last one, so the chain
  /// cannot descend further (zero terms always stabilize).
  bool stabilized = false;
  /// Index of the first zero term, when the chain reaches {0}.
  std::optional<int> vanishing_index;

  /// Term at any index p, extending past the computed list by repeating the
  /// last term (valid once the chain has stabilized).
  const Subspace& term(int p) const;
};

/// Derived series of the ideal I: D^0 = I, D^{p+1} = [D^p,...,D^p] (arity
/// copies).  Computed until stabilization or max_p terms; max_p < 0 means
/// dim+1, enough for any strictly descending chain.  Throws
/// std::invalid_argument when I is not an ideal.
SeriesReport derived_series(const NLieAlgebra& a, const Subspace& ideal,
                            int max_p = -1);

/// Central descending series of the ideal I: C^0 = I,
/// C^{p+1} = [C^p,I,...,I].  Same conventions as derived_series.
SeriesReport central_series(const NLieAlgebra& a, const Subspace& ideal,
                            int max_p = -1);

/// Elements z with [z, e_{i_1}, ..., e_{i_{n-1}}] = 0 for every increasing
/// basis tuple: the nullspace of the stacked adjoint constraints.
Subspace center(const NLieAlgebra& a);

/// First p with D^p(A) = {0}, or nullopt when the derived series stabilizes
/// at a nonzero subspace.
std::optional<int> solvability_class(const NLieAlgebra& a);

/// First p with C^p(A) = {0}, or nullopt when the central series stabilizes
/// at a nonzero subspace.
std::optional<int> nilpotency_class(const NLieAlgebra& a);

/// Decides whether the ideal J of A is an ideal of induce(a, tau) by the
/// criterion "[A,...,A] contained in J, or J contained in ker tau", then
/// cross-checks against the direct closure test on the induced algebra.
/// Throws std::invalid_argument when J is not an ideal of A or tau is not
/// a trace.
bool ideal_in_induced(const NLieAlgebra& a, const TraceMap& tau,
                      const Subspace& j);

}  // namespace nlie
