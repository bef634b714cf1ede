#pragma once

/*
 * Building (n+1)-ary brackets out of n-ary ones.
 *
 * A trace is a linear functional vanishing on every bracket value.  Each
 * trace tau turns an n-ary bracket phi into the (n+1)-ary bracket
 *
 *   phi_tau(x_1,...,x_{n+1}) =
 *     sum_i (-1)^{i-1} tau(x_i) phi(x_1,...,^x_i,...,x_{n+1})
 *
 * which is n+1-Lie whenever phi is n-Lie.  This header also composes traces
 * with derivations (which yields another trace) and searches for a unit:
 * an element u with [u, x_1,...,x_n]_tau = [x_1,...,x_n] for all arguments.
 */

#include "nlie/algebra.hpp"
#include "nlie/subspace.hpp"

#include <optional>

namespace nlie {

/// Linear functional in basis coordinates.
struct TraceMap {
  Vec coeffs;

  Rational apply(const Element& v) const;

  friend bool operator==(const TraceMap& a, const TraceMap& b) {
    return a.coeffs == b.coeffs;
  }
};

/// All functionals vanishing on every bracket value, as a canonical
/// subspace of dual coordinates (the kernel of the stacked value matrix).
Subspace trace_space(const NLieAlgebra& a);

/// True iff tau kills every structure constant value.
bool is_trace(const NLieAlgebra& a, const TraceMap& tau);

/// The induced bracket of arity n+1 on the same space.  Requires tau to be
/// a trace (std::invalid_argument otherwise).  The result is verified to
/// satisfy the fundamental identity and to admit tau as a trace again; a
/// failure of either check (possible only if the input bracket was not
/// n-Lie) raises std::invalid_argument.
NLieAlgebra induce(const NLieAlgebra& a, const TraceMap& tau);

/// tau o f.  Requires f to be a derivation of a (std::invalid_argument
/// otherwise); if tau is a trace the result is one as well.
TraceMap compose_trace_derivation(const NLieAlgebra& a, const TraceMap& tau,
                                  const Matrix& f);

/// Solves [u, x_1,...,x_n]_tau = [x_1,...,x_n] over all basis tuples and
/// returns the echelon particular solution (free coordinates zero), or
/// nullopt when no unit exists.  Requires tau to be a trace.
std::optional<Element> find_unit(const NLieAlgebra& a, const TraceMap& tau);

}  // namespace nlie
