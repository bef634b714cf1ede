/* One-dimensional central extensions of n-Lie algebras.
 *
 * A skew n-linear form omega on an algebra A defines a bracket on
 * A + span{c} by
 *
 *     [x_1, ..., x_n]' = [x_1, ..., x_n] + omega(x_1, ..., x_n) c
 *
 * with c central (any bracket containing c vanishes).  The result satisfies
 * the fundamental identity exactly when omega is a 2-cocycle with scalar
 * coefficients, and two cocycles produce equivalent extensions exactly when
 * they differ by a coboundary.  Extensions also travel along the
 * trace-induction functor: extending the induced algebra by the induced
 * cocycle gives the same structure constants as inducing the extended algebra
 * by the trace that reads c as zero.
 */
#pragma once

#include "nlie/algebra.hpp"
#include "nlie/cohomology.hpp"
#include "nlie/induce.hpp"

namespace nlie {

/// A central extension bundled with the data that produced it.  The central
/// generator is always the last basis vector of `total`.
struct CentralExtension {
  NLieAlgebra base;
  ScalCochain2 omega;
  NLieAlgebra total;
  int central_index = 0;  ///< index of c in total, equal to base.dim()
};

/// Builds the extension bracket without checking the cocycle law.  The result
/// is a well-defined skew product but need not satisfy the fundamental
/// identity; pair with NLieAlgebra-level checks to demonstrate the
/// equivalence between the identity and the cocycle condition.
NLieAlgebra build_extension_total(const NLieAlgebra& a,
                                  const ScalCochain2& omega);

/// Extends `a` by the 2-cocycle `omega`.  Throws std::invalid_argument if
/// omega fails the cocycle law, naming a grid point where the defect is
/// nonzero.
CentralExtension central_extend(const NLieAlgebra& a,
                                const ScalCochain2& omega);

/// The trace on the extension that restricts to `tau` on the base and reads
/// the central generator as zero.
TraceMap extend_trace(const NLieAlgebra& a, const TraceMap& tau);

/// True when the extension splits, i.e. omega is a coboundary.  Throws
/// std::invalid_argument if omega is not a cocycle.
bool is_trivial_extension(const NLieAlgebra& a, const ScalCochain2& omega);

/// True when the two cocycles define equivalent extensions, i.e. represent
/// the same cohomology class.  Throws std::invalid_argument if either input
/// fails the cocycle law.
bool extensions_equivalent(const NLieAlgebra& a, const ScalCochain2& omega1,
                           const ScalCochain2& omega2);

/// Carries a central extension along trace induction: returns the extension
/// of induce(a, tau) by the induced cocycle.  Requires tau to be a trace and
/// omega a cocycle satisfying the transfer conditions (std::invalid_argument
/// otherwise).  Internally cross-checks that the result coincides with
/// inducing the extended algebra by the extended trace, and throws
/// std::logic_error if the two constructions ever disagreed.
CentralExtension induce_extension(const NLieAlgebra& a, const TraceMap& tau,
                                  const ScalCochain2& omega);

}  // namespace nlie
