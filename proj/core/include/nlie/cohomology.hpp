#pragma once

/*
 * Degree-1 and degree-2 cochain complexes of an n-ary skew algebra, with
 * values either in the algebra itself (adjoint) or in the scalars.
 *
 * A 1-cochain is a linear map A -> A (matrix) or a covector; a 2-cochain is
 * a fully skew n-linear map given by its values on strictly increasing
 * basis keys.  The coboundaries, written with fundamental objects
 * X = (x_1,...,x_{n-1}) acting by X.z = [x_1,...,x_{n-1},z], are
 *
 *   d1 f(X,z)     = -f(X.z) + X.f(z) + sum_i [x_1,...,f(x_i),...,x_{n-1},z]
 *   d2 psi(X,Y,z) = -psi(X.Y,z) - psi(Y,X.z) + psi(X,Y.z)
 *                   + X.psi(Y,z) - Y.psi(X,z) - (psi(X,.).Y).z
 *
 * and their scalar restrictions drop the action terms.  d1 vanishes exactly
 * on derivations (adjoint) and on functionals killing all bracket values
 * (scalar).  Every matrix assembled here uses one fixed ordering:
 * lexicographic keys, and coordinate index key*dim + i for algebra-valued
 * cochains.
 *
 * The second half of the file transfers cocycles to the trace-induced
 * algebra: a 2-cocycle phi of A with tau.phi = 0 (plus two sums that must
 * vanish, automatic for binary algebras) yields the 2-cocycle
 *
 *   phi_tau(x_1,...,x_{n+1}) = sum_i (-1)^{i-1} tau(x_i) phi(...,x_i^,...)
 *
 * of the induced (n+1)-ary algebra, by the same signed-omission shape as
 * the induced bracket itself.
 */

#include "nlie/algebra.hpp"
#include "nlie/induce.hpp"
#include "nlie/subspace.hpp"

#include <map>
#include <tuple>
#include <vector>

namespace nlie {

/// Degree-1 algebra-valued cochain: a linear map A -> A, column j = image
/// of the j-th basis vector.
using AdjCochain1 = Matrix;

/// Degree-2 algebra-valued cochain: skew n-linear map by its values on
/// strictly increasing basis keys (absent key = zero value).
using AdjCochain2 = std::map<MultiIndex, Element>;

/// Degree-1 scalar cochain: a covector.
using ScalCochain1 = Vec;

/// Degree-2 scalar cochain: skew n-linear form on increasing keys.
using ScalCochain2 = std::map<MultiIndex, Rational>;

/// Evaluation grid point of d2: two (n-1)-tuples and a basis index.
using CoboundaryGridKey = std::tuple<MultiIndex, MultiIndex, int>;

/// d2 output on the full grid (every grid point present, zero or not).
using AdjCochain3 = std::map<CoboundaryGridKey, Element>;
using ScalCochain3 = std::map<CoboundaryGridKey, Rational>;

bool all_zero(const AdjCochain3& values);
bool all_zero(const ScalCochain3& values);

/// Coefficient system of the complex.
enum class Coefficients { adjoint, scalar };

/// d1 of a linear map, as a degree-2 cochain (nonzero keys only).  The
/// result is empty exactly when f is a derivation.  Throws
/// std::invalid_argument on shape mismatch.
AdjCochain2 d1_adjoint(const NLieAlgebra& a, const AdjCochain1& f);

/// True when f satisfies f([x_1,...,x_n]) = sum_i [x_1,...,f(x_i),...,x_n].
bool is_derivation(const NLieAlgebra& a, const AdjCochain1& f);

/// d2 of an algebra-valued 2-cochain on the full evaluation grid.
AdjCochain3 d2_adjoint(const NLieAlgebra& a, const AdjCochain2& psi);

/// d1 of a covector: key -> -alpha([key]) (nonzero keys only).
ScalCochain2 d1_scalar(const NLieAlgebra& a, const ScalCochain1& alpha);

/// d2 of a scalar 2-cochain on the full evaluation grid.
ScalCochain3 d2_scalar(const NLieAlgebra& a, const ScalCochain2& omega);

/// Strictly increasing basis keys of degree-2 cochains, in the lexicographic
/// order used by every vectorization below.
std::vector<MultiIndex> cochain2_keys(const NLieAlgebra& a);

/// Vectorizations (row-major: matrix entry (i,j) -> i*dim + j; key k and
/// output coordinate i -> k*dim + i).
Vec adj1_to_vec(const AdjCochain1& f);
AdjCochain1 vec_to_adj1(int dim, const Vec& v);
Vec adj2_to_vec(const NLieAlgebra& a, const AdjCochain2& psi);
AdjCochain2 vec_to_adj2(const NLieAlgebra& a, const Vec& v);
Vec scal2_to_vec(const NLieAlgebra& a, const ScalCochain2& omega);
ScalCochain2 vec_to_scal2(const NLieAlgebra& a, const Vec& v);

/// Kernel of d1 on linear maps, inside K^{dim*dim}: the derivations.
Subspace derivation_space(const NLieAlgebra& a);

/// Span of the adjoint maps of all basis fundamental objects, inside
/// K^{dim*dim}: the inner derivations.
Subspace inner_derivation_space(const NLieAlgebra& a);

/// dim(derivations) - dim(inner derivations).
int h1_adjoint_dim(const NLieAlgebra& a);

/// Kernel of d1 on covectors; equals trace_space(a) exactly.
Subspace scalar_1cocycles(const NLieAlgebra& a);

/// Kernel of d^degree / image of d^{degree-1} in the fixed vectorization.
/// Degree must be 1 or 2.
Subspace cocycle_space(const NLieAlgebra& a, int degree, Coefficients coeffs);
Subspace coboundary_space(const NLieAlgebra& a, int degree,
                          Coefficients coeffs);
int cohomology_dim(const NLieAlgebra& a, int degree, Coefficients coeffs);

/// Decides whether the derivation f of A stays a derivation of
/// induce(a, tau): equivalent to the bracket induced by the composite
/// functional tau o f vanishing identically, and cross-checked against d1
/// on the induced algebra.  Throws std::invalid_argument when f is not a
/// derivation of A or tau is not a trace.
bool is_derivation_of_induced(const NLieAlgebra& a, const TraceMap& tau,
                              const AdjCochain1& f);

/// The three transfer conditions for an algebra-valued 2-cocycle phi: two
/// double sums over basis arguments that must vanish (identically true for
/// arity 2) and tau o phi = 0.
bool check_Z2ad_conditions(const NLieAlgebra& a, const TraceMap& tau,
                           const AdjCochain2& phi);

/// Signed-omission transfer of an algebra-valued 2-cocycle to the induced
/// algebra; validates the cocycle property and the three conditions, and
/// verifies the result is a 2-cocycle of induce(a, tau).  Throws
/// std::invalid_argument naming the first failing precondition.
AdjCochain2 induce_cochain2_adjoint(const NLieAlgebra& a, const TraceMap& tau,
                                    const AdjCochain2& phi);

/// The single transfer condition for a scalar 2-cocycle.
bool check_Z2scalar_condition(const NLieAlgebra& a, const TraceMap& tau,
                              const ScalCochain2& omega);

/// Signed-omission transfer of a scalar 2-cocycle to the induced algebra;
/// same validation scheme as the algebra-valued version.
ScalCochain2 induce_cochain2_scalar(const NLieAlgebra& a, const TraceMap& tau,
                                    const ScalCochain2& omega);

/// Verifies, on every increasing basis tuple, that d1 of a covector taken
/// in the induced algebra equals the signed-omission combination of base
/// d1 values.
bool d1_tau_compatibility(const NLieAlgebra& a, const TraceMap& tau,
                          const ScalCochain1& alpha);

/// Same-class tests: both arguments must be cocycles of the matching degree
/// (std::invalid_argument otherwise); decides membership of the difference
/// in the coboundary space.
bool same_cohomology_class(const NLieAlgebra& a, const AdjCochain1& f1,
                           const AdjCochain1& f2);
bool same_cohomology_class(const NLieAlgebra& a, const ScalCochain1& a1,
                           const ScalCochain1& a2);
bool same_cohomology_class(const NLieAlgebra& a, const AdjCochain2& psi1,
                           const AdjCochain2& psi2);
bool same_cohomology_class(const NLieAlgebra& a, const ScalCochain2& w1,
                           const ScalCochain2& w2);

}  // namespace nlie
