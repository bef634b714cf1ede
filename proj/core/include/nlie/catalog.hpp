/* Built-in classification tables of low-dimensional n-Lie algebras,
 * invariant signatures for necessary-condition lookup, and the
 * single-pivot recognition criterion for induced algebras.
 *
 * Four classification groups are encoded, each under its customary labels:
 *
 *   - "filippov":        n-Lie algebras of dimension at most n+1
 *                        (cases 1, 2a-2b, 3a-3f),
 *   - "bai":             n-Lie algebras of dimension n+2
 *                        (cases 1, 2a-2b, 3a-3g, 4a-4g, 5a-5b),
 *   - "lie3":            three-dimensional Lie algebras
 *                        (abelian, L(3,-1), L(3,1), ..., L(3,6)),
 *   - "lie4_solvable":   solvable four-dimensional Lie algebras
 *                        (abelian, M2, M3_a, ..., M14_a; the customary
 *                        numbering has no M10),
 *
 * plus gl2 (group "gl2"), which is not solvable and so belongs to no list
 * above but is needed as a worked example throughout.
 *
 * Recognition: if some basis vector e_p appears in every nonzero bracket and
 * no bracket value has a component along e_p, then dropping e_p from each
 * key (with the sign of moving it to the front) yields an algebra of one
 * lower arity which, together with the trace reading off the e_p coordinate,
 * induces the original algebra.  The scan is performed in the given basis
 * only; failure to find a pivot proves nothing.
 */
#pragma once

#include "nlie/algebra.hpp"
#include "nlie/induce.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nlie {

/// A named rational parameter of a catalog entry together with its
/// admissibility condition in human-readable form.
struct ParameterSlot {
  std::string name;
  std::string constraint;  ///< e.g. "a != 0", empty when unconstrained
};

/// One classification case: a parameterized family of algebras.
struct CatalogEntry {
  std::string name;   ///< case label, e.g. "2b", "L(3,5)", "M13_a"
  std::string group;  ///< "filippov", "bai", "lie3", "lie4_solvable", "gl2"
  int arity = 2;
  int dim = 0;
  std::vector<ParameterSlot> parameters;
  /// Minimum number of parameters accepted; less than parameters.size()
  /// only for families whose bracket count varies with the rank.
  std::size_t min_params = 0;
  /// Admissible sample parameter tuples used for signature matching and
  /// testing; one empty tuple for parameter-free entries.
  std::vector<std::vector<Rational>> samples;
  /// Where the case sits in its classification (case label, side
  /// conditions, isomorphism rules).
  std::string provenance;
  /// Constructs the algebra; throws std::invalid_argument on inadmissible
  /// parameter values, naming the violated constraint.
  std::function<NLieAlgebra(const std::vector<Rational>&)> build;

  /// Validates the parameter count, then builds.
  NLieAlgebra instantiate(const std::vector<Rational>& params) const;
};

/// Structural quantities preserved by isomorphism, used to narrow catalog
/// lookups.  Matching signatures are necessary, not sufficient, for
/// isomorphy.
struct InvariantSignature {
  int dim = 0;
  int arity = 0;
  int derived_dim = 0;
  int center_dim = 0;
  std::optional<int> solvability;  ///< nullopt = not solvable
  std::optional<int> nilpotency;   ///< nullopt = not nilpotent
  int derivation_dim = 0;
  int outer_derivation_dim = 0;

  friend bool operator==(const InvariantSignature&,
                         const InvariantSignature&) = default;
};

/// A successful recognition: induce(reduced, trace) reproduces the input
/// algebra bit for bit.
struct RecognitionResult {
  int pivot_index = 0;  ///< basis index removed from every bracket key
  NLieAlgebra reduced;  ///< arity one less than the input
  TraceMap trace;       ///< reads off the pivot coordinate
};

/// How strongly a table row's claimed source was checked.
enum class MatchLevel {
  exact,       ///< an induced bracket equals the row's table bit for bit
  shape,       ///< an induced bracket has the row's structural pattern
  unverified,  ///< no searched trace produced the row's pattern
};

/// One claimed source algebra of an induced-by table row, with the witness
/// trace found (absent when unverified).
struct InducedByWitness {
  std::string source;  ///< catalog entry name in group lie4_solvable/gl2/lie3
  std::vector<Rational> params;
  MatchLevel level = MatchLevel::unverified;
  std::optional<TraceMap> trace;
};

/// A row of the induced-by table: a target bracket pattern and the algebras
/// claimed to induce it.
struct InducedByRow {
  std::string target;  ///< human-readable bracket table of the row
  int target_dim = 0;
  std::vector<InducedByWitness> witnesses;
};

/// The classification of n-Lie algebras of dimension `dim` at most n+1.
/// Throws std::invalid_argument when dim > n+1 or dim < 1 or n < 2.
std::vector<CatalogEntry> list_filippov(int n, int dim);

/// The classification of n-Lie algebras of dimension n+2.  Requires n >= 2.
std::vector<CatalogEntry> list_bai(int n);

/// Three-dimensional Lie algebras.
std::vector<CatalogEntry> list_lie3();

/// Solvable four-dimensional Lie algebras.
std::vector<CatalogEntry> list_lie4_solvable();

/// gl2 with its standard basis: [e1,e2]=2e2, [e1,e3]=-2e3, [e2,e3]=e1,
/// e4 central.
CatalogEntry gl2_entry();

/// Every built-in entry: filippov for n=2 (dims 1-3) and n=3 (dims 2-4),
/// bai for n=2 and n=3, both Lie lists, and gl2.
std::vector<CatalogEntry> full_catalog();

/// Looks up an entry by group and name in full_catalog().  Case names
/// repeat across arities within the filippov and bai groups, so a nonzero
/// `arity` narrows the search; 0 accepts the first match.
std::optional<CatalogEntry> find_entry(const std::string& group,
                                       const std::string& name,
                                       int arity = 0);

/// Computes the signature of an algebra.
InvariantSignature invariant_signature(const NLieAlgebra& a);

/// Entries with at least one sample instantiation whose signature equals
/// a's.  A necessary-condition filter only.
std::vector<CatalogEntry> signature_match(
    const NLieAlgebra& a, const std::vector<CatalogEntry>& entries);

/// Scans basis pivots in increasing order and returns the first that
/// recognizes `a` as induced, verifying the round-trip before returning.
/// Requires arity >= 3.  An empty result means the criterion fails in this
/// basis, not that `a` is not induced.
std::optional<RecognitionResult> recognize_induced(const NLieAlgebra& a);

/// True when `a` provably cannot be induced: the derived subalgebra is not
/// abelian (brackets of derived elements are nonzero), which no induced
/// algebra allows.
bool can_be_induced_obstruction(const NLieAlgebra& a);

/// The induced-by table for ternary algebras of dimension at most 4: each
/// row's sources are re-verified by searching small integer combinations of
/// a trace-space basis and running the row's structural matcher on the
/// induced algebra.  Flags report exactly what was established.
std::vector<InducedByRow> induced_by_table();

}  // namespace nlie
