#pragma once

#include <string>
#include <vector>

#include "dio/bigcount.hpp"
#include "dio/system.hpp"

namespace dio {

/// Strip-geometry counter for the reduced 4-equation system with fixed
/// (l11, l22), summed over all admissible (l33, l44).
///
/// For each parity of l there are eight case expressions, indexed by the
/// delta class (Negative or Zero; Positive follows by symmetry), by whether
/// the polygon of admissible (l33, l44) pairs is clipped by the cap
/// l33, l44 <= l, and by the relation between l11 and l22.  The expressions
/// are transcribed as literal finite sums, deliberately unsimplified, so the
/// code doubles as an audit of the formulas; aggregate_count() then
/// reassembles the closed-form totals from them.

enum class Parity { Even, Odd };

/// Regime of the counting polygon: Unclipped when the cap l33, l44 <= l does
/// not cut it, Clipped when it does.  The boundary (where the cut-off sums
/// are empty) belongs to Unclipped.
enum class Regime { Unclipped, Clipped };

enum class Relation { Less, Equal };

std::string to_string(Parity p);
std::string to_string(Regime r);
std::string to_string(Relation r);

/// Identifies one of the eight per-parity counting cases.
struct CaseTag {
  Parity parity = Parity::Even;
  DeltaClass delta = DeltaClass::Negative;  // Negative or Zero only
  Regime regime = Regime::Unclipped;
  Relation relation = Relation::Less;

  friend bool operator==(const CaseTag&, const CaseTag&) = default;
};

/// One evaluated case expression, split into its partial sums:
///
///   value = strip_part + region_part - cutoff_part
///
/// strip_part counts solutions inside the diagonal strip, region_part the
/// rest of the polygon, cutoff_part the inadmissible ones above the cap in
/// the Clipped regime.  For relation Equal the degenerate-strip correction is
/// folded into strip_part, which is then negative.
struct CaseValue {
  CaseTag tag;
  long long l = 0;
  long long l11 = 0;
  long long l22 = 0;
  BigCount strip_part;
  BigCount region_part;
  BigCount cutoff_part;
  BigCount value;
};

/// Builds the tag implied by the arguments (parity from l, relation from
/// l11 vs l22, regime from the clipping threshold).  Requires l11 <= l22 and
/// dc in {Negative, Zero}; throws InconsistentTag or DomainError otherwise.
CaseTag make_case_tag(long long l, long long l11, long long l22, DeltaClass dc);

/// The even-l case expression selected by `tag`, evaluated by explicit
/// summation.  Requires l, l11, l22 even, 0 <= l11 <= l22 <= l, and a tag
/// consistent with the arguments (throws InconsistentTag when it is not).
/// The expressions are only claimed on nonempty regions; see
/// delta_negative_region_nonempty.
CaseValue case_value_even(const CaseTag& tag, long long l, long long l11, long long l22);

/// Odd-l counterpart of case_value_even (l, l11, l22 all odd).
CaseValue case_value_odd(const CaseTag& tag, long long l, long long l11, long long l22);

/// Access path for l11 > l22: swapping the two reduced right-hand sides is a
/// symmetry of the system, so this returns the case value evaluated at
/// (l22, l11).  Requires l11 > l22.
CaseValue mirror_count(const CaseTag& tag, long long l, long long l11, long long l22);

/// Whether any (l33, l44) in [0,l]^2 of matching parity has delta < 0 and at
/// least one solution, i.e. the pair sum window
/// [max(l22-l11, s_min), l11+l22-2] meets the sums realizable on the lattice
/// (s_min = 0 on the even lattice, 2 on the odd one where coordinates start
/// at 1).  For l11 <= l22 this reduces to l11 >= 2 on the even lattice and to
/// (l11, l22) != (1, 1) on the odd one.  The delta = 0 line always carries
/// solutions.
bool delta_negative_region_nonempty(long long l, long long l11, long long l22);

/// Restricted count for one (l11, l22) pair and delta class Negative or Zero.
/// Returns 0 on an empty region without evaluating the case expression, and
/// accepts l11 > l22 via the mirror symmetry.  There is no per-pair
/// expression for Positive (it equals Negative only with the pair roles
/// exchanged), so Positive throws InconsistentTag.
BigCount case_count(long long l, long long l11, long long l22, DeltaClass dc);

/// Total count for the uniform 4-equation system assembled from the case
/// expressions: sums case_count over all l11 <= l22 of matching parity with
/// multiplicities 4/2/2/1 (delta sign flip doubles Negative; the l11 <-> l22
/// swap doubles relation Less).  Must equal closed_count(l) for every l; the
/// nonemptiness predicates make the aggregation principled on all residues
/// of l mod 4, not just the two the polynomial blocks below are stated for.
BigCount aggregate_count(long long l);

/// Partial aggregation sums with known closed polynomial values, one per
/// (parity, delta class, relation, regime) plus the per-group combinations.
/// Each evaluator computes both the programmed double sum and the polynomial
/// and throws InternalError if they disagree; the sum value is returned.
/// The even blocks are stated for l = 0 (mod 4) and the odd blocks for
/// l = 1 (mod 4); other residues throw ResidueError.
enum class ProofBlock {
  EvenNegLessUnclipped,
  EvenNegLessClipped,
  EvenNegLessCombined,
  EvenNegEqualUnclipped,
  EvenNegEqualClipped,
  EvenNegEqualCombined,
  EvenZeroLessUnclipped,
  EvenZeroLessClipped,
  EvenZeroLessCombined,
  EvenZeroEqualUnclipped,
  EvenZeroEqualClipped,
  EvenZeroEqualCombined,
  OddNegLessUnclipped,
  OddNegLessClipped,
  OddNegLessCombined,
  OddNegEqualUnclipped,
  OddNegEqualClipped,
  OddNegEqualCombined,
  OddZeroLessUnclipped,
  OddZeroLessClipped,
  OddZeroLessCombined,
  OddZeroEqualUnclipped,
  OddZeroEqualClipped,
  OddZeroEqualCombined,
};

std::string to_string(ProofBlock block);

/// Residue of l mod 4 the block is stated for: 0 for even blocks, 1 for odd.
int proof_block_residue(ProofBlock block);

const std::vector<ProofBlock>& all_proof_blocks();

BigCount proof_block_value(ProofBlock block, long long l);

}  // namespace dio
