#ifndef ARGMAT_SEMANTICS_HPP
#define ARGMAT_SEMANTICS_HPP

#include "argmat/argset.hpp"
#include "argmat/extensions.hpp"
#include "argmat/matrix.hpp"

namespace argmat {

// Per-set predicates phrased purely over the blocks of the attack matrix.
// S must be a subset of m's universe (DimensionMismatch otherwise); the empty
// set is handled directly, without carving degenerate blocks.
//
//   conflict-free  the cf-block is zero
//   stable         conflict-free and every column of the s-block is nonzero
//                  (every outside argument is hit from S)
//   admissible     conflict-free and every nonzero row t of the a-block has a
//                  nonzero column t in the s-block (each outside attacker of S
//                  is counter-attacked by S)
//   complete       admissible, and an outside argument t escapes S only with a
//                  live excuse: either S attacks t, or some outside p attacks
//                  t while p itself is not attacked by S (otherwise S would
//                  defend t and t would have to be in S)
bool is_conflict_free(const AttackMatrix& m, const ArgSet& s);
bool is_stable(const AttackMatrix& m, const ArgSet& s);
bool is_admissible(const AttackMatrix& m, const ArgSet& s);
bool is_complete(const AttackMatrix& m, const ArgSet& s);

// A transcription of a published matrix criterion for completeness that is
// ambiguous about which index the c-block rows are matched on. It is kept
// verbatim, in both possible readings, so the validation harness can measure
// each reading against the reference oracle; is_complete above is the
// corrected criterion and is the one used for solving.
//
// Given admissible S (PreconditionViolated otherwise), the criterion asserts,
// over the c-block C and s-block B of S:
//   (1) attacker-aligned reading: if row r of C is nonzero then column r of B
//       is zero;
//       target-aligned reading:   if C has a 1 in column t then column t of B
//       is zero;
//   (2) if column t of C is zero then column t of B is nonzero;
// and reports the conjunction of (1) and (2).
enum class CorrespondenceReading { AttackerAligned, TargetAligned };
bool theorem20_literal(const AttackMatrix& m, const ArgSet& s,
                       CorrespondenceReading reading);

// S together with everything S attacks.
ArgSet range_of(const AttackMatrix& m, const ArgSet& s);

// Enumeration. All conflict-free sets are generated by a depth-first walk
// over increasing argument indices, pruning any branch whose newest member
// clashes with the set built so far; the remaining semantics filter or
// post-process that tree:
//
//   CF  the tree itself                 ST  columns check on each CF set
//   AD  defense check on each CF set    CO  corrected completeness check
//   PR  maximal admissible              GR  minimal complete (unique)
//   ID  maximal admissible subset of the intersection of preferred (unique)
//   SST admissible with maximal range   EAG maximal admissible subset of the
//                                           intersection of semi-stable (unique)
//
// Frameworks above `limit` arguments are refused with
// EnumerationLimitExceeded before any work happens; an empty framework is
// refused with EmptyFramework. GR, ID and EAG are checked to come out as
// exactly one extension, and AD, CO, PR, GR always contain at least one set;
// violations would be InternalInvariantViolated.
inline constexpr int kDefaultEnumerationLimit = 24;

ExtensionSet enumerate_conflict_free(const AttackMatrix& m);
ExtensionSet enumerate_extensions(const AttackMatrix& m, Semantics sem,
                                  int limit = kDefaultEnumerationLimit);

}  // namespace argmat

#endif
