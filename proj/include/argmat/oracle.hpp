#ifndef ARGMAT_ORACLE_HPP
#define ARGMAT_ORACLE_HPP

#include "argmat/af.hpp"
#include "argmat/argset.hpp"
#include "argmat/extensions.hpp"

// Reference implementations that work straight off the attack relation with
// set-and-quantifier definitions and exhaustive subset scans. Nothing here
// touches AttackMatrix or Block (this header deliberately does not include
// them): the point is an independent witness the matrix machinery can be
// checked against, so keep it naive and obviously correct rather than fast.
namespace argmat::oracle {

// 2^n subsets are scanned, so frameworks are capped hard.
inline constexpr int kOracleArgumentLimit = 20;

// True when some member of s attacks `argument`.
bool defeats(const ArgumentationFramework& af, const ArgSet& s, int argument);

// True when every attacker of `argument` is attacked by s.
bool defends(const ArgumentationFramework& af, const ArgSet& s, int argument);

// Membership test. CF, AD, ST and CO are evaluated directly on s; the
// selection semantics (PR, GR, ID, SST, EAG) are membership in enumerate().
bool satisfies(const ArgumentationFramework& af, const ArgSet& s, Semantics sem);

// All extensions under `sem`, by scanning every subset of the arguments.
// Throws EmptyFramework when af has no arguments and OracleLimitExceeded when
// it has more than kOracleArgumentLimit.
ExtensionSet enumerate(const ArgumentationFramework& af, Semantics sem);

}  // namespace argmat::oracle

#endif
