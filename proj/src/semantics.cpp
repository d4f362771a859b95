#include "argmat/semantics.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "argmat/errors.hpp"

namespace argmat {

namespace {

void check_dimensions(const AttackMatrix& m, const ArgSet& s) {
  if (s.universe_size() != m.size())
    throw DimensionMismatch("set universe " + std::to_string(s.universe_size()) +
                            " does not match matrix order " + std::to_string(m.size()));
}

}  // namespace

bool is_conflict_free(const AttackMatrix& m, const ArgSet& s) {
  check_dimensions(m, s);
  if (s.empty()) return true;  // nothing to clash
  return cf_block(m, s).is_zero();
}

bool is_stable(const AttackMatrix& m, const ArgSet& s) {
  check_dimensions(m, s);
  // The empty set is stable only when there is nobody left outside, i.e. n=0.
  if (s.empty()) return m.size() == 0;
  if (!cf_block(m, s).is_zero()) return false;
  Block out = s_block(m, s);
  for (int t = 0; t < out.col_count(); ++t)
    if (!out.col_is_nonzero(t)) return false;
  return true;
}

bool is_admissible(const AttackMatrix& m, const ArgSet& s) {
  check_dimensions(m, s);
  if (s.empty()) return true;  // vacuously defended
  if (!cf_block(m, s).is_zero()) return false;
  Block in = a_block(m, s);
  Block out = s_block(m, s);
  // a-block rows and s-block columns both run over the complement of S in the
  // same increasing order, so position t names the same outside argument.
  for (int t = 0; t < in.row_count(); ++t)
    if (in.row_is_nonzero(t) && !out.col_is_nonzero(t)) return false;
  return true;
}

bool is_complete(const AttackMatrix& m, const ArgSet& s) {
  if (!is_admissible(m, s)) return false;
  if (s.size() == m.size()) return true;  // no outside argument to absorb
  // S is complete when it already contains everything it defends. Outside
  // argument t stays legitimately outside only when it keeps a live attacker:
  // either S attacks t directly (column t of the s-block is nonzero, so t is
  // not defended... it is attacked by S itself), or some outside p attacks t
  // while p is not attacked by S, leaving an attacker S never answers.
  if (s.empty()) {
    // Degenerate case without blocks: the empty set defends exactly the
    // unattacked arguments, so it is complete iff every argument is attacked.
    const int n = m.size();
    for (int t = 0; t < n; ++t) {
      bool attacked = false;
      for (int p = 0; p < n; ++p)
        if (m.at(p, t)) {
          attacked = true;
          break;
        }
      if (!attacked) return false;
    }
    return true;
  }
  Block out = s_block(m, s);
  Block comp = c_block(m, s);
  const int h = comp.col_count();
  for (int t = 0; t < h; ++t) {
    if (out.col_is_nonzero(t)) continue;
    bool live_attacker = false;
    for (int p = 0; p < h; ++p) {
      if (comp.at(p, t) && !out.col_is_nonzero(p)) {
        live_attacker = true;
        break;
      }
    }
    if (!live_attacker) return false;  // S defends t but does not contain it
  }
  return true;
}

bool theorem20_literal(const AttackMatrix& m, const ArgSet& s,
                       CorrespondenceReading reading) {
  if (!is_admissible(m, s))
    throw PreconditionViolated("theorem20_literal requires an admissible set");
  if (s.empty() || s.size() == m.size()) {
    // No blocks to carve on one side. Both conditions quantify over the
    // complement, so a full S passes vacuously; for an empty S the s-block
    // side has no columns to be nonzero, hence condition (2) fails unless the
    // complement's principal block (the whole matrix) has no zero column.
    if (s.size() == m.size()) return true;
    for (int t = 0; t < m.size(); ++t) {
      bool col_zero = true;
      for (int p = 0; p < m.size(); ++p)
        if (m.at(p, t)) {
          col_zero = false;
          break;
        }
      if (col_zero) return false;  // condition (2) with an empty s-block
    }
    return true;
  }
  Block out = s_block(m, s);
  Block comp = c_block(m, s);
  const int h = comp.row_count();
  switch (reading) {
    case CorrespondenceReading::AttackerAligned:
      for (int r = 0; r < h; ++r)
        if (comp.row_is_nonzero(r) && out.col_is_nonzero(r)) return false;
      break;
    case CorrespondenceReading::TargetAligned:
      for (int r = 0; r < h; ++r)
        for (int t = 0; t < h; ++t)
          if (comp.at(r, t) && out.col_is_nonzero(t)) return false;
      break;
  }
  for (int t = 0; t < h; ++t)
    if (!comp.col_is_nonzero(t) && !out.col_is_nonzero(t)) return false;
  return true;
}

ArgSet range_of(const AttackMatrix& m, const ArgSet& s) {
  check_dimensions(m, s);
  ArgSet out = s;
  for (int i : s.indices())
    for (int j = 0; j < m.size(); ++j)
      if (m.at(i, j)) out.insert(j);
  return out;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Depth-first walk over all conflict-free sets. Members are added in
// increasing index order; a candidate j only needs checking against the
// members already present (plus its own diagonal), which prunes every branch
// through a conflict at its root.
template <typename Visit>
void conflict_free_walk(const AttackMatrix& m, std::vector<int>& members,
                        ArgSet& current, int first, Visit&& visit) {
  visit(current);
  const int n = m.size();
  for (int j = first; j < n; ++j) {
    if (m.at(j, j)) continue;
    bool clash = false;
    for (int i : members) {
      if (m.at(i, j) || m.at(j, i)) {
        clash = true;
        break;
      }
    }
    if (clash) continue;
    members.push_back(j);
    current.insert(j);
    conflict_free_walk(m, members, current, j + 1, visit);
    current.erase(j);
    members.pop_back();
  }
}

template <typename Visit>
void visit_conflict_free(const AttackMatrix& m, Visit&& visit) {
  std::vector<int> members;
  ArgSet current(m.size());
  conflict_free_walk(m, members, current, 0, visit);
}

std::vector<ArgSet> filter_conflict_free(const AttackMatrix& m,
                                         bool (*predicate)(const AttackMatrix&,
                                                           const ArgSet&)) {
  std::vector<ArgSet> out;
  visit_conflict_free(m, [&](const ArgSet& s) {
    if (predicate(m, s)) out.push_back(s);
  });
  return out;
}

// Subset-maximal members of a family.
std::vector<ArgSet> maximal_members(const std::vector<ArgSet>& family) {
  std::vector<ArgSet> out;
  for (const ArgSet& s : family) {
    bool dominated = false;
    for (const ArgSet& t : family) {
      if (s.is_proper_subset_of(t)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<ArgSet> minimal_members(const std::vector<ArgSet>& family) {
  std::vector<ArgSet> out;
  for (const ArgSet& s : family) {
    bool dominated = false;
    for (const ArgSet& t : family) {
      if (t.is_proper_subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(s);
  }
  return out;
}

ArgSet family_intersection(int universe, const std::vector<ArgSet>& family) {
  ArgSet out = ArgSet::full(universe);
  for (const ArgSet& s : family) out = out.intersection(s);
  return out;
}

// Maximal admissible subsets of `bound`; the callers' uniqueness arguments
// guarantee exactly one, which is returned.
ArgSet unique_maximal_admissible_within(const std::vector<ArgSet>& admissible,
                                        const ArgSet& bound, const char* what) {
  std::vector<ArgSet> inside;
  for (const ArgSet& s : admissible)
    if (s.is_subset_of(bound)) inside.push_back(s);
  std::vector<ArgSet> top = maximal_members(inside);
  if (top.size() != 1)
    throw InternalInvariantViolated(std::string(what) +
                                    " did not come out as a single extension");
  return top.front();
}

}  // namespace

ExtensionSet enumerate_conflict_free(const AttackMatrix& m) {
  std::vector<ArgSet> out;
  visit_conflict_free(m, [&](const ArgSet& s) { out.push_back(s); });
  return ExtensionSet(m.size(), std::move(out));
}

ExtensionSet enumerate_extensions(const AttackMatrix& m, Semantics sem, int limit) {
  const int n = m.size();
  if (n == 0) throw EmptyFramework();
  if (limit < 1)
    throw Error(ErrorCode::InvalidArgument, "enumeration limit must be at least 1");
  if (n > limit)
    throw EnumerationLimitExceeded("framework has " + std::to_string(n) +
                                   " arguments, above the enumeration limit of " +
                                   std::to_string(limit));

  switch (sem) {
    case Semantics::ConflictFree:
      return enumerate_conflict_free(m);
    case Semantics::Admissible:
      return ExtensionSet(n, filter_conflict_free(m, &is_admissible));
    case Semantics::Stable:
      return ExtensionSet(n, filter_conflict_free(m, &is_stable));
    case Semantics::Complete:
      return ExtensionSet(n, filter_conflict_free(m, &is_complete));
    case Semantics::Preferred:
      return ExtensionSet(n, maximal_members(filter_conflict_free(m, &is_admissible)));
    case Semantics::Grounded: {
      std::vector<ArgSet> bottom = minimal_members(filter_conflict_free(m, &is_complete));
      if (bottom.size() != 1)
        throw InternalInvariantViolated(
            "grounded did not come out as a single extension");
      return ExtensionSet(n, std::move(bottom));
    }
    case Semantics::Ideal: {
      std::vector<ArgSet> admissible = filter_conflict_free(m, &is_admissible);
      std::vector<ArgSet> preferred = maximal_members(admissible);
      ArgSet bound = family_intersection(n, preferred);
      return ExtensionSet(
          n, {unique_maximal_admissible_within(admissible, bound, "ideal")});
    }
    case Semantics::SemiStable: {
      std::vector<ArgSet> admissible = filter_conflict_free(m, &is_admissible);
      std::vector<ArgSet> out;
      for (const ArgSet& s : admissible) {
        ArgSet r = range_of(m, s);
        bool dominated = false;
        for (const ArgSet& t : admissible) {
          if (r.is_proper_subset_of(range_of(m, t))) {
            dominated = true;
            break;
          }
        }
        if (!dominated) out.push_back(s);
      }
      return ExtensionSet(n, std::move(out));
    }
    case Semantics::Eager: {
      std::vector<ArgSet> admissible = filter_conflict_free(m, &is_admissible);
      ExtensionSet semi_stable = enumerate_extensions(m, Semantics::SemiStable, limit);
      ArgSet bound = family_intersection(n, semi_stable.sets());
      return ExtensionSet(
          n, {unique_maximal_admissible_within(admissible, bound, "eager")});
    }
  }
  throw InternalInvariantViolated("unhandled semantics id");
}

}  // namespace argmat
