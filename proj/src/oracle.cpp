#include "argmat/oracle.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "argmat/errors.hpp"

namespace argmat::oracle {

namespace {

void check_dimensions(const ArgumentationFramework& af, const ArgSet& s) {
  if (s.universe_size() != af.argument_count())
    throw DimensionMismatch("set universe " + std::to_string(s.universe_size()) +
                            " does not match framework size " +
                            std::to_string(af.argument_count()));
}

bool conflict_free(const ArgumentationFramework& af, const ArgSet& s) {
  for (int a : s.indices())
    for (int b : s.indices())
      if (af.has_attack(a, b)) return false;
  return true;
}

bool admissible(const ArgumentationFramework& af, const ArgSet& s) {
  if (!conflict_free(af, s)) return false;
  for (int a : s.indices())
    if (!defends(af, s, a)) return false;
  return true;
}

bool stable(const ArgumentationFramework& af, const ArgSet& s) {
  if (!conflict_free(af, s)) return false;
  for (int b = 0; b < af.argument_count(); ++b)
    if (!s.contains(b) && !defeats(af, s, b)) return false;
  return true;
}

bool complete(const ArgumentationFramework& af, const ArgSet& s) {
  if (!admissible(af, s)) return false;
  for (int a = 0; a < af.argument_count(); ++a)
    if (defends(af, s, a) && !s.contains(a)) return false;
  return true;
}

ArgSet range(const ArgumentationFramework& af, const ArgSet& s) {
  ArgSet out = s;
  for (auto [src, dst] : af.attacks())
    if (s.contains(src)) out.insert(dst);
  return out;
}

std::vector<ArgSet> all_satisfying(const ArgumentationFramework& af,
                                   bool (*pred)(const ArgumentationFramework&,
                                                const ArgSet&)) {
  const int n = af.argument_count();
  std::vector<ArgSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ArgSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.insert(i);
    if (pred(af, s)) out.push_back(s);
  }
  return out;
}

std::vector<ArgSet> maximal(const std::vector<ArgSet>& family) {
  std::vector<ArgSet> out;
  for (const ArgSet& s : family) {
    bool dominated = false;
    for (const ArgSet& t : family)
      if (s.is_proper_subset_of(t)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

std::vector<ArgSet> minimal(const std::vector<ArgSet>& family) {
  std::vector<ArgSet> out;
  for (const ArgSet& s : family) {
    bool dominated = false;
    for (const ArgSet& t : family)
      if (t.is_proper_subset_of(s)) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(s);
  }
  return out;
}

ArgSet intersect_all(int universe, const std::vector<ArgSet>& family) {
  ArgSet out = ArgSet::full(universe);
  for (const ArgSet& s : family) out = out.intersection(s);
  return out;
}

std::vector<ArgSet> unique_family(const std::vector<ArgSet>& candidates,
                                  const char* what) {
  std::vector<ArgSet> top = maximal(candidates);
  if (top.size() != 1)
    throw InternalInvariantViolated(std::string(what) +
                                    " did not come out as a single extension");
  return top;
}

void check_size(const ArgumentationFramework& af) {
  const int n = af.argument_count();
  if (n == 0) throw EmptyFramework();
  if (n > kOracleArgumentLimit)
    throw OracleLimitExceeded("framework has " + std::to_string(n) +
                              " arguments, above the oracle limit of " +
                              std::to_string(kOracleArgumentLimit));
}

}  // namespace

bool defeats(const ArgumentationFramework& af, const ArgSet& s, int argument) {
  check_dimensions(af, s);
  for (int a : s.indices())
    if (af.has_attack(a, argument)) return true;
  return false;
}

bool defends(const ArgumentationFramework& af, const ArgSet& s, int argument) {
  check_dimensions(af, s);
  for (int b = 0; b < af.argument_count(); ++b)
    if (af.has_attack(b, argument) && !defeats(af, s, b)) return false;
  return true;
}

bool satisfies(const ArgumentationFramework& af, const ArgSet& s, Semantics sem) {
  check_dimensions(af, s);
  switch (sem) {
    case Semantics::ConflictFree: return conflict_free(af, s);
    case Semantics::Admissible: return admissible(af, s);
    case Semantics::Stable: return stable(af, s);
    case Semantics::Complete: return complete(af, s);
    default: return enumerate(af, sem).contains(s);
  }
}

ExtensionSet enumerate(const ArgumentationFramework& af, Semantics sem) {
  check_size(af);
  const int n = af.argument_count();
  switch (sem) {
    case Semantics::ConflictFree:
      return ExtensionSet(n, all_satisfying(af, &conflict_free));
    case Semantics::Admissible:
      return ExtensionSet(n, all_satisfying(af, &admissible));
    case Semantics::Stable:
      return ExtensionSet(n, all_satisfying(af, &stable));
    case Semantics::Complete:
      return ExtensionSet(n, all_satisfying(af, &complete));
    case Semantics::Preferred:
      return ExtensionSet(n, maximal(all_satisfying(af, &admissible)));
    case Semantics::Grounded: {
      std::vector<ArgSet> bottom = minimal(all_satisfying(af, &complete));
      if (bottom.size() != 1)
        throw InternalInvariantViolated(
            "grounded did not come out as a single extension");
      return ExtensionSet(n, std::move(bottom));
    }
    case Semantics::Ideal: {
      std::vector<ArgSet> adm = all_satisfying(af, &admissible);
      ArgSet bound = intersect_all(n, maximal(adm));
      std::vector<ArgSet> inside;
      for (const ArgSet& s : adm)
        if (s.is_subset_of(bound)) inside.push_back(s);
      return ExtensionSet(n, unique_family(inside, "ideal"));
    }
    case Semantics::SemiStable: {
      std::vector<ArgSet> adm = all_satisfying(af, &admissible);
      std::vector<ArgSet> out;
      for (const ArgSet& s : adm) {
        ArgSet rs = range(af, s);
        bool dominated = false;
        for (const ArgSet& t : adm)
          if (rs.is_proper_subset_of(range(af, t))) {
            dominated = true;
            break;
          }
        if (!dominated) out.push_back(s);
      }
      return ExtensionSet(n, std::move(out));
    }
    case Semantics::Eager: {
      std::vector<ArgSet> adm = all_satisfying(af, &admissible);
      ExtensionSet semi_stable = enumerate(af, Semantics::SemiStable);
      ArgSet bound = intersect_all(n, semi_stable.sets());
      std::vector<ArgSet> inside;
      for (const ArgSet& s : adm)
        if (s.is_subset_of(bound)) inside.push_back(s);
      return ExtensionSet(n, unique_family(inside, "eager"));
    }
  }
  throw InternalInvariantViolated("unhandled semantics id");
}

}  // namespace argmat::oracle
