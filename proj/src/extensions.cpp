#include "argmat/extensions.hpp"

#include <algorithm>

#include "argmat/errors.hpp"

namespace argmat {

std::string_view semantics_code(Semantics sem) {
  switch (sem) {
    case Semantics::ConflictFree: return "CF";
    case Semantics::Admissible: return "AD";
    case Semantics::Stable: return "ST";
    case Semantics::Complete: return "CO";
    case Semantics::Preferred: return "PR";
    case Semantics::Grounded: return "GR";
    case Semantics::Ideal: return "ID";
    case Semantics::SemiStable: return "SST";
    case Semantics::Eager: return "EAG";
  }
  throw InternalInvariantViolated("unhandled semantics id");
}

std::optional<Semantics> semantics_from_code(std::string_view code) {
  for (Semantics sem : kAllSemantics)
    if (semantics_code(sem) == code) return sem;
  return std::nullopt;
}

ExtensionSet::ExtensionSet(int universe_size, std::vector<ArgSet> sets)
    : universe_(universe_size), sets_(std::move(sets)) {
  for (const ArgSet& s : sets_) {
    if (s.universe_size() != universe_)
      throw DimensionMismatch("extension universe does not match the family's");
  }
  std::sort(sets_.begin(), sets_.end(), canonical_less);
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
}

bool ExtensionSet::contains(const ArgSet& s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less);
}

}  // namespace argmat
