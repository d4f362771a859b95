#ifndef ARGMAT_EXTENSIONS_HPP
#define ARGMAT_EXTENSIONS_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "argmat/argset.hpp"

namespace argmat {

// The nine semantics handled by both the block-based solver and the reference
// oracle. The short codes are the ones accepted on the command line.
enum class Semantics {
  ConflictFree,  // CF
  Admissible,    // AD
  Stable,        // ST
  Complete,      // CO
  Preferred,     // PR
  Grounded,      // GR
  Ideal,         // ID
  SemiStable,    // SST
  Eager,         // EAG
};

inline constexpr std::array<Semantics, 9> kAllSemantics = {
    Semantics::ConflictFree, Semantics::Admissible, Semantics::Stable,
    Semantics::Complete,     Semantics::Preferred,  Semantics::Grounded,
    Semantics::Ideal,        Semantics::SemiStable, Semantics::Eager,
};

std::string_view semantics_code(Semantics sem);
std::optional<Semantics> semantics_from_code(std::string_view code);

// An immutable family of extensions over one universe, held in canonical
// order (cardinality, then lexicographic on index lists) with duplicates
// removed. The empty family is distinct from the family {∅}.
class ExtensionSet {
public:
  explicit ExtensionSet(int universe_size) : universe_(universe_size) {}
  ExtensionSet(int universe_size, std::vector<ArgSet> sets);

  int universe_size() const { return universe_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }

  const ArgSet& operator[](std::size_t i) const { return sets_[i]; }
  const std::vector<ArgSet>& sets() const { return sets_; }

  bool contains(const ArgSet& s) const;

  friend bool operator==(const ExtensionSet& a, const ExtensionSet& b) = default;

private:
  int universe_ = 0;
  std::vector<ArgSet> sets_;
};

}  // namespace argmat

#endif
