#ifndef ARGMAT_AF_HPP
#define ARGMAT_AF_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace argmat {

// A finite abstract argumentation framework: a list of labeled arguments and a
// binary attack relation over them. Immutable once built. Arguments keep their
// declaration order and are addressed internally by 0-based index; labels are
// opaque strings (they do not have to look like numbers).
//
// Labels may not be empty and may not contain whitespace or any of the
// characters ( ) , . % # — this keeps every constructible framework
// serializable and round-trippable in both supported text formats.
class ArgumentationFramework {
public:
  using AttackList = std::vector<std::pair<int, int>>;

  // Builds from declaration-ordered labels and label-level attack pairs.
  // Throws DuplicateArgument / UnknownArgument; duplicate attacks collapse.
  static ArgumentationFramework from_pairs(
      const std::vector<std::string>& labels,
      const std::vector<std::pair<std::string, std::string>>& attack_pairs);

  // Same, with attacks already resolved to argument indices.
  static ArgumentationFramework from_index_pairs(std::vector<std::string> labels,
                                                 AttackList attacks);

  int argument_count() const { return static_cast<int>(labels_.size()); }
  std::size_t attack_count() const { return attacks_.size(); }

  const std::string& label(int index) const;
  const std::vector<std::string>& labels() const { return labels_; }

  int index_of(std::string_view label) const;  // throws UnknownArgument
  bool has_argument(std::string_view label) const;

  bool has_attack(int source, int target) const;
  const AttackList& attacks() const { return attacks_; }  // sorted by (source, target)

  friend bool operator==(const ArgumentationFramework& a,
                         const ArgumentationFramework& b) {
    return a.labels_ == b.labels_ && a.attacks_ == b.attacks_;
  }

private:
  ArgumentationFramework() = default;

  std::vector<std::string> labels_;
  AttackList attacks_;
  std::unordered_map<std::string, int> index_;
};

// Text formats.
//
// APX: arg(X). and att(X,Y). facts. Whitespace and newlines are insignificant,
// '%' starts a comment running to end of line, and every attack must name
// previously declared arguments.
//
// TGF: one node label per line, a lone '#' separator, then "source target"
// edge lines. Blank lines are skipped in both sections.
ArgumentationFramework parse_apx(std::string_view text);
ArgumentationFramework parse_tgf(std::string_view text);

// Deterministic serializers: arguments in declaration order, attacks sorted by
// (source index, target index). parse(serialize(F)) == F for every framework.
std::string serialize_apx(const ArgumentationFramework& af);
std::string serialize_tgf(const ArgumentationFramework& af);

}  // namespace argmat

#endif
