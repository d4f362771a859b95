#ifndef ARGMAT_ARGSET_HPP
#define ARGMAT_ARGSET_HPP

#include <vector>

namespace argmat {

// A subset of the arguments of one fixed framework, tracked against that
// framework's universe size n. All members are indices in [0, n). Operations
// that combine two ArgSets require equal universes and throw DimensionMismatch
// otherwise.
class ArgSet {
public:
  explicit ArgSet(int universe_size);

  static ArgSet from_indices(int universe_size, const std::vector<int>& indices);
  static ArgSet full(int universe_size);

  int universe_size() const { return universe_; }
  int size() const;  // cardinality
  bool empty() const { return size() == 0; }

  bool contains(int index) const;
  void insert(int index);
  void erase(int index);

  std::vector<int> indices() const;  // strictly increasing

  ArgSet complement() const;
  ArgSet intersection(const ArgSet& other) const;
  bool is_subset_of(const ArgSet& other) const;
  bool is_proper_subset_of(const ArgSet& other) const;

  friend bool operator==(const ArgSet& a, const ArgSet& b) = default;

private:
  void check_index(int index) const;

  int universe_ = 0;
  std::vector<bool> bits_;
};

// The canonical order used everywhere extensions are listed: first by
// cardinality, then lexicographically by the increasing index sequence.
bool canonical_less(const ArgSet& a, const ArgSet& b);

}  // namespace argmat

#endif
