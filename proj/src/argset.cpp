#include "argmat/argset.hpp"

#include <algorithm>
#include <string>

#include "argmat/errors.hpp"

namespace argmat {

ArgSet::ArgSet(int universe_size) {
  if (universe_size < 0)
    throw Error(ErrorCode::InvalidArgument, "universe size may not be negative");
  universe_ = universe_size;
  bits_.resize(static_cast<std::size_t>(universe_size));
}

ArgSet ArgSet::from_indices(int universe_size, const std::vector<int>& indices) {
  ArgSet s(universe_size);
  for (int i : indices) s.insert(i);
  return s;
}

ArgSet ArgSet::full(int universe_size) {
  ArgSet s(universe_size);
  s.bits_.assign(static_cast<std::size_t>(universe_size), true);
  return s;
}

void ArgSet::check_index(int index) const {
  if (index < 0 || index >= universe_)
    throw DimensionMismatch("index " + std::to_string(index) +
                            " outside universe of size " + std::to_string(universe_));
}

int ArgSet::size() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), true));
}

bool ArgSet::contains(int index) const {
  check_index(index);
  return bits_[static_cast<std::size_t>(index)];
}

void ArgSet::insert(int index) {
  check_index(index);
  bits_[static_cast<std::size_t>(index)] = true;
}

void ArgSet::erase(int index) {
  check_index(index);
  bits_[static_cast<std::size_t>(index)] = false;
}

std::vector<int> ArgSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < universe_; ++i)
    if (bits_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

ArgSet ArgSet::complement() const {
  ArgSet out(universe_);
  for (int i = 0; i < universe_; ++i)
    out.bits_[static_cast<std::size_t>(i)] = !bits_[static_cast<std::size_t>(i)];
  return out;
}

namespace {

void check_same_universe(const ArgSet& a, const ArgSet& b) {
  if (a.universe_size() != b.universe_size())
    throw DimensionMismatch("sets live in different universes (" +
                            std::to_string(a.universe_size()) + " vs " +
                            std::to_string(b.universe_size()) + ")");
}

}  // namespace

ArgSet ArgSet::intersection(const ArgSet& other) const {
  check_same_universe(*this, other);
  ArgSet out(universe_);
  for (int i = 0; i < universe_; ++i) {
    auto k = static_cast<std::size_t>(i);
    out.bits_[k] = bits_[k] && other.bits_[k];
  }
  return out;
}

bool ArgSet::is_subset_of(const ArgSet& other) const {
  check_same_universe(*this, other);
  for (int i = 0; i < universe_; ++i) {
    auto k = static_cast<std::size_t>(i);
    if (bits_[k] && !other.bits_[k]) return false;
  }
  return true;
}

bool ArgSet::is_proper_subset_of(const ArgSet& other) const {
  return is_subset_of(other) && !(*this == other);
}

bool canonical_less(const ArgSet& a, const ArgSet& b) {
  int ca = a.size(), cb = b.size();
  if (ca != cb) return ca < cb;
  return a.indices() < b.indices();
}

}  // namespace argmat
