#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "argmat/af.hpp"
#include "argmat/errors.hpp"
#include "argmat/oracle.hpp"

// These tests pin the reference oracle on its own, without any matrix-side
// machinery in the loop; the cross-checks live in test_semantics and the
// validation harness.

using namespace argmat;

namespace {

ArgumentationFramework ex7() {
  return parse_apx(
      "arg(1).arg(2).arg(3).arg(4)."
      "att(1,2).att(1,3).att(2,1).att(2,3).att(3,4).");
}

ArgumentationFramework ex8() {
  return parse_apx(
      "arg(1).arg(2).arg(3).arg(4).arg(5)."
      "att(1,2).att(2,3).att(2,5).att(4,3).att(5,4).");
}

ArgSet members(int n, std::vector<int> args) {
  ArgSet s(n);
  for (int a : args) s.insert(a - 1);
  return s;
}

ExtensionSet family(int n, std::vector<std::vector<int>> sets) {
  std::vector<ArgSet> out;
  for (auto& v : sets) out.push_back(members(n, v));
  return ExtensionSet(n, std::move(out));
}

}  // namespace

TEST_CASE("defeats and defends") {
  auto af = ex8();
  CHECK(oracle::defeats(af, members(5, {1}), 1));        // 1 attacks 2 (index 1)
  CHECK_FALSE(oracle::defeats(af, members(5, {1}), 2));  // nobody in {1} attacks 3
  CHECK(oracle::defeats(af, members(5, {2, 4}), 2));

  // 5 (index 4) is attacked only by 2; {1} attacks 2, so {1} defends 5.
  CHECK(oracle::defends(af, members(5, {1}), 4));
  CHECK_FALSE(oracle::defends(af, members(5, {}), 4));
  // 1 is unattacked: everything defends it, even the empty set.
  CHECK(oracle::defends(af, members(5, {}), 0));
  // 3 (index 2) is attacked by 2 and 4; {1,5} attacks both.
  CHECK(oracle::defends(af, members(5, {1, 5}), 2));
  CHECK_FALSE(oracle::defends(af, members(5, {1}), 2));

  CHECK_THROWS_AS(oracle::defeats(af, ArgSet(3), 0), DimensionMismatch);
}

TEST_CASE("per-set predicates") {
  auto af = ex8();
  CHECK(oracle::satisfies(af, members(5, {1, 3, 5}), Semantics::ConflictFree));
  CHECK_FALSE(oracle::satisfies(af, members(5, {1, 2}), Semantics::ConflictFree));
  CHECK(oracle::satisfies(af, members(5, {1, 3, 5}), Semantics::Stable));
  CHECK_FALSE(oracle::satisfies(af, members(5, {2, 4}), Semantics::Stable));
  CHECK(oracle::satisfies(af, members(5, {1, 5}), Semantics::Admissible));
  CHECK_FALSE(oracle::satisfies(af, members(5, {3}), Semantics::Admissible));
  CHECK(oracle::satisfies(af, members(5, {1, 3, 5}), Semantics::Complete));
  CHECK_FALSE(oracle::satisfies(af, members(5, {1, 5}), Semantics::Complete));
}

TEST_CASE("selection semantics are membership in the enumerated family") {
  auto af = ex7();
  CHECK(oracle::satisfies(af, members(4, {1, 4}), Semantics::Preferred));
  CHECK_FALSE(oracle::satisfies(af, members(4, {1}), Semantics::Preferred));
  CHECK(oracle::satisfies(af, members(4, {}), Semantics::Grounded));
  CHECK(oracle::satisfies(af, members(4, {}), Semantics::Ideal));
  CHECK(oracle::satisfies(af, members(4, {2, 4}), Semantics::SemiStable));
  CHECK(oracle::satisfies(af, members(4, {}), Semantics::Eager));
  CHECK_FALSE(oracle::satisfies(af, members(4, {1, 4}), Semantics::Eager));
}

TEST_CASE("enumerate: pinned families") {
  auto af7 = ex7();
  CHECK(oracle::enumerate(af7, Semantics::ConflictFree) ==
        family(4, {{}, {1}, {2}, {3}, {4}, {1, 4}, {2, 4}}));
  CHECK(oracle::enumerate(af7, Semantics::Admissible) ==
        family(4, {{}, {1}, {2}, {1, 4}, {2, 4}}));
  CHECK(oracle::enumerate(af7, Semantics::Stable) == family(4, {{1, 4}, {2, 4}}));
  CHECK(oracle::enumerate(af7, Semantics::Complete) ==
        family(4, {{}, {1, 4}, {2, 4}}));
  CHECK(oracle::enumerate(af7, Semantics::Preferred) ==
        family(4, {{1, 4}, {2, 4}}));
  CHECK(oracle::enumerate(af7, Semantics::Grounded) == family(4, {{}}));
  CHECK(oracle::enumerate(af7, Semantics::Ideal) == family(4, {{}}));
  CHECK(oracle::enumerate(af7, Semantics::SemiStable) ==
        family(4, {{1, 4}, {2, 4}}));
  CHECK(oracle::enumerate(af7, Semantics::Eager) == family(4, {{}}));

  auto af8 = ex8();
  for (Semantics sem : {Semantics::Stable, Semantics::Complete, Semantics::Preferred,
                        Semantics::Grounded, Semantics::Ideal, Semantics::SemiStable,
                        Semantics::Eager})
    CHECK(oracle::enumerate(af8, sem) == family(5, {{1, 3, 5}}));
}

TEST_CASE("enumerate: guards") {
  CHECK_THROWS_AS(
      oracle::enumerate(ArgumentationFramework::from_pairs({}, {}),
                        Semantics::Complete),
      EmptyFramework);

  std::vector<std::string> labels;
  for (int i = 1; i <= oracle::kOracleArgumentLimit + 1; ++i)
    labels.push_back(std::to_string(i));
  auto big = ArgumentationFramework::from_index_pairs(labels, {});
  CHECK_THROWS_AS(oracle::enumerate(big, Semantics::ConflictFree),
                  OracleLimitExceeded);
}

TEST_CASE("oracle is deterministic") {
  auto af = ex8();
  CHECK(oracle::enumerate(af, Semantics::Preferred) ==
        oracle::enumerate(af, Semantics::Preferred));
}
