#ifndef ARGMAT_VALIDATION_HPP
#define ARGMAT_VALIDATION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "argmat/af.hpp"
#include "argmat/semantics.hpp"

namespace argmat {

// splitmix64. Small, fast, and fully specified, so every consumer of a seed
// can reproduce the exact stream; reference outputs are pinned in the tests
// and in the README.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform in [0, 1): the top 53 bits of next() scaled by 2^-53.
  double next_double();

private:
  std::uint64_t state_;
};

struct GeneratorConfig {
  int argument_count = 0;             // labels "1".."n"
  double attack_probability = 0.0;    // in [0, 1]
  bool allow_self_attacks = false;
  std::uint64_t seed = 0;
};

// Erdos–Renyi style framework: every ordered pair (i, j), i != j, becomes an
// attack independently with the configured probability, scanning pairs in
// row-major order and drawing one double per candidate pair. Diagonal pairs
// are only considered (and only consume a draw) when allow_self_attacks is
// set. Same config, same framework, on any platform.
ArgumentationFramework random_framework(const GeneratorConfig& config);

// One predicate disagreement between the matrix machinery and the oracle,
// with everything needed to reproduce it from the record alone.
struct Discrepancy {
  std::string framework_apx;           // serialized framework
  std::vector<std::string> subset;     // member labels, increasing index order
  std::string predicate;               // tally key, e.g. "admissible"
  std::optional<std::string> reading;  // only for theorem20 predicates
  bool block_verdict = false;
  bool oracle_verdict = false;

  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct PredicateTally {
  std::uint64_t checked = 0;
  std::uint64_t agreed = 0;
  std::uint64_t disagreed = 0;  // checked == agreed + disagreed always

  friend bool operator==(const PredicateTally&, const PredicateTally&) = default;
};

struct CampaignConfig {
  std::uint64_t trials = 0;
  int n_min = 1;
  int n_max = 8;
  std::vector<double> attack_probabilities;  // cycled through, must be nonempty
  std::uint64_t base_seed = 0;
  bool allow_self_attacks = false;

  friend bool operator==(const CampaignConfig&, const CampaignConfig&) = default;
};

// Aggregated outcome of differential checks. Tallies always carry all six
// predicate keys (the four solver predicates plus the two readings of the
// literal completeness criterion), so the JSON shape is stable even at zero
// trials. Discrepancy records are kept in a canonical order, which makes
// serialization deterministic: same inputs, byte-identical report.
class ValidationReport {
public:
  ValidationReport();

  std::uint64_t frameworks_tested = 0;
  std::uint64_t subsets_tested = 0;
  std::map<std::string, PredicateTally> tallies;
  std::vector<Discrepancy> discrepancies;
  std::optional<CampaignConfig> campaign;

  static const std::vector<std::string>& predicate_keys();

  void record(const Discrepancy& d);  // bumps the tally and stores the record
  void count_agreement(const std::string& predicate);

  // Adds counts and records from `other` (associative); campaign metadata is
  // kept from *this.
  void merge(const ValidationReport& other);

  // Disagreements on conflict_free / stable / admissible / complete — the
  // predicates that must never disagree with the oracle.
  std::uint64_t core_disagreements() const;
  // Disagreements of the two literal-criterion readings; these are expected
  // findings, not failures.
  std::uint64_t theorem20_disagreements() const;

  std::string to_json() const;  // stable field order, 2-space indent
  static ValidationReport from_json(const std::string& text);

  std::string summary() const;  // line-oriented, for terminal output

  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;

private:
  void sort_discrepancies();
};

// Checks every subset of af (so at most kDifferentialArgumentLimit arguments)
// for all four solver predicates against the oracle.
inline constexpr int kDifferentialArgumentLimit = 12;
ValidationReport differential_check(const ArgumentationFramework& af);

// Runs both readings of theorem20_literal over every admissible subset of af,
// scoring each against oracle completeness.
ValidationReport theorem20_survey(const ArgumentationFramework& af);

// differential_check + theorem20_survey counted as a single framework.
ValidationReport survey_framework(const ArgumentationFramework& af);

// Generates `trials` random frameworks and surveys each. Trial t uses seed
// base_seed + t, argument count n_min + (t mod span) and the probability at
// index (t / span) mod |ps| where span = n_max - n_min + 1, so the grid is
// swept evenly and any single trial can be re-run in isolation.
ValidationReport run_campaign(const CampaignConfig& config);

// Re-evaluates a stored discrepancy record from its serialized framework,
// returning the fresh pair of verdicts (which must match the record).
struct ReplayResult {
  bool block_verdict = false;
  bool oracle_verdict = false;
};
ReplayResult replay(const Discrepancy& d);

}  // namespace argmat

#endif
