#include "argmat/validation.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <tuple>

#include "argmat/errors.hpp"
#include "argmat/oracle.hpp"

#include "json.hpp"

namespace argmat {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_double() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

ArgumentationFramework random_framework(const GeneratorConfig& config) {
  if (config.argument_count < 0)
    throw Error(ErrorCode::InvalidArgument, "argument count may not be negative");
  if (!(config.attack_probability >= 0.0 && config.attack_probability <= 1.0))
    throw Error(ErrorCode::InvalidArgument, "attack probability must be in [0, 1]");

  const int n = config.argument_count;
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));

  SplitMix64 rng(config.seed);
  ArgumentationFramework::AttackList attacks;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j && !config.allow_self_attacks) continue;  // no draw consumed
      if (rng.next_double() < config.attack_probability) attacks.emplace_back(i, j);
    }
  }
  return ArgumentationFramework::from_index_pairs(std::move(labels), std::move(attacks));
}

// ---------------------------------------------------------------------------
// ValidationReport

namespace {

const char* kSchemaTag = "argmat-validation-report/1";

constexpr const char* kCoreKeys[] = {"conflict_free", "stable", "admissible",
                                     "complete"};
constexpr const char* kTheorem20Keys[] = {"theorem20_attacker_aligned",
                                          "theorem20_target_aligned"};

std::tuple<const std::string&, const std::string&, const std::string&,
           const std::vector<std::string>&>
discrepancy_sort_key(const Discrepancy& d) {
  static const std::string empty;
  return {d.framework_apx, d.predicate, d.reading ? *d.reading : empty, d.subset};
}

bool discrepancy_less(const Discrepancy& a, const Discrepancy& b) {
  return discrepancy_sort_key(a) < discrepancy_sort_key(b);
}

}  // namespace

const std::vector<std::string>& ValidationReport::predicate_keys() {
  static const std::vector<std::string> keys = {
      "conflict_free", "stable",
      "admissible",    "complete",
      "theorem20_attacker_aligned", "theorem20_target_aligned"};
  return keys;
}

ValidationReport::ValidationReport() {
  for (const std::string& key : predicate_keys()) tallies[key] = PredicateTally{};
}

void ValidationReport::record(const Discrepancy& d) {
  PredicateTally& tally = tallies.at(d.predicate);
  ++tally.checked;
  ++tally.disagreed;
  discrepancies.push_back(d);
  sort_discrepancies();
}

void ValidationReport::count_agreement(const std::string& predicate) {
  PredicateTally& tally = tallies.at(predicate);
  ++tally.checked;
  ++tally.agreed;
}

void ValidationReport::merge(const ValidationReport& other) {
  frameworks_tested += other.frameworks_tested;
  subsets_tested += other.subsets_tested;
  for (const auto& [key, tally] : other.tallies) {
    PredicateTally& mine = tallies[key];
    mine.checked += tally.checked;
    mine.agreed += tally.agreed;
    mine.disagreed += tally.disagreed;
  }
  discrepancies.insert(discrepancies.end(), other.discrepancies.begin(),
                       other.discrepancies.end());
  sort_discrepancies();
}

void ValidationReport::sort_discrepancies() {
  std::sort(discrepancies.begin(), discrepancies.end(), discrepancy_less);
}

std::uint64_t ValidationReport::core_disagreements() const {
  std::uint64_t total = 0;
  for (const char* key : kCoreKeys) {
    auto it = tallies.find(key);
    if (it != tallies.end()) total += it->second.disagreed;
  }
  return total;
}

std::uint64_t ValidationReport::theorem20_disagreements() const {
  std::uint64_t total = 0;
  for (const char* key : kTheorem20Keys) {
    auto it = tallies.find(key);
    if (it != tallies.end()) total += it->second.disagreed;
  }
  return total;
}

std::string ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["schema"] = kSchemaTag;
  j["frameworks_tested"] = frameworks_tested;
  j["subsets_tested"] = subsets_tested;
  nlohmann::ordered_json preds;
  for (const std::string& key : predicate_keys()) {
    auto it = tallies.find(key);
    PredicateTally tally = it == tallies.end() ? PredicateTally{} : it->second;
    preds[key] = {{"checked", tally.checked},
                  {"agreed", tally.agreed},
                  {"disagreed", tally.disagreed}};
  }
  // Any key outside the standard six would indicate a bug; carry it anyway so
  // nothing silently disappears in a round-trip.
  for (const auto& [key, tally] : tallies) {
    if (!preds.contains(key))
      preds[key] = {{"checked", tally.checked},
                    {"agreed", tally.agreed},
                    {"disagreed", tally.disagreed}};
  }
  j["predicates"] = std::move(preds);
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const Discrepancy& d : discrepancies) {
    nlohmann::ordered_json rec;
    rec["framework_apx"] = d.framework_apx;
    rec["subset"] = d.subset;
    rec["predicate"] = d.predicate;
    if (d.reading) rec["reading"] = *d.reading;
    rec["block_verdict"] = d.block_verdict;
    rec["oracle_verdict"] = d.oracle_verdict;
    records.push_back(std::move(rec));
  }
  j["discrepancies"] = std::move(records);
  if (campaign) {
    j["campaign"] = {{"trials", campaign->trials},
                     {"n_min", campaign->n_min},
                     {"n_max", campaign->n_max},
                     {"attack_probabilities", campaign->attack_probabilities},
                     {"base_seed", campaign->base_seed},
                     {"allow_self_attacks", campaign->allow_self_attacks}};
  }
  return j.dump(2) + "\n";
}

ValidationReport ValidationReport::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid report JSON: ") + e.what(), 1);
  }
  try {
    if (j.at("schema").get<std::string>() != kSchemaTag)
      throw Error(ErrorCode::Parse, "unrecognized report schema tag");
    ValidationReport report;
    report.frameworks_tested = j.at("frameworks_tested").get<std::uint64_t>();
    report.subsets_tested = j.at("subsets_tested").get<std::uint64_t>();
    for (const auto& [key, value] : j.at("predicates").items()) {
      PredicateTally tally;
      tally.checked = value.at("checked").get<std::uint64_t>();
      tally.agreed = value.at("agreed").get<std::uint64_t>();
      tally.disagreed = value.at("disagreed").get<std::uint64_t>();
      report.tallies[key] = tally;
    }
    for (const auto& rec : j.at("discrepancies")) {
      Discrepancy d;
      d.framework_apx = rec.at("framework_apx").get<std::string>();
      d.subset = rec.at("subset").get<std::vector<std::string>>();
      d.predicate = rec.at("predicate").get<std::string>();
      if (rec.contains("reading")) d.reading = rec.at("reading").get<std::string>();
      d.block_verdict = rec.at("block_verdict").get<bool>();
      d.oracle_verdict = rec.at("oracle_verdict").get<bool>();
      report.discrepancies.push_back(std::move(d));
    }
    if (j.contains("campaign")) {
      const auto& c = j.at("campaign");
      CampaignConfig config;
      config.trials = c.at("trials").get<std::uint64_t>();
      config.n_min = c.at("n_min").get<int>();
      config.n_max = c.at("n_max").get<int>();
      config.attack_probabilities =
          c.at("attack_probabilities").get<std::vector<double>>();
      config.base_seed = c.at("base_seed").get<std::uint64_t>();
      config.allow_self_attacks = c.at("allow_self_attacks").get<bool>();
      report.campaign = std::move(config);
    }
    report.sort_discrepancies();
    return report;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed report JSON: ") + e.what());
  }
}

std::string ValidationReport::summary() const {
  std::ostringstream out;
  out << "frameworks tested: " << frameworks_tested << "\n";
  out << "subsets tested:    " << subsets_tested << "\n";
  for (const std::string& key : predicate_keys()) {
    auto it = tallies.find(key);
    PredicateTally tally = it == tallies.end() ? PredicateTally{} : it->second;
    out << "  " << key << ": checked=" << tally.checked << " agreed=" << tally.agreed
        << " disagreed=" << tally.disagreed << "\n";
  }
  out << "core disagreements:      " << core_disagreements() << "\n";
  out << "theorem20 disagreements: " << theorem20_disagreements() << "\n";
  const std::size_t shown = std::min<std::size_t>(discrepancies.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const Discrepancy& d = discrepancies[i];
    out << "  disagreement: predicate=" << d.predicate;
    if (d.reading) out << " reading=" << *d.reading;
    out << " subset={";
    for (std::size_t k = 0; k < d.subset.size(); ++k) {
      if (k > 0) out << ",";
      out << d.subset[k];
    }
    out << "} block=" << (d.block_verdict ? "true" : "false")
        << " oracle=" << (d.oracle_verdict ? "true" : "false") << "\n";
  }
  if (discrepancies.size() > shown)
    out << "  ... " << (discrepancies.size() - shown) << " more in the JSON report\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Differential checks

namespace {

void check_harness_size(const ArgumentationFramework& af) {
  const int n = af.argument_count();
  if (n == 0) throw EmptyFramework();
  if (n > kDifferentialArgumentLimit)
    throw EnumerationLimitExceeded(
        "framework has " + std::to_string(n) +
        " arguments, above the differential harness limit of " +
        std::to_string(kDifferentialArgumentLimit));
}

std::vector<std::string> subset_labels(const ArgumentationFramework& af,
                                       const ArgSet& s) {
  std::vector<std::string> out;
  for (int i : s.indices()) out.push_back(af.label(i));
  return out;
}

void score(ValidationReport& report, const ArgumentationFramework& af,
           const std::string& apx, const ArgSet& s, const std::string& predicate,
           const std::optional<std::string>& reading, bool block_verdict,
           bool oracle_verdict) {
  if (block_verdict == oracle_verdict) {
    report.count_agreement(predicate);
  } else {
    Discrepancy d;
    d.framework_apx = apx;
    d.subset = subset_labels(af, s);
    d.predicate = predicate;
    d.reading = reading;
    d.block_verdict = block_verdict;
    d.oracle_verdict = oracle_verdict;
    report.record(d);
  }
}

}  // namespace

ValidationReport differential_check(const ArgumentationFramework& af) {
  check_harness_size(af);
  const int n = af.argument_count();
  const AttackMatrix m = AttackMatrix::build(af);
  const std::string apx = serialize_apx(af);

  ValidationReport report;
  report.frameworks_tested = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ArgSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.insert(i);
    ++report.subsets_tested;
    score(report, af, apx, s, "conflict_free", std::nullopt, is_conflict_free(m, s),
          oracle::satisfies(af, s, Semantics::ConflictFree));
    score(report, af, apx, s, "stable", std::nullopt, is_stable(m, s),
          oracle::satisfies(af, s, Semantics::Stable));
    score(report, af, apx, s, "admissible", std::nullopt, is_admissible(m, s),
          oracle::satisfies(af, s, Semantics::Admissible));
    score(report, af, apx, s, "complete", std::nullopt, is_complete(m, s),
          oracle::satisfies(af, s, Semantics::Complete));
  }
  return report;
}

ValidationReport theorem20_survey(const ArgumentationFramework& af) {
  check_harness_size(af);
  const int n = af.argument_count();
  const AttackMatrix m = AttackMatrix::build(af);
  const std::string apx = serialize_apx(af);

  ValidationReport report;
  report.frameworks_tested = 1;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    ArgSet s(n);
    for (int i = 0; i < n; ++i)
      if (mask & (std::uint64_t{1} << i)) s.insert(i);
    if (!is_admissible(m, s)) continue;  // the criterion presumes admissibility
    ++report.subsets_tested;
    const bool oracle_complete = oracle::satisfies(af, s, Semantics::Complete);
    score(report, af, apx, s, "theorem20_attacker_aligned",
          std::string("attacker_aligned"),
          theorem20_literal(m, s, CorrespondenceReading::AttackerAligned),
          oracle_complete);
    score(report, af, apx, s, "theorem20_target_aligned",
          std::string("target_aligned"),
          theorem20_literal(m, s, CorrespondenceReading::TargetAligned),
          oracle_complete);
  }
  return report;
}

ValidationReport survey_framework(const ArgumentationFramework& af) {
  ValidationReport report = differential_check(af);
  report.merge(theorem20_survey(af));
  report.frameworks_tested = 1;  // one framework, two passes
  return report;
}

ValidationReport run_campaign(const CampaignConfig& config) {
  if (config.n_min < 1 || config.n_min > config.n_max)
    throw Error(ErrorCode::InvalidArgument,
                "campaign needs 1 <= n_min <= n_max");
  if (config.n_max > kDifferentialArgumentLimit)
    throw Error(ErrorCode::InvalidArgument,
                "campaign n_max above the differential harness limit of " +
                    std::to_string(kDifferentialArgumentLimit));
  if (config.attack_probabilities.empty())
    throw Error(ErrorCode::InvalidArgument,
                "campaign needs at least one attack probability");
  for (double p : config.attack_probabilities)
    if (!(p >= 0.0 && p <= 1.0))
      throw Error(ErrorCode::InvalidArgument, "attack probability must be in [0, 1]");

  ValidationReport aggregate;
  aggregate.campaign = config;
  const std::uint64_t span =
      static_cast<std::uint64_t>(config.n_max - config.n_min + 1);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    GeneratorConfig gen;
    gen.argument_count = config.n_min + static_cast<int>(t % span);
    gen.attack_probability =
        config.attack_probabilities[(t / span) % config.attack_probabilities.size()];
    gen.allow_self_attacks = config.allow_self_attacks;
    gen.seed = config.base_seed + t;  // wraps on overflow, deliberately
    aggregate.merge(survey_framework(random_framework(gen)));
  }
  return aggregate;
}

ReplayResult replay(const Discrepancy& d) {
  const ArgumentationFramework af = parse_apx(d.framework_apx);
  const AttackMatrix m = AttackMatrix::build(af);
  ArgSet s(af.argument_count());
  for (const std::string& label : d.subset) s.insert(af.index_of(label));

  ReplayResult result;
  if (d.predicate == "conflict_free") {
    result.block_verdict = is_conflict_free(m, s);
    result.oracle_verdict = oracle::satisfies(af, s, Semantics::ConflictFree);
  } else if (d.predicate == "stable") {
    result.block_verdict = is_stable(m, s);
    result.oracle_verdict = oracle::satisfies(af, s, Semantics::Stable);
  } else if (d.predicate == "admissible") {
    result.block_verdict = is_admissible(m, s);
    result.oracle_verdict = oracle::satisfies(af, s, Semantics::Admissible);
  } else if (d.predicate == "complete") {
    result.block_verdict = is_complete(m, s);
    result.oracle_verdict = oracle::satisfies(af, s, Semantics::Complete);
  } else if (d.predicate == "theorem20_attacker_aligned") {
    result.block_verdict =
        theorem20_literal(m, s, CorrespondenceReading::AttackerAligned);
    result.oracle_verdict = oracle::satisfies(af, s, Semantics::Complete);
  } else if (d.predicate == "theorem20_target_aligned") {
    result.block_verdict =
        theorem20_literal(m, s, CorrespondenceReading::TargetAligned);
    result.oracle_verdict = oracle::satisfies(af, s, Semantics::Complete);
  } else {
    throw Error(ErrorCode::InvalidArgument,
                "unknown predicate '" + d.predicate + "' in discrepancy record");
  }
  return result;
}

}  // namespace argmat
