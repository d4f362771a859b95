#include "argmat.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "argmat/af.hpp"
#include "argmat/errors.hpp"
#include "argmat/matrix.hpp"
#include "argmat/oracle.hpp"
#include "argmat/semantics.hpp"
#include "argmat/validation.hpp"

struct argmat_af {
  argmat::ArgumentationFramework impl;
};

struct argmat_extensions {
  // Materialized label lists so member pointers stay stable for the handle's
  // whole lifetime.
  std::vector<std::vector<std::string>> extensions;
};

namespace {

thread_local std::string g_last_error;

argmat_status map_code(argmat::ErrorCode code) {
  using argmat::ErrorCode;
  switch (code) {
    case ErrorCode::Parse: return ARGMAT_ERR_PARSE;
    case ErrorCode::DuplicateArgument: return ARGMAT_ERR_DUPLICATE_ARGUMENT;
    case ErrorCode::UnknownArgument: return ARGMAT_ERR_UNKNOWN_ARGUMENT;
    case ErrorCode::EmptyFramework: return ARGMAT_ERR_EMPTY_FRAMEWORK;
    case ErrorCode::EmptySelection: return ARGMAT_ERR_EMPTY_SELECTION;
    case ErrorCode::DimensionMismatch: return ARGMAT_ERR_DIMENSION_MISMATCH;
    case ErrorCode::EnumerationLimitExceeded: return ARGMAT_ERR_ENUMERATION_LIMIT;
    case ErrorCode::OracleLimitExceeded: return ARGMAT_ERR_ORACLE_LIMIT;
    case ErrorCode::PreconditionViolated: return ARGMAT_ERR_PRECONDITION;
    case ErrorCode::InternalInvariantViolated: return ARGMAT_ERR_INTERNAL;
    case ErrorCode::InvalidArgument: return ARGMAT_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io: return ARGMAT_ERR_IO;
  }
  return ARGMAT_ERR_INTERNAL;
}

argmat_status fail(argmat_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

template <typename Fn>
argmat_status wrap(Fn&& fn) {
  try {
    return fn();
  } catch (const argmat::Error& e) {
    return fail(map_code(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ARGMAT_ERR_NOMEM, "out of memory");
  } catch (const std::exception& e) {
    return fail(ARGMAT_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

argmat::ArgumentationFramework parse_any(const std::string& text,
                                         argmat_format format) {
  switch (format) {
    case ARGMAT_FORMAT_APX: return argmat::parse_apx(text);
    case ARGMAT_FORMAT_TGF: return argmat::parse_tgf(text);
  }
  throw argmat::Error(argmat::ErrorCode::InvalidArgument, "unknown input format");
}

argmat::Semantics to_semantics(argmat_semantics sem) {
  switch (sem) {
    case ARGMAT_SEM_CF: return argmat::Semantics::ConflictFree;
    case ARGMAT_SEM_AD: return argmat::Semantics::Admissible;
    case ARGMAT_SEM_ST: return argmat::Semantics::Stable;
    case ARGMAT_SEM_CO: return argmat::Semantics::Complete;
    case ARGMAT_SEM_PR: return argmat::Semantics::Preferred;
    case ARGMAT_SEM_GR: return argmat::Semantics::Grounded;
    case ARGMAT_SEM_ID: return argmat::Semantics::Ideal;
    case ARGMAT_SEM_SST: return argmat::Semantics::SemiStable;
    case ARGMAT_SEM_EAG: return argmat::Semantics::Eager;
  }
  throw argmat::Error(argmat::ErrorCode::InvalidArgument, "unknown semantics id");
}

int effective_limit(int limit) {
  if (limit < 0)
    throw argmat::Error(argmat::ErrorCode::InvalidArgument,
                        "enumeration limit may not be negative");
  return limit == 0 ? argmat::kDefaultEnumerationLimit : limit;
}

argmat::ExtensionSet enumerate_impl(const argmat_af* af, argmat_semantics sem,
                                    int limit) {
  return argmat::enumerate_extensions(argmat::AttackMatrix::build(af->impl),
                                      to_semantics(sem), effective_limit(limit));
}

}  // namespace

extern "C" {

const char* argmat_version(void) { return "1.0.0"; }

const char* argmat_status_name(argmat_status status) {
  switch (status) {
    case ARGMAT_OK: return "ARGMAT_OK";
    case ARGMAT_ERR_PARSE: return "ARGMAT_ERR_PARSE";
    case ARGMAT_ERR_DUPLICATE_ARGUMENT: return "ARGMAT_ERR_DUPLICATE_ARGUMENT";
    case ARGMAT_ERR_UNKNOWN_ARGUMENT: return "ARGMAT_ERR_UNKNOWN_ARGUMENT";
    case ARGMAT_ERR_EMPTY_FRAMEWORK: return "ARGMAT_ERR_EMPTY_FRAMEWORK";
    case ARGMAT_ERR_EMPTY_SELECTION: return "ARGMAT_ERR_EMPTY_SELECTION";
    case ARGMAT_ERR_DIMENSION_MISMATCH: return "ARGMAT_ERR_DIMENSION_MISMATCH";
    case ARGMAT_ERR_ENUMERATION_LIMIT: return "ARGMAT_ERR_ENUMERATION_LIMIT";
    case ARGMAT_ERR_ORACLE_LIMIT: return "ARGMAT_ERR_ORACLE_LIMIT";
    case ARGMAT_ERR_PRECONDITION: return "ARGMAT_ERR_PRECONDITION";
    case ARGMAT_ERR_INTERNAL: return "ARGMAT_ERR_INTERNAL";
    case ARGMAT_ERR_INVALID_ARGUMENT: return "ARGMAT_ERR_INVALID_ARGUMENT";
    case ARGMAT_ERR_IO: return "ARGMAT_ERR_IO";
    case ARGMAT_ERR_NOMEM: return "ARGMAT_ERR_NOMEM";
  }
  return "ARGMAT_ERR_UNKNOWN";
}

const char* argmat_last_error(void) { return g_last_error.c_str(); }

void argmat_string_free(char* text) { std::free(text); }

argmat_status argmat_af_parse(const char* text, argmat_format format,
                              argmat_af** out_af) {
  if (!text || !out_af)
    return fail(ARGMAT_ERR_INVALID_ARGUMENT, "text and out_af must be non-NULL");
  *out_af = nullptr;
  return wrap([&]() {
    auto handle = new argmat_af{parse_any(text, format)};
    *out_af = handle;
    return ARGMAT_OK;
  });
}

argmat_status argmat_af_parse_file(const char* path, argmat_format format,
                                   argmat_af** out_af) {
  if (!path || !out_af)
    return fail(ARGMAT_ERR_INVALID_ARGUMENT, "path and out_af must be non-NULL");
  *out_af = nullptr;
  return wrap([&]() {
    std::ifstream in(path, std::ios::binary);
    if (!in)
      throw argmat::Error(argmat::ErrorCode::Io,
                          std::string("cannot read file '") + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    *out_af = new argmat_af{parse_any(text.str(), format)};
    return ARGMAT_OK;
  });
}

void argmat_af_free(argmat_af* af) { delete af; }

int argmat_af_argument_count(const argmat_af* af) {
  return af ? af->impl.argument_count() : -1;
}

size_t argmat_af_attack_count(const argmat_af* af) {
  return af ? af->impl.attack_count() : static_cast<size_t>(-1);
}

const char* argmat_af_argument_label(const argmat_af* af, int index) {
  if (!af || index < 0 || index >= af->impl.argument_count()) return nullptr;
  return af->impl.label(index).c_str();
}

int argmat_af_has_attack(const argmat_af* af, int source, int target) {
  if (!af) return -1;
  const int n = af->impl.argument_count();
  if (source < 0 || source >= n || target < 0 || target >= n) return -1;
  return af->impl.has_attack(source, target) ? 1 : 0;
}

argmat_status argmat_af_serialize(const argmat_af* af, argmat_format format,
                                  char** out_text) {
  if (!af || !out_text)
    return fail(ARGMAT_ERR_INVALID_ARGUMENT, "af and out_text must be non-NULL");
  *out_text = nullptr;
  return wrap([&]() {
    switch (format) {
      case ARGMAT_FORMAT_APX:
        *out_text = dup_string(argmat::serialize_apx(af->impl));
        return ARGMAT_OK;
      case ARGMAT_FORMAT_TGF:
        *out_text = dup_string(argmat::serialize_tgf(af->impl));
        return ARGMAT_OK;
    }
    throw argmat::Error(argmat::ErrorCode::InvalidArgument, "unknown output format");
  });
}

argmat_status argmat_af_render_matrix(const argmat_af* af, char** out_text) {
  if (!af || !out_text)
    return fail(ARGMAT_ERR_INVALID_ARGUMENT, "af and out_text must be non-NULL");
  *out_text = nullptr;
  return wrap([&]() {
    *out_text = dup_string(argmat::AttackMatrix::build(af->impl).render());
    return ARGMAT_OK;
  });
}

argmat_status argmat_enumerate(const argmat_af* af, argmat_semantics semantics,
                               int limit, argmat_extensions** out_extensions) {
  if (!af || !out_extensions)
    return fail(ARGMAT_ERR_INVALID_ARGUMENT, "af and out_extensions must be non-NULL");
  *out_extensions = nullptr;
  return wrap([&]() {
    argmat::ExtensionSet family = enumerate_impl(af, semantics, limit);
    auto handle = std::make_unique<argmat_extensions>();
    handle->extensions.reserve(family.size());
    for (const argmat::ArgSet& s : family.sets()) {
      std::vector<std::string> labels;
      for (int i : s.indices()) labels.push_back(af->impl.label(i));
      handle->extensions.push_back(std::move(labels));
    }
    *out_extensions = handle.release();
    return ARGMAT_OK;
  });
}

void argmat_extensions_free(argmat_extensions* extensions) { delete extensions; }

size_t argmat_extensions_count(const argmat_extensions* extensions) {
  return extensions ? extensions->extensions.size() : static_cast<size_t>(-1);
}

size_t argmat_extension_size(const argmat_extensions* extensions, size_t index) {
  if (!extensions || index >= extensions->extensions.size())
    return static_cast<size_t>(-1);
  return extensions->extensions[index].size();
}

const char* argmat_extension_member(const argmat_extensions* extensions,
                                    size_t index, size_t member) {
  if (!extensions || index >= extensions->extensions.size()) return nullptr;
  const auto& labels = extensions->extensions[index];
  if (member >= labels.size()) return nullptr;
  return labels[member].c_str();
}

argmat_status argmat_set_satisfies(const argmat_af* af, argmat_semantics semantics,
                                   const char* const* members, size_t member_count,
                                   int limit, int* out_verdict) {
  if (!af || !out_verdict || (member_count > 0 && !members))
    return fail(ARGMAT_ERR_INVALID_ARGUMENT,
                "af, members and out_verdict must be non-NULL");
  return wrap([&]() {
    argmat::ArgSet s(af->impl.argument_count());
    for (size_t i = 0; i < member_count; ++i) {
      if (!members[i])
        throw argmat::Error(argmat::ErrorCode::InvalidArgument,
                            "member label may not be NULL");
      s.insert(af->impl.index_of(members[i]));
    }
    bool verdict = false;
    argmat::Semantics sem = to_semantics(semantics);
    switch (sem) {
      case argmat::Semantics::ConflictFree:
        verdict = argmat::is_conflict_free(argmat::AttackMatrix::build(af->impl), s);
        break;
      case argmat::Semantics::Admissible:
        verdict = argmat::is_admissible(argmat::AttackMatrix::build(af->impl), s);
        break;
      case argmat::Semantics::Stable:
        verdict = argmat::is_stable(argmat::AttackMatrix::build(af->impl), s);
        break;
      case argmat::Semantics::Complete:
        verdict = argmat::is_complete(argmat::AttackMatrix::build(af->impl), s);
        break;
      default:
        verdict = enumerate_impl(af, semantics, limit).contains(s);
        break;
    }
    *out_verdict = verdict ? 1 : 0;
    return ARGMAT_OK;
  });
}

namespace {

argmat_status acceptance_query(const argmat_af* af, argmat_semantics semantics,
                               const char* label, int limit, int* out_verdict,
                               bool credulous) {
  if (!af || !label || !out_verdict)
    return fail(ARGMAT_ERR_INVALID_ARGUMENT,
                "af, label and out_verdict must be non-NULL");
  return wrap([&]() {
    const int query = af->impl.index_of(label);  // UnknownArgument when absent
    argmat::ExtensionSet family = enumerate_impl(af, semantics, limit);
    bool verdict = !credulous;  // skeptical over the empty family is vacuously true
    for (const argmat::ArgSet& s : family.sets()) {
      if (credulous && s.contains(query)) {
        verdict = true;
        break;
      }
      if (!credulous && !s.contains(query)) {
        verdict = false;
        break;
      }
    }
    *out_verdict = verdict ? 1 : 0;
    return ARGMAT_OK;
  });
}

}  // namespace

argmat_status argmat_credulous(const argmat_af* af, argmat_semantics semantics,
                               const char* label, int limit, int* out_verdict) {
  return acceptance_query(af, semantics, label, limit, out_verdict, true);
}

argmat_status argmat_skeptical(const argmat_af* af, argmat_semantics semantics,
                               const char* label, int limit, int* out_verdict) {
  return acceptance_query(af, semantics, label, limit, out_verdict, false);
}

argmat_status argmat_run_campaign(const argmat_campaign_options* options,
                                  char** out_summary, char** out_json,
                                  uint64_t* out_core_disagreements,
                                  uint64_t* out_theorem20_disagreements) {
  if (!options) return fail(ARGMAT_ERR_INVALID_ARGUMENT, "options must be non-NULL");
  if (options->attack_probability_count > 0 && !options->attack_probabilities)
    return fail(ARGMAT_ERR_INVALID_ARGUMENT,
                "attack_probabilities must be non-NULL when a count is given");
  if (out_summary) *out_summary = nullptr;
  if (out_json) *out_json = nullptr;
  return wrap([&]() {
    argmat::CampaignConfig config;
    config.trials = options->trials;
    config.n_min = options->n_min;
    config.n_max = options->n_max;
    config.attack_probabilities.assign(
        options->attack_probabilities,
        options->attack_probabilities + options->attack_probability_count);
    config.base_seed = options->base_seed;
    config.allow_self_attacks = options->allow_self_attacks != 0;

    argmat::ValidationReport report = argmat::run_campaign(config);
    if (out_summary) *out_summary = dup_string(report.summary());
    if (out_json) *out_json = dup_string(report.to_json());
    if (out_core_disagreements) *out_core_disagreements = report.core_disagreements();
    if (out_theorem20_disagreements)
      *out_theorem20_disagreements = report.theorem20_disagreements();
    return ARGMAT_OK;
  });
}

}  // extern "C"
