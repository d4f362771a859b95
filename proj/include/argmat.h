/*
 * argmat — matrix-based solver and validation toolkit for abstract
 * argumentation frameworks. C interface to the shared library.
 *
 * Conventions:
 *   - Every fallible call returns an argmat_status; ARGMAT_OK is 0.
 *   - On failure, argmat_last_error() returns a message for the most recent
 *     failing call on the calling thread (valid until that thread fails again).
 *   - Objects come back through out-parameters as opaque handles and must be
 *     released with the matching *_free function. Strings returned through
 *     char** out-parameters are heap copies; release with argmat_string_free.
 *   - Passing NULL for a required pointer yields ARGMAT_ERR_INVALID_ARGUMENT.
 */

#ifndef ARGMAT_H
#define ARGMAT_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum argmat_status {
  ARGMAT_OK = 0,
  ARGMAT_ERR_PARSE = 1,
  ARGMAT_ERR_DUPLICATE_ARGUMENT = 2,
  ARGMAT_ERR_UNKNOWN_ARGUMENT = 3,
  ARGMAT_ERR_EMPTY_FRAMEWORK = 4,
  ARGMAT_ERR_EMPTY_SELECTION = 5,
  ARGMAT_ERR_DIMENSION_MISMATCH = 6,
  ARGMAT_ERR_ENUMERATION_LIMIT = 7,
  ARGMAT_ERR_ORACLE_LIMIT = 8,
  ARGMAT_ERR_PRECONDITION = 9,
  ARGMAT_ERR_INTERNAL = 10,
  ARGMAT_ERR_INVALID_ARGUMENT = 11,
  ARGMAT_ERR_IO = 12,
  ARGMAT_ERR_NOMEM = 13
} argmat_status;

typedef enum argmat_semantics {
  ARGMAT_SEM_CF = 0,  /* conflict-free */
  ARGMAT_SEM_AD = 1,  /* admissible    */
  ARGMAT_SEM_ST = 2,  /* stable        */
  ARGMAT_SEM_CO = 3,  /* complete      */
  ARGMAT_SEM_PR = 4,  /* preferred     */
  ARGMAT_SEM_GR = 5,  /* grounded      */
  ARGMAT_SEM_ID = 6,  /* ideal         */
  ARGMAT_SEM_SST = 7, /* semi-stable   */
  ARGMAT_SEM_EAG = 8  /* eager         */
} argmat_semantics;

typedef enum argmat_format {
  ARGMAT_FORMAT_APX = 0,
  ARGMAT_FORMAT_TGF = 1
} argmat_format;

typedef struct argmat_af argmat_af;
typedef struct argmat_extensions argmat_extensions;

/* Library version string, e.g. "1.0.0". Static storage; do not free. */
const char* argmat_version(void);

/* Stable symbolic name for a status code, e.g. "ARGMAT_ERR_PARSE". */
const char* argmat_status_name(argmat_status status);

/* Message from the most recent failing call on this thread ("" if none). */
const char* argmat_last_error(void);

void argmat_string_free(char* text);

/* ---- frameworks --------------------------------------------------------- */

argmat_status argmat_af_parse(const char* text, argmat_format format,
                              argmat_af** out_af);
argmat_status argmat_af_parse_file(const char* path, argmat_format format,
                                   argmat_af** out_af);
void argmat_af_free(argmat_af* af);

/* -1 on NULL handle. */
int argmat_af_argument_count(const argmat_af* af);
/* Attack count after duplicate collapse; (size_t)-1 on NULL handle. */
size_t argmat_af_attack_count(const argmat_af* af);
/* Borrowed pointer into the framework, NULL when index is out of range. */
const char* argmat_af_argument_label(const argmat_af* af, int index);
/* 1 / 0; -1 on NULL handle or out-of-range index. */
int argmat_af_has_attack(const argmat_af* af, int source, int target);

argmat_status argmat_af_serialize(const argmat_af* af, argmat_format format,
                                  char** out_text);
/* The 0/1 attack matrix, one space-separated row per line. */
argmat_status argmat_af_render_matrix(const argmat_af* af, char** out_text);

/* ---- solving ------------------------------------------------------------ */

/*
 * Enumerate all extensions under a semantics. `limit` caps the framework size
 * accepted for enumeration; pass 0 for the built-in default (24). Extensions
 * come out in canonical order: smaller sets first, ties broken
 * lexicographically by argument index.
 */
argmat_status argmat_enumerate(const argmat_af* af, argmat_semantics semantics,
                               int limit, argmat_extensions** out_extensions);
void argmat_extensions_free(argmat_extensions* extensions);

size_t argmat_extensions_count(const argmat_extensions* extensions);
/* Number of members of extension `index`; (size_t)-1 when out of range. */
size_t argmat_extension_size(const argmat_extensions* extensions, size_t index);
/* Borrowed label of one member, NULL when out of range. */
const char* argmat_extension_member(const argmat_extensions* extensions,
                                    size_t index, size_t member);

/*
 * Does the set given by `members` satisfy the semantics? For CF/AD/ST/CO this
 * is a direct matrix check; the selection semantics (PR/GR/ID/SST/EAG) test
 * membership in the enumerated family, so `limit` applies to them.
 * Verdict is written as 1/0.
 */
argmat_status argmat_set_satisfies(const argmat_af* af, argmat_semantics semantics,
                                   const char* const* members, size_t member_count,
                                   int limit, int* out_verdict);

/* Is `label` in some / every extension? Verdict written as 1/0; skeptical
 * acceptance over an empty family is vacuously 1. */
argmat_status argmat_credulous(const argmat_af* af, argmat_semantics semantics,
                               const char* label, int limit, int* out_verdict);
argmat_status argmat_skeptical(const argmat_af* af, argmat_semantics semantics,
                               const char* label, int limit, int* out_verdict);

/* ---- validation --------------------------------------------------------- */

typedef struct argmat_campaign_options {
  uint64_t trials;
  int n_min;
  int n_max;
  const double* attack_probabilities;
  size_t attack_probability_count;
  uint64_t base_seed;
  int allow_self_attacks;
} argmat_campaign_options;

/*
 * Run a randomized differential campaign: matrix-based predicates against the
 * brute-force reference on every subset of every generated framework, plus a
 * survey of both readings of the literal completeness criterion. Deterministic
 * for a given options struct.
 *
 * Any of the out-parameters may be NULL. out_summary receives a line-oriented
 * human summary, out_json the full JSON report. Core disagreements are solver
 * bugs; theorem20 disagreements are expected survey findings.
 */
argmat_status argmat_run_campaign(const argmat_campaign_options* options,
                                  char** out_summary, char** out_json,
                                  uint64_t* out_core_disagreements,
                                  uint64_t* out_theorem20_disagreements);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ARGMAT_H */
