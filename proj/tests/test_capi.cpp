#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

// Exercises the shared library strictly through the C surface in argmat.h —
// the same contract the CLI and any external binding sees.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "argmat.h"

namespace {

const char* kEx8 =
    "arg(1).arg(2).arg(3).arg(4).arg(5)."
    "att(1,2).att(2,3).att(2,5).att(4,3).att(5,4).";

struct AfHandle {
  argmat_af* af = nullptr;
  ~AfHandle() { argmat_af_free(af); }
};

struct ExtHandle {
  argmat_extensions* e = nullptr;
  ~ExtHandle() { argmat_extensions_free(e); }
};

std::vector<std::vector<std::string>> materialize(const argmat_extensions* e) {
  std::vector<std::vector<std::string>> out;
  for (size_t i = 0; i < argmat_extensions_count(e); ++i) {
    std::vector<std::string> ext;
    for (size_t m = 0; m < argmat_extension_size(e, i); ++m)
      ext.push_back(argmat_extension_member(e, i, m));
    out.push_back(std::move(ext));
  }
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(argmat_version()) == "1.0.0");
  CHECK(std::string(argmat_status_name(ARGMAT_OK)) == "ARGMAT_OK");
  CHECK(std::string(argmat_status_name(ARGMAT_ERR_PARSE)) == "ARGMAT_ERR_PARSE");
  CHECK(std::string(argmat_status_name(ARGMAT_ERR_ENUMERATION_LIMIT)) ==
        "ARGMAT_ERR_ENUMERATION_LIMIT");
}

TEST_CASE("parse, inspect, serialize") {
  AfHandle h;
  REQUIRE(argmat_af_parse(kEx8, ARGMAT_FORMAT_APX, &h.af) == ARGMAT_OK);
  CHECK(argmat_af_argument_count(h.af) == 5);
  CHECK(argmat_af_attack_count(h.af) == 5);
  CHECK(std::string(argmat_af_argument_label(h.af, 0)) == "1");
  CHECK(std::string(argmat_af_argument_label(h.af, 4)) == "5");
  CHECK(argmat_af_argument_label(h.af, 5) == nullptr);
  CHECK(argmat_af_has_attack(h.af, 0, 1) == 1);
  CHECK(argmat_af_has_attack(h.af, 1, 0) == 0);
  CHECK(argmat_af_has_attack(h.af, 9, 0) == -1);

  char* apx = nullptr;
  REQUIRE(argmat_af_serialize(h.af, ARGMAT_FORMAT_APX, &apx) == ARGMAT_OK);
  CHECK(std::string(apx).find("att(5,4).") != std::string::npos);
  argmat_string_free(apx);

  char* tgf = nullptr;
  REQUIRE(argmat_af_serialize(h.af, ARGMAT_FORMAT_TGF, &tgf) == ARGMAT_OK);
  AfHandle round;
  REQUIRE(argmat_af_parse(tgf, ARGMAT_FORMAT_TGF, &round.af) == ARGMAT_OK);
  CHECK(argmat_af_attack_count(round.af) == 5);
  argmat_string_free(tgf);

  char* grid = nullptr;
  REQUIRE(argmat_af_render_matrix(h.af, &grid) == ARGMAT_OK);
  CHECK(std::string(grid) ==
        "0 1 0 0 0\n0 0 1 0 1\n0 0 0 0 0\n0 0 1 0 0\n0 0 0 1 0\n");
  argmat_string_free(grid);
}

TEST_CASE("parse failures set codes and a message") {
  argmat_af* af = nullptr;
  argmat_status st = argmat_af_parse("arg(1).\narg(1).\n", ARGMAT_FORMAT_APX, &af);
  CHECK(st == ARGMAT_ERR_DUPLICATE_ARGUMENT);
  CHECK(af == nullptr);
  CHECK(std::strlen(argmat_last_error()) > 0);

  st = argmat_af_parse("att(1,2).", ARGMAT_FORMAT_APX, &af);
  CHECK(st == ARGMAT_ERR_UNKNOWN_ARGUMENT);

  st = argmat_af_parse("nonsense here", ARGMAT_FORMAT_TGF, &af);
  CHECK(st == ARGMAT_ERR_PARSE);

  st = argmat_af_parse(nullptr, ARGMAT_FORMAT_APX, &af);
  CHECK(st == ARGMAT_ERR_INVALID_ARGUMENT);

  st = argmat_af_parse_file("/no/such/file.apx", ARGMAT_FORMAT_APX, &af);
  CHECK(st == ARGMAT_ERR_IO);
  CHECK(std::string(argmat_last_error()).find("/no/such/file.apx") !=
        std::string::npos);
}

TEST_CASE("parse_file reads from disk") {
  const char* path = "capi_roundtrip.apx";
  std::FILE* f = std::fopen(path, "wb");
  REQUIRE(f != nullptr);
  std::fputs(kEx8, f);
  std::fclose(f);

  AfHandle h;
  REQUIRE(argmat_af_parse_file(path, ARGMAT_FORMAT_APX, &h.af) == ARGMAT_OK);
  CHECK(argmat_af_argument_count(h.af) == 5);
  std::remove(path);
}

TEST_CASE("enumerate through the C surface") {
  AfHandle h;
  REQUIRE(argmat_af_parse(kEx8, ARGMAT_FORMAT_APX, &h.af) == ARGMAT_OK);

  ExtHandle adm;
  REQUIRE(argmat_enumerate(h.af, ARGMAT_SEM_AD, 0, &adm.e) == ARGMAT_OK);
  auto sets = materialize(adm.e);
  REQUIRE(sets.size() == 4);
  CHECK(sets[0].empty());
  CHECK(sets[1] == std::vector<std::string>{"1"});
  CHECK(sets[2] == std::vector<std::string>{"1", "5"});
  CHECK(sets[3] == std::vector<std::string>{"1", "3", "5"});

  ExtHandle stable;
  REQUIRE(argmat_enumerate(h.af, ARGMAT_SEM_ST, 0, &stable.e) == ARGMAT_OK);
  CHECK(materialize(stable.e) ==
        std::vector<std::vector<std::string>>{{"1", "3", "5"}});

  // Accessor edges.
  CHECK(argmat_extension_size(adm.e, 99) == static_cast<size_t>(-1));
  CHECK(argmat_extension_member(adm.e, 0, 0) == nullptr);
  CHECK(argmat_extension_member(adm.e, 3, 2) != nullptr);

  // Limit handling.
  argmat_extensions* out = nullptr;
  CHECK(argmat_enumerate(h.af, ARGMAT_SEM_CF, 4, &out) ==
        ARGMAT_ERR_ENUMERATION_LIMIT);
  CHECK(out == nullptr);
  CHECK(argmat_enumerate(h.af, ARGMAT_SEM_CF, -1, &out) ==
        ARGMAT_ERR_INVALID_ARGUMENT);

  AfHandle empty;
  REQUIRE(argmat_af_parse("#\n", ARGMAT_FORMAT_TGF, &empty.af) == ARGMAT_OK);
  CHECK(argmat_af_argument_count(empty.af) == 0);
  CHECK(argmat_enumerate(empty.af, ARGMAT_SEM_CF, 0, &out) ==
        ARGMAT_ERR_EMPTY_FRAMEWORK);
}

TEST_CASE("set_satisfies") {
  AfHandle h;
  REQUIRE(argmat_af_parse(kEx8, ARGMAT_FORMAT_APX, &h.af) == ARGMAT_OK);

  const char* s135[] = {"1", "3", "5"};
  const char* s15[] = {"1", "5"};
  const char* s12[] = {"1", "2"};
  const char* bad[] = {"1", "zz"};
  int verdict = -1;

  REQUIRE(argmat_set_satisfies(h.af, ARGMAT_SEM_CO, s135, 3, 0, &verdict) ==
          ARGMAT_OK);
  CHECK(verdict == 1);
  REQUIRE(argmat_set_satisfies(h.af, ARGMAT_SEM_CO, s15, 2, 0, &verdict) ==
          ARGMAT_OK);
  CHECK(verdict == 0);
  REQUIRE(argmat_set_satisfies(h.af, ARGMAT_SEM_CF, s12, 2, 0, &verdict) ==
          ARGMAT_OK);
  CHECK(verdict == 0);
  REQUIRE(argmat_set_satisfies(h.af, ARGMAT_SEM_AD, s15, 2, 0, &verdict) ==
          ARGMAT_OK);
  CHECK(verdict == 1);
  REQUIRE(argmat_set_satisfies(h.af, ARGMAT_SEM_GR, s135, 3, 0, &verdict) ==
          ARGMAT_OK);
  CHECK(verdict == 1);
  REQUIRE(argmat_set_satisfies(h.af, ARGMAT_SEM_PR, nullptr, 0, 0, &verdict) ==
          ARGMAT_OK);
  CHECK(verdict == 0);  // the empty set is not preferred here

  CHECK(argmat_set_satisfies(h.af, ARGMAT_SEM_CF, bad, 2, 0, &verdict) ==
        ARGMAT_ERR_UNKNOWN_ARGUMENT);
}

TEST_CASE("credulous and skeptical queries") {
  AfHandle h;
  REQUIRE(argmat_af_parse(kEx8, ARGMAT_FORMAT_APX, &h.af) == ARGMAT_OK);

  int verdict = -1;
  REQUIRE(argmat_credulous(h.af, ARGMAT_SEM_AD, "5", 0, &verdict) == ARGMAT_OK);
  CHECK(verdict == 1);
  REQUIRE(argmat_credulous(h.af, ARGMAT_SEM_AD, "2", 0, &verdict) == ARGMAT_OK);
  CHECK(verdict == 0);
  REQUIRE(argmat_skeptical(h.af, ARGMAT_SEM_ST, "3", 0, &verdict) == ARGMAT_OK);
  CHECK(verdict == 1);
  REQUIRE(argmat_skeptical(h.af, ARGMAT_SEM_AD, "1", 0, &verdict) == ARGMAT_OK);
  CHECK(verdict == 0);  // the empty set is admissible

  CHECK(argmat_credulous(h.af, ARGMAT_SEM_AD, "zz", 0, &verdict) ==
        ARGMAT_ERR_UNKNOWN_ARGUMENT);

  // No stable extensions: skeptical acceptance is vacuous, credulous is not.
  AfHandle cycle;
  REQUIRE(argmat_af_parse("arg(1).arg(2).arg(3).att(1,2).att(2,3).att(3,1).",
                          ARGMAT_FORMAT_APX, &cycle.af) == ARGMAT_OK);
  REQUIRE(argmat_skeptical(cycle.af, ARGMAT_SEM_ST, "1", 0, &verdict) == ARGMAT_OK);
  CHECK(verdict == 1);
  REQUIRE(argmat_credulous(cycle.af, ARGMAT_SEM_ST, "1", 0, &verdict) == ARGMAT_OK);
  CHECK(verdict == 0);
}

TEST_CASE("campaign through the C surface") {
  double ps[] = {0.2, 0.5};
  argmat_campaign_options options{};
  options.trials = 12;
  options.n_min = 1;
  options.n_max = 4;
  options.attack_probabilities = ps;
  options.attack_probability_count = 2;
  options.base_seed = 5;
  options.allow_self_attacks = 0;

  char* summary = nullptr;
  char* json = nullptr;
  uint64_t core = 99, theorem20 = 99;
  REQUIRE(argmat_run_campaign(&options, &summary, &json, &core, &theorem20) ==
          ARGMAT_OK);
  REQUIRE(summary != nullptr);
  REQUIRE(json != nullptr);
  CHECK(core == 0);
  CHECK(std::string(summary).find("frameworks tested: 12") != std::string::npos);
  CHECK(std::string(json).find("\"schema\": \"argmat-validation-report/1\"") !=
        std::string::npos);

  // Determinism end to end.
  char* json2 = nullptr;
  REQUIRE(argmat_run_campaign(&options, nullptr, &json2, nullptr, nullptr) ==
          ARGMAT_OK);
  CHECK(std::string(json) == std::string(json2));

  argmat_string_free(summary);
  argmat_string_free(json);
  argmat_string_free(json2);

  options.n_min = 0;  // invalid
  CHECK(argmat_run_campaign(&options, nullptr, nullptr, nullptr, nullptr) ==
        ARGMAT_ERR_INVALID_ARGUMENT);
  CHECK(argmat_run_campaign(nullptr, nullptr, nullptr, nullptr, nullptr) ==
        ARGMAT_ERR_INVALID_ARGUMENT);
}

TEST_CASE("NULL-handle robustness") {
  CHECK(argmat_af_argument_count(nullptr) == -1);
  CHECK(argmat_af_attack_count(nullptr) == static_cast<size_t>(-1));
  CHECK(argmat_af_argument_label(nullptr, 0) == nullptr);
  CHECK(argmat_af_has_attack(nullptr, 0, 0) == -1);
  CHECK(argmat_extensions_count(nullptr) == static_cast<size_t>(-1));
  CHECK(argmat_extension_member(nullptr, 0, 0) == nullptr);
  argmat_af_free(nullptr);          // must be safe
  argmat_extensions_free(nullptr);  // must be safe
  argmat_string_free(nullptr);      // must be safe

  char* text = nullptr;
  CHECK(argmat_af_serialize(nullptr, ARGMAT_FORMAT_APX, &text) ==
        ARGMAT_ERR_INVALID_ARGUMENT);
  int verdict = 0;
  CHECK(argmat_credulous(nullptr, ARGMAT_SEM_AD, "1", 0, &verdict) ==
        ARGMAT_ERR_INVALID_ARGUMENT);
}
