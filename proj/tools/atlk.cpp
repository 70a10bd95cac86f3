// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front-end. Exit codes: 0 formula holds in all initial states,
// 1 it does not, 2 usage/parse/validation error, 3 oracle mismatch.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "atlkf.h"

namespace {

int fail(const std::string& context) {
  std::fprintf(stderr, "error: %s: %s", context.c_str(), atlk_last_error());
  if (atlk_last_error_line() > 0)
    std::fprintf(stderr, " (line %d, col %d)", atlk_last_error_line(), atlk_last_error_col());
  std::fprintf(stderr, "\n");
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atlk - explicit-state model checker for ATLK with fairness"};
  app.require_subcommand(1);

  auto* checkCmd = app.add_subcommand("check", "check a formula on a model");
  std::string modelPath, spec, specFile, semantics = "po", algorithm = "auto";
  bool oracle = false, witness = false, json = false, verbose = false, reachableOnly = false;
  int threads = 1;
  checkCmd->add_option("--model", modelPath, "model file (.amf)")->required();
  auto* specOpt = checkCmd->add_option("--spec", spec, "formula text");
  auto* specFileOpt = checkCmd->add_option("--spec-file", specFile, "file containing the formula");
  specOpt->excludes(specFileOpt);
  checkCmd->add_option("--semantics", semantics, "po (default) or fo")
      ->check(CLI::IsMember({"po", "fo"}));
  checkCmd->add_option("--algorithm", algorithm, "basic, improved or auto (default)")
      ->check(CLI::IsMember({"basic", "improved", "auto"}));
  checkCmd->add_flag("--oracle", oracle, "cross-check the result with the brute-force oracle");
  checkCmd->add_flag("--witness", witness, "emit a winning uniform strategy when one exists");
  checkCmd->add_flag("--json", json, "machine-readable output");
  checkCmd->add_flag("--verbose", verbose, "print diagnostics and model warnings");
  checkCmd->add_flag("--reachable-only", reachableOnly, "display only reachable states");
  checkCmd->add_option("--threads", threads, "evaluation threads (output is unchanged)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (spec.empty() && specFile.empty()) {
    std::fprintf(stderr, "error: one of --spec / --spec-file is required\n");
    return 2;
  }
  if (!specFile.empty()) {
    std::ifstream in(specFile);
    if (!in) {
      std::fprintf(stderr, "error: cannot open spec file '%s'\n", specFile.c_str());
      return 2;
    }
    std::ostringstream os;
    os << in.rdbuf();
    spec = os.str();
  }

  atlk_check_options opts;
  atlk_check_options_init(&opts);
  opts.semantics = semantics == "fo" ? ATLK_SEMANTICS_FO : ATLK_SEMANTICS_PO;
  opts.algorithm = algorithm == "basic"      ? ATLK_ALGORITHM_BASIC
                   : algorithm == "improved" ? ATLK_ALGORITHM_IMPROVED
                                             : ATLK_ALGORITHM_AUTO;
  opts.run_oracle = oracle ? 1 : 0;
  opts.collect_witness = witness ? 1 : 0;
  opts.reachable_only = reachableOnly ? 1 : 0;
  opts.threads = threads;
  if (const char* cap = std::getenv("ATLK_STRATEGY_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(cap, &end, 10);
    if (end && *end == '\0' && v > 0) opts.strategy_cap = v;
  }

  atlk_model* model = nullptr;
  if (atlk_model_load_file(modelPath.c_str(), &model) != ATLK_OK) return fail(modelPath);

  atlk_result* result = nullptr;
  if (atlk_check(model, spec.c_str(), &opts, &result) != ATLK_OK) {
    atlk_model_free(model);
    return fail("check");
  }

  if (json)
    std::fputs(atlk_result_json(result), stdout);
  else
    std::fputs(atlk_result_text(result, verbose ? 1 : 0), stdout);

  int exitCode = atlk_result_holds(result) ? 0 : 1;
  if (atlk_result_oracle_ran(result) && !atlk_result_oracle_match(result)) exitCode = 3;
  atlk_result_free(result);
  atlk_model_free(model);
  return exitCode;
}
