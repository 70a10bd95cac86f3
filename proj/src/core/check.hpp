// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oracle.hpp"

namespace atlk {

struct CheckOptions {
  Semantics semantics = Semantics::Po;
  Algorithm algorithm = Algorithm::Auto;
  bool runOracle = false;
  bool collectWitness = false;
  bool reachableOnly = false;   // affects display only
  std::uint64_t strategyCap = kDefaultStrategyCap;
  int threads = 1;
};

struct Diagnostics {
  std::uint64_t strategiesEnumerated = 0;
  std::uint64_t branchesPruned = 0;
  std::uint64_t fixpointIterations = 0;
  double elapsedMs = 0.0;
};

struct CheckResult {
  std::string formulaText;
  bool holdsInAllInit = false;
  StateSet sat;
  std::vector<std::string> satNames;  // display list (reachable-only applied)
  Diagnostics diag;
  std::vector<std::string> witnessLines;
  bool oracleRan = false;
  bool oracleMatch = true;
};

CheckResult check(const Model& m, const FormulaPtr& f, const CheckOptions& opts);

std::string renderText(const Model& m, const CheckResult& r, bool verbose);
// Schema-stable and byte-identical across runs: elapsed time is omitted.
std::string renderJson(const CheckResult& r);

}  // namespace atlk
