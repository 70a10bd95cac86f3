// Copyright 2026 The atlkf Authors
// SPDX-License-Identifier: Apache-2.0

#include "atlkf.h"

#include <cstring>
#include <string>

#include "core/amf.hpp"
#include "core/check.hpp"

namespace {

thread_local std::string g_error;
thread_local std::string g_errorKind;
thread_local int g_errorLine = -1;
thread_local int g_errorCol = -1;

void clearError() {
  g_error.clear();
  g_errorKind.clear();
  g_errorLine = g_errorCol = -1;
}

atlk_status setError(const atlk::Error& e) {
  g_error = e.what();
  g_errorKind = atlk::errorKindName(e.kind);
  g_errorLine = e.line;
  g_errorCol = e.col;
  switch (e.kind) {
    case atlk::ErrorKind::Syntax:
      return ATLK_ERR_SYNTAX;
    case atlk::ErrorKind::UndeclaredSymbol:
    case atlk::ErrorKind::UnknownAgent:
    case atlk::ErrorKind::EmptyCoalition:
      return ATLK_ERR_BINDING;
    case atlk::ErrorKind::CapExceeded:
      return ATLK_ERR_CAP;
    default:
      return ATLK_ERR_VALIDATION;
  }
}

atlk_status setError(atlk_status code, const std::string& msg) {
  g_error = msg;
  g_errorKind = code == ATLK_ERR_IO ? "Io" : "Argument";
  g_errorLine = g_errorCol = -1;
  return code;
}

}  // namespace

struct atlk_model {
  atlk::Model model;
};

struct atlk_result {
  atlk::CheckResult result;
  std::string text;
  std::string textVerbose;
  std::string json;
};

extern "C" {

void atlk_check_options_init(atlk_check_options* opts) {
  if (!opts) return;
  opts->semantics = ATLK_SEMANTICS_PO;
  opts->algorithm = ATLK_ALGORITHM_AUTO;
  opts->run_oracle = 0;
  opts->collect_witness = 0;
  opts->reachable_only = 0;
  opts->strategy_cap = 0;
  opts->threads = 1;
}

const char* atlk_last_error(void) { return g_error.c_str(); }
const char* atlk_last_error_kind(void) { return g_errorKind.c_str(); }
int atlk_last_error_line(void) { return g_errorLine; }
int atlk_last_error_col(void) { return g_errorCol; }

atlk_status atlk_model_load_string(const char* text, atlk_model** out) {
  if (!text || !out) return setError(ATLK_ERR_ARGUMENT, "null argument");
  clearError();
  try {
    *out = new atlk_model{atlk::loadModel(text)};
    return ATLK_OK;
  } catch (const atlk::Error& e) {
    return setError(e);
  }
}

atlk_status atlk_model_load_file(const char* path, atlk_model** out) {
  if (!path || !out) return setError(ATLK_ERR_ARGUMENT, "null argument");
  clearError();
  try {
    *out = new atlk_model{atlk::loadModelFile(path)};
    return ATLK_OK;
  } catch (const atlk::Error& e) {
    if (e.kind == atlk::ErrorKind::Validation && std::strstr(e.what(), "cannot open"))
      return setError(ATLK_ERR_IO, e.what());
    return setError(e);
  }
}

void atlk_model_free(atlk_model* m) { delete m; }

size_t atlk_model_state_count(const atlk_model* m) { return m ? m->model.stateCount() : 0; }
size_t atlk_model_agent_count(const atlk_model* m) {
  return m ? static_cast<size_t>(m->model.agentCount()) : 0;
}
size_t atlk_model_warning_count(const atlk_model* m) {
  return m ? m->model.warnings().size() : 0;
}
const char* atlk_model_warning(const atlk_model* m, size_t i) {
  if (!m || i >= m->model.warnings().size()) return nullptr;
  return m->model.warnings()[i].c_str();
}

atlk_status atlk_check(const atlk_model* m, const char* formula,
                       const atlk_check_options* opts, atlk_result** out) {
  if (!m || !formula || !out) return setError(ATLK_ERR_ARGUMENT, "null argument");
  clearError();
  atlk_check_options defaults;
  atlk_check_options_init(&defaults);
  if (!opts) opts = &defaults;

  atlk::CheckOptions co;
  switch (opts->semantics) {
    case ATLK_SEMANTICS_PO:
      co.semantics = atlk::Semantics::Po;
      break;
    case ATLK_SEMANTICS_FO:
      co.semantics = atlk::Semantics::Fo;
      break;
    default:
      return setError(ATLK_ERR_ARGUMENT, "invalid semantics");
  }
  switch (opts->algorithm) {
    case ATLK_ALGORITHM_AUTO:
      co.algorithm = atlk::Algorithm::Auto;
      break;
    case ATLK_ALGORITHM_BASIC:
      co.algorithm = atlk::Algorithm::Basic;
      break;
    case ATLK_ALGORITHM_IMPROVED:
      co.algorithm = atlk::Algorithm::Improved;
      break;
    default:
      return setError(ATLK_ERR_ARGUMENT, "invalid algorithm");
  }
  co.runOracle = opts->run_oracle != 0;
  co.collectWitness = opts->collect_witness != 0;
  co.reachableOnly = opts->reachable_only != 0;
  if (opts->strategy_cap) co.strategyCap = opts->strategy_cap;
  co.threads = opts->threads > 1 ? opts->threads : 1;

  try {
    atlk::FormulaPtr f = atlk::parseFormula(formula);
    auto* r = new atlk_result{atlk::check(m->model, f, co), "", "", ""};
    r->text = atlk::renderText(m->model, r->result, false);
    r->textVerbose = atlk::renderText(m->model, r->result, true);
    r->json = atlk::renderJson(r->result);
    *out = r;
    return ATLK_OK;
  } catch (const atlk::Error& e) {
    return setError(e);
  }
}

void atlk_result_free(atlk_result* r) { delete r; }

int atlk_result_holds(const atlk_result* r) { return r && r->result.holdsInAllInit ? 1 : 0; }
size_t atlk_result_sat_count(const atlk_result* r) { return r ? r->result.satNames.size() : 0; }
const char* atlk_result_sat_state(const atlk_result* r, size_t i) {
  if (!r || i >= r->result.satNames.size()) return nullptr;
  return r->result.satNames[i].c_str();
}
size_t atlk_result_witness_count(const atlk_result* r) {
  return r ? r->result.witnessLines.size() : 0;
}
const char* atlk_result_witness_line(const atlk_result* r, size_t i) {
  if (!r || i >= r->result.witnessLines.size()) return nullptr;
  return r->result.witnessLines[i].c_str();
}
int atlk_result_oracle_ran(const atlk_result* r) { return r && r->result.oracleRan ? 1 : 0; }
int atlk_result_oracle_match(const atlk_result* r) { return r && r->result.oracleMatch ? 1 : 0; }
unsigned long long atlk_result_strategies_enumerated(const atlk_result* r) {
  return r ? r->result.diag.strategiesEnumerated : 0;
}
unsigned long long atlk_result_branches_pruned(const atlk_result* r) {
  return r ? r->result.diag.branchesPruned : 0;
}
unsigned long long atlk_result_fixpoint_iterations(const atlk_result* r) {
  return r ? r->result.diag.fixpointIterations : 0;
}
double atlk_result_elapsed_ms(const atlk_result* r) { return r ? r->result.diag.elapsedMs : 0.0; }

const char* atlk_result_text(const atlk_result* r, int verbose) {
  if (!r) return nullptr;
  return verbose ? r->textVerbose.c_str() : r->text.c_str();
}
const char* atlk_result_json(const atlk_result* r) { return r ? r->json.c_str() : nullptr; }

}  // extern "C"
