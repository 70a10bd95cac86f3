/* Copyright 2026 The atlkf Authors */
/* SPDX-License-Identifier: Apache-2.0 */

/* C interface to the atlkf model-checking core.
 *
 * All functions returning atlk_status set a thread-local error message
 * retrievable with atlk_last_error() on failure. Objects are opaque and
 * freed with their _free function; accessors return pointers owned by the
 * queried object, valid until it is freed.
 */

#ifndef ATLKF_H
#define ATLKF_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct atlk_model atlk_model;
typedef struct atlk_result atlk_result;

typedef enum {
  ATLK_OK = 0,
  ATLK_ERR_SYNTAX = 1,       /* model or formula parse error */
  ATLK_ERR_VALIDATION = 2,   /* model invariant violated */
  ATLK_ERR_BINDING = 3,      /* unknown agent or atom */
  ATLK_ERR_CAP = 4,          /* strategy enumeration cap exceeded */
  ATLK_ERR_ARGUMENT = 5,     /* null pointer / bad option value */
  ATLK_ERR_IO = 6            /* file not readable */
} atlk_status;

#define ATLK_SEMANTICS_PO 0
#define ATLK_SEMANTICS_FO 1

#define ATLK_ALGORITHM_AUTO 0
#define ATLK_ALGORITHM_BASIC 1
#define ATLK_ALGORITHM_IMPROVED 2

typedef struct {
  int semantics;                    /* ATLK_SEMANTICS_* (default po) */
  int algorithm;                    /* ATLK_ALGORITHM_* (default auto) */
  int run_oracle;                   /* nonzero: cross-check with the oracle */
  int collect_witness;              /* nonzero: extract a witness strategy */
  int reachable_only;               /* nonzero: display only reachable states */
  unsigned long long strategy_cap;  /* 0: default (2^20) */
  int threads;                      /* reserved; <= 1 means sequential */
} atlk_check_options;

/* Fills *opts with defaults. */
void atlk_check_options_init(atlk_check_options* opts);

/* Last error of the current thread: human-readable message, error-kind name,
 * and 1-based source position (-1 when not applicable). */
const char* atlk_last_error(void);
const char* atlk_last_error_kind(void);
int atlk_last_error_line(void);
int atlk_last_error_col(void);

/* Model loading (AMF text). */
atlk_status atlk_model_load_string(const char* text, atlk_model** out);
atlk_status atlk_model_load_file(const char* path, atlk_model** out);
void atlk_model_free(atlk_model* m);

size_t atlk_model_state_count(const atlk_model* m);
size_t atlk_model_agent_count(const atlk_model* m);
size_t atlk_model_warning_count(const atlk_model* m);
const char* atlk_model_warning(const atlk_model* m, size_t i);

/* Parses the formula, evaluates it on the model, and returns a result. */
atlk_status atlk_check(const atlk_model* m, const char* formula,
                       const atlk_check_options* opts, atlk_result** out);
void atlk_result_free(atlk_result* r);

int atlk_result_holds(const atlk_result* r); /* 1 iff init subset of sat */
size_t atlk_result_sat_count(const atlk_result* r);
const char* atlk_result_sat_state(const atlk_result* r, size_t i);
size_t atlk_result_witness_count(const atlk_result* r);
const char* atlk_result_witness_line(const atlk_result* r, size_t i);
int atlk_result_oracle_ran(const atlk_result* r);
int atlk_result_oracle_match(const atlk_result* r);
unsigned long long atlk_result_strategies_enumerated(const atlk_result* r);
unsigned long long atlk_result_branches_pruned(const atlk_result* r);
unsigned long long atlk_result_fixpoint_iterations(const atlk_result* r);
double atlk_result_elapsed_ms(const atlk_result* r);

/* Rendered reports; owned by the result. */
const char* atlk_result_text(const atlk_result* r, int verbose);
const char* atlk_result_json(const atlk_result* r);

#ifdef __cplusplus
}
#endif

#endif /* ATLKF_H */
