/*
 * Copyright 2026 The rphase Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RPHASE_RPHASE_H_
#define RPHASE_RPHASE_H_

#include <stddef.h>

#if defined(_WIN32)
#define RPHASE_API __declspec(dllexport)
#else
#define RPHASE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rphase_status {
  RPHASE_OK = 0,
  RPHASE_E_INVALID_ARGUMENT = 1,
  RPHASE_E_PARSE = 2,
  RPHASE_E_UNSUPPORTED_GATE = 3,
  RPHASE_E_NO_CONSTRUCTION = 4,
  RPHASE_E_ANCILLA_BUDGET = 5,
  RPHASE_E_ARITY_MISMATCH = 6,
  RPHASE_E_SPECIAL_FORM = 7,
  RPHASE_E_NOT_PHASE_PERMUTATION = 8,
  RPHASE_E_NOT_RELATIVE_PHASE = 9,
  RPHASE_E_WIDTH_LIMIT = 10,
  RPHASE_E_MARKER_IN_SIMULATION = 11,
  RPHASE_E_OVERFLOW = 12,
  RPHASE_E_BACKEND = 13,
  RPHASE_E_INTERNAL = 14
} rphase_status;

/* Opaque circuit handle. */
typedef struct rphase_circuit rphase_circuit;

typedef struct rphase_synth_options {
  const char* gate;    /* catalog name, see rphase_catalog */
  int n;
  int k;
  const char* ancilla; /* NULL, "clean" or "dirty" */
  int variant;
  const char* u;       /* NULL, "x", "z" or "p" */
} rphase_synth_options;

typedef struct rphase_verify_options {
  const char* target;      /* "tof" or "identity" */
  int n;                   /* 0: infer from roles */
  const char* layout;      /* NULL or per-qubit letters c,n,t,0,x,i */
  const char* ancilla;     /* NULL, "clean" or "dirty" */
  const char* equivalence; /* "exact", "global", "relative", "special" */
  const char* xprime;      /* NULL or comma separated qubit indices */
  const char* backend;     /* NULL (automatic), "ring" or "float" */
} rphase_verify_options;

/* Message of the last failing call on this thread; never NULL. */
RPHASE_API const char* rphase_last_error(void);
RPHASE_API const char* rphase_status_string(rphase_status status);

/* Strings returned through char** outputs are released with this. */
RPHASE_API void rphase_string_free(char* s);
RPHASE_API void rphase_circuit_free(rphase_circuit* c);

/* QASM or marker-level JSON; strict rejects rphase metadata comments. */
RPHASE_API rphase_status rphase_circuit_parse(const char* text, int strict,
                                              rphase_circuit** out);
/* format: "qasm" or "json". */
RPHASE_API rphase_status rphase_circuit_emit(const rphase_circuit* c, const char* format,
                                             char** out);
RPHASE_API rphase_status rphase_circuit_width(const rphase_circuit* c, size_t* width);
RPHASE_API rphase_status rphase_circuit_gate_count(const rphase_circuit* c, size_t* count);

/* JSON array of catalog names. */
RPHASE_API rphase_status rphase_catalog(char** json);

/* lowered and markers may be NULL when not wanted. */
RPHASE_API rphase_status rphase_synthesize(const rphase_synth_options* opt,
                                           rphase_circuit** lowered,
                                           rphase_circuit** markers);

/* Resource report JSON. */
RPHASE_API rphase_status rphase_count(const rphase_circuit* c, char** report_json);

/* Verification report JSON; *satisfied is 1 when the requested class holds. */
RPHASE_API rphase_status rphase_verify(const rphase_circuit* c,
                                       const rphase_verify_options* opt,
                                       char** report_json, int* satisfied);

/* rules: comma list of prop1, prop2, prop3, cancel. Summary is JSON. */
RPHASE_API rphase_status rphase_rewrite(const rphase_circuit* c, const char* rules,
                                        rphase_circuit** out, char** summary_json);

/* Lowers markers and multi-control gates; mode NULL, "clean" or "dirty". */
RPHASE_API rphase_status rphase_lower(const rphase_circuit* c, const char* mode,
                                      rphase_circuit** out);

/* Table rows for the given sizes; n_list NULL means 4,5,6,11. */
RPHASE_API rphase_status rphase_table(const int* n_list, size_t count, int csv,
                                      char** text);

#ifdef __cplusplus
}
#endif

#endif /* RPHASE_RPHASE_H_ */
