/* Copyright 2026 The linspp Authors.
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

/* C interface of the linspp library.
 *
 * Every fallible call returns a linspp_status. On failure the message of the
 * most recent error on the calling thread is available from
 * linspp_last_error_message(). Strings returned through char** parameters
 * are owned by the caller and released with linspp_string_free(). Handles
 * are released with their matching *_free function; passing NULL is a no-op.
 */

#ifndef LINSPP_LINSPP_H_
#define LINSPP_LINSPP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LINSPP_API __declspec(dllexport)
#else
#define LINSPP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum linspp_status {
  LINSPP_OK = 0,
  LINSPP_ERR_CYCLE_DETECTED = 1,
  LINSPP_ERR_SOURCE_EQUALS_SINK = 2,
  LINSPP_ERR_DANGLING_VERTEX_REFERENCE = 3,
  LINSPP_ERR_NO_ST_PATH = 4,
  LINSPP_ERR_VERTEX_UNREACHABLE = 5,
  LINSPP_ERR_SOURCE_HAS_NO_NONBASIC_PATH = 6,
  LINSPP_ERR_TOO_MANY_PATHS = 7,
  LINSPP_ERR_TOO_MANY_SYSTEMS = 8,
  LINSPP_ERR_UNKNOWN_ARC = 9,
  LINSPP_ERR_ORDER_MISMATCH = 10,
  LINSPP_ERR_NOT_STRONGLY_BASIC = 11,
  LINSPP_ERR_PROPERTY_PI_VIOLATED = 12,
  LINSPP_ERR_NOT_LINEARIZABLE = 13,
  LINSPP_ERR_DIMENSION_MISMATCH = 14,
  LINSPP_ERR_PARSE = 15,
  LINSPP_ERR_DUPLICATE_COST_KEY = 16,
  LINSPP_ERR_ARC_ID_OUT_OF_RANGE = 17,
  LINSPP_ERR_UNSUPPORTED_PARAMS = 18,
  LINSPP_ERR_IO = 19,
  LINSPP_ERR_INVALID_ARGUMENT = 20,
  LINSPP_ERR_OUT_OF_MEMORY = 21,
  LINSPP_ERR_INTERNAL = 22
} linspp_status;

LINSPP_API const char* linspp_status_name(linspp_status status);
LINSPP_API const char* linspp_last_error_message(void);
LINSPP_API void linspp_string_free(char* s);

/* ---- Instances ---------------------------------------------------------- */

typedef struct linspp_instance linspp_instance;

LINSPP_API linspp_status linspp_instance_read(const char* path,
                                              linspp_instance** out);
LINSPP_API linspp_status linspp_instance_parse(const char* text,
                                               linspp_instance** out);
/* Canonical text form. */
LINSPP_API linspp_status linspp_instance_to_string(const linspp_instance* inst,
                                                   char** out);
LINSPP_API linspp_status linspp_instance_write(const linspp_instance* inst,
                                               const char* path);
LINSPP_API void linspp_instance_free(linspp_instance* inst);

LINSPP_API int linspp_instance_vertex_count(const linspp_instance* inst);
/* Arcs on at least one source-sink path. */
LINSPP_API int linspp_instance_arc_count(const linspp_instance* inst);
/* Arcs declared in the file, including pruned ones. */
LINSPP_API int linspp_instance_arc_universe(const linspp_instance* inst);
LINSPP_API int linspp_instance_order(const linspp_instance* inst);
LINSPP_API size_t linspp_instance_cost_key_count(const linspp_instance* inst);
/* Source-sink paths, saturating at cap. */
LINSPP_API uint64_t linspp_instance_path_count(const linspp_instance* inst,
                                               uint64_t cap);
/* Notes produced while loading, such as dropped cost keys. */
LINSPP_API size_t linspp_instance_warning_count(const linspp_instance* inst);
LINSPP_API const char* linspp_instance_warning(const linspp_instance* inst,
                                               size_t i);

/* ---- Generators --------------------------------------------------------- */

typedef struct linspp_gen_params {
  const char* family; /* random-dag | layered | grid | two-path | double-diamond */
  const char* mode;   /* arbitrary | linearizable | non-linearizable */
  int order;
  int arcs;
  int vertices;
  int width;
  int rows;
  int cols;
  int segment;
  int max_numerator;
  double density;
  uint64_t seed;
} linspp_gen_params;

/* Fills in the defaults: random-dag, arbitrary, order 2, 10 arcs, seed 1. */
LINSPP_API void linspp_gen_params_init(linspp_gen_params* params);
LINSPP_API linspp_status linspp_generate(const linspp_gen_params* params,
                                         linspp_instance** out);
/* For generated non-linearizable instances: the planted arc and partner.
 * Returns 0 and leaves the outputs alone if nothing was planted. */
LINSPP_API int linspp_instance_planted(const linspp_instance* inst,
                                       uint32_t* arc, uint32_t* partner);

/* ---- Linear costs ------------------------------------------------------- */

typedef struct linspp_cost linspp_cost;

LINSPP_API linspp_status linspp_cost_parse(const linspp_instance* inst,
                                           const char* text, linspp_cost** out);
LINSPP_API linspp_status linspp_cost_read(const linspp_instance* inst,
                                          const char* path, linspp_cost** out);
/* `c <arc_id> <value>` lines for every active arc. */
LINSPP_API linspp_status linspp_cost_to_string(const linspp_instance* inst,
                                               const linspp_cost* cost,
                                               char** out);
/* Value of one arc as a decimal rational string. */
LINSPP_API linspp_status linspp_cost_value(const linspp_cost* cost,
                                           uint32_t arc, char** out);
LINSPP_API void linspp_cost_free(linspp_cost* cost);

/* Compares the cost with the instance on every source-sink path. *ok is 1
 * when they agree everywhere. LINSPP_ERR_TOO_MANY_PATHS above max_paths. */
LINSPP_API linspp_status linspp_verify(const linspp_instance* inst,
                                       const linspp_cost* cost,
                                       uint64_t max_paths, int* ok);

/* ---- Linearization ------------------------------------------------------ */

typedef struct linspp_result linspp_result;

LINSPP_API linspp_status linspp_linearize(const linspp_instance* inst, int jobs,
                                          linspp_result** out);
LINSPP_API int linspp_result_linearizable(const linspp_result* result);
/* Reduced-form cost; LINSPP_ERR_NOT_LINEARIZABLE otherwise. The returned
 * handle is independent of the result. */
LINSPP_API linspp_status linspp_result_cost(const linspp_result* result,
                                            linspp_cost** out);
/* The violating arc, or 0 if linearizable. */
LINSPP_API uint32_t linspp_result_failure_arc(const linspp_result* result);
/* Human-readable failure witness: the arc and its tail, the four paths of
 * the two-path system, and the unbalanced equation. Empty if linearizable. */
LINSPP_API linspp_status linspp_result_witness_text(
    const linspp_result* result, char** out);
LINSPP_API void linspp_result_free(linspp_result* result);

/* All-paths-equal test. *all_equal is set; *beta receives the common cost
 * (or NULL) and *witness two `path:` lines (or NULL). Either output pointer
 * may be NULL. */
LINSPP_API linspp_status linspp_apec(const linspp_instance* inst,
                                     int* all_equal, char** beta,
                                     char** witness);

/* ---- Subspace of linearizable instances --------------------------------- */

typedef struct linspp_basis linspp_basis;

LINSPP_API linspp_status linspp_basis_compute(const linspp_instance* inst,
                                              int jobs, linspp_basis** out);
LINSPP_API size_t linspp_basis_dimension(const linspp_basis* basis);
LINSPP_API size_t linspp_basis_coordinate_count(const linspp_basis* basis);
/* One vector per line as `subset=value` pairs. */
LINSPP_API linspp_status linspp_basis_to_string(const linspp_basis* basis,
                                                char** out);
LINSPP_API void linspp_basis_free(linspp_basis* basis);

/* ---- Brute-force deciders ----------------------------------------------- */

typedef struct linspp_oracle_report {
  int lp_linearizable;
  int tps_linearizable;
  int linearizer_linearizable;
} linspp_oracle_report;

/* Runs the path-system solver, the two-path-system test and the linearizer.
 * Fails with LINSPP_ERR_TOO_MANY_PATHS or LINSPP_ERR_TOO_MANY_SYSTEMS when
 * the instance exceeds the limits. */
LINSPP_API linspp_status linspp_oracle(const linspp_instance* inst,
                                       uint64_t max_paths, uint64_t max_systems,
                                       linspp_oracle_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LINSPP_LINSPP_H_ */
