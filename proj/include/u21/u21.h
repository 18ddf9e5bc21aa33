/* Licensed under the Apache License, Version 2.0 (the "License"); you may not
 * use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
 * WARRANTIES OR CONDITIONS OF ANY KIND. See the License for the specific
 * language governing permissions and limitations under the License. */
#ifndef U21_U21_H
#define U21_U21_H

#include <stddef.h>
#include <stdint.h>

#if defined(U21_BUILDING_LIBRARY)
#define U21_API __attribute__((visibility("default")))
#else
#define U21_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. Every call returns one; on failure u21_last_error() holds a
 * one-line message for the calling thread. */
typedef enum u21_status {
  U21_OK = 0,
  U21_INVALID_ARGUMENT = 1,
  U21_NON_PRIME_CHARACTERISTIC = 2,
  U21_FIELD_TOO_LARGE = 3,
  U21_ZERO_ARGUMENT = 4,
  U21_NO_SUCH_ROOT = 5,
  U21_BAD_PARAMETERS = 6,
  U21_NOT_IN_GROUP = 7,
  U21_NOT_ISOTROPIC = 8,
  U21_ENUMERATION_TOO_LARGE = 9,
  U21_BAD_PRIME = 10,
  U21_FIELD_MISMATCH = 11,
  U21_FORMAT_ERROR = 12,
  U21_IO_ERROR = 13,
  U21_CHOP_FAILED = 14,
  U21_NOT_IRREDUCIBLE = 15,
  U21_NOT_RANK_TWO = 16,
  U21_AMBIGUOUS_PARAMETER = 17,
  U21_SUBGROUP_MISMATCH = 18,
  U21_UNSUPPORTED_CASE = 19,
  U21_MISMATCHED_PARAMETERS = 20,
  U21_INTERNAL = 21
} u21_status;

typedef struct u21_group u21_group;
typedef struct u21_module u21_module;
typedef struct u21_verify u21_verify;

U21_API const char* u21_version(void);
/* Symbolic name of a status, e.g. "UnsupportedCase". */
U21_API const char* u21_status_name(int status);
U21_API const char* u21_last_error(void);
/* Frees strings returned through char** out-parameters. */
U21_API void u21_string_free(char* s);

/* Unitary group U(2,1) (rank 3) or U(1,1) (rank 2) over GF(q^2)/GF(q). */
U21_API int u21_group_create(uint32_t q, int rank, u21_group** out);
U21_API void u21_group_free(u21_group* g);
/* Order report; enumerate != 0 adds the BFS closure. */
U21_API int u21_group_report(const u21_group* g, int enumerate, char** json);

/* Principal series module induced from the torus character (e1, e2) with
 * coefficients in characteristic ell. */
U21_API int u21_module_induce(const u21_group* g, uint32_t ell, int64_t e1, int64_t e2, u21_module** out);
U21_API int u21_module_load(const char* path, u21_module** out);
U21_API int u21_module_save(const u21_module* m, const char* path);
U21_API void u21_module_free(u21_module* m);
U21_API int u21_module_info(const u21_module* m, char** json);
U21_API int u21_module_chop(const u21_module* m, uint64_t seed, char** json);
U21_API int u21_module_socle(const u21_module* m, uint64_t seed, char** json);
/* Endomorphism algebra. With quadratic != 0 also the Hecke parameter
 * relative to q0; q0 = 0 takes it from the module label. */
U21_API int u21_module_end(const u21_module* m, int quadratic, uint32_t q0, char** json);

U21_API int u21_hecke(uint32_t q, int a, uint32_t ell, char** json);

U21_API int u21_classify_finite(uint32_t q, uint32_t ell, int64_t e1, int64_t e2, int rank, char** json);
/* level: "zero" or "positive"; chi1: a class name such as "delta_half". */
U21_API int u21_classify_padic(const char* level, const char* chi1, int chi2_absorbed, uint32_t q, uint32_t ell,
                               char** json);
U21_API int u21_dimension_table(uint32_t q, char** json);

/* Runs an acceptance suite. only: comma-separated criterion ids, or NULL
 * for all. jobs: worker threads for grid cases. */
U21_API int u21_verify_run(const char* suite, uint64_t seed, unsigned jobs, const char* only, u21_verify** out);
U21_API void u21_verify_free(u21_verify* v);
/* 1 if every criterion passed, including its time budget. */
U21_API int u21_verify_passed(const u21_verify* v);
U21_API int u21_verify_json(const u21_verify* v, char** json);
U21_API int u21_verify_text(const u21_verify* v, char** text);

#ifdef __cplusplus
}
#endif

#endif /* U21_U21_H */
