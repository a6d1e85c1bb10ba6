// Copyright 2026 The slfol Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the slfol toolkit.
 *
 * Every entry point returns a status code. Reports are JSON documents owned
 * by an opaque handle; free them with slfol_report_destroy. On failure the
 * message is available from slfol_last_error() on the calling thread. */

#ifndef SLFOL_SLFOL_H_
#define SLFOL_SLFOL_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(SLFOL_BUILDING)
#    define SLFOL_API __declspec(dllexport)
#  else
#    define SLFOL_API __declspec(dllimport)
#  endif
#else
#  define SLFOL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slfol_status {
  SLFOL_OK = 0,
  SLFOL_ERR_INPUT = 2,        /* malformed or invalid input */
  SLFOL_ERR_CHECK_FAILED = 3, /* a mathematical check failed */
  SLFOL_ERR_INTERNAL = 4,
  SLFOL_ERR_NULL = 5          /* a required pointer was NULL */
} slfol_status;

typedef struct slfol_context slfol_context;
typedef struct slfol_report slfol_report;
typedef struct slfol_table slfol_table;

SLFOL_API const char* slfol_version(void);
SLFOL_API const char* slfol_status_name(slfol_status status);
/* Message of the last failed call on this thread, "" if none. */
SLFOL_API const char* slfol_last_error(void);
/* Error code name of the last failed call (e.g. "NotClosed"), "" if none. */
SLFOL_API const char* slfol_last_error_code(void);

/* Tolerances default to eq_tol = 1e-10, residual_tol = 1e-9. */
SLFOL_API slfol_context* slfol_context_create(void);
SLFOL_API void slfol_context_destroy(slfol_context* ctx);
SLFOL_API slfol_status slfol_context_set_tolerances(slfol_context* ctx, double eq_tol, double residual_tol);

/* Commands. On SLFOL_OK and SLFOL_ERR_CHECK_FAILED a report is returned in
 * *out when one could be produced; otherwise *out is set to NULL. */
SLFOL_API slfol_status slfol_verify_brackets(const slfol_context* ctx, int n, slfol_report** out);
SLFOL_API slfol_status slfol_decompose(const slfol_context* ctx, const char* matrix_json, slfol_report** out);
SLFOL_API slfol_status slfol_check_foliation(const slfol_context* ctx, const char* spec_json, slfol_report** out);
SLFOL_API slfol_status slfol_tischler(const slfol_context* ctx, const char* input_json, double epsilon,
                                      long long max_denominator, slfol_report** out);
SLFOL_API slfol_status slfol_pipeline(const slfol_context* ctx, const char* spec_json, double epsilon,
                                      slfol_report** out);
/* Built-in example input by name; see slfol_example_names. */
SLFOL_API slfol_status slfol_example(const char* name, slfol_report** out);
/* Newline-separated example names; static storage. */
SLFOL_API const char* slfol_example_names(void);

SLFOL_API const char* slfol_report_json(const slfol_report* report);
SLFOL_API int slfol_report_passed(const slfol_report* report);
SLFOL_API void slfol_report_destroy(slfol_report* report);

/* Exact structure constants of sl(n): [b_a, b_b] = sum_c C(a, b, c) b_c. */
SLFOL_API slfol_status slfol_table_create(int n, slfol_table** out);
SLFOL_API void slfol_table_destroy(slfol_table* table);
SLFOL_API size_t slfol_table_size(const slfol_table* table);
SLFOL_API const char* slfol_table_label(const slfol_table* table, size_t index);
SLFOL_API slfol_status slfol_table_coefficient(const slfol_table* table, size_t a, size_t b, size_t c,
                                               long long* numerator, long long* denominator);

/* Iwasawa factors of an n x n row-major SL(n) matrix: g = upper(chart) k.
 * k_out holds n*n values, chart_out n(n+1)/2 - 1. */
SLFOL_API slfol_status slfol_iwasawa(const slfol_context* ctx, int n, const double* g, double* k_out,
                                     double* chart_out);
SLFOL_API slfol_status slfol_recompose(int n, const double* k, const double* chart, double* g_out);

#ifdef __cplusplus
}
#endif

#endif /* SLFOL_SLFOL_H_ */
