/* Copyright 2026 The slfol Authors
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

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "slfol/slfol.h"

static int failures = 0;

#define EXPECT(cond)                                            \
  do {                                                          \
    if (!(cond)) {                                              \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                               \
    }                                                           \
  } while (0)

static void test_table(void) {
  slfol_table* t = NULL;
  EXPECT(slfol_table_create(2, &t) == SLFOL_OK);
  EXPECT(slfol_table_size(t) == 3);
  EXPECT(strcmp(slfol_table_label(t, 0), "[1,2]") == 0);
  EXPECT(slfol_table_label(t, 3) == NULL);
  long long p = 0, q = 0;
  /* [E12, E21] = E11 - E22 = -Y2 */
  EXPECT(slfol_table_coefficient(t, 0, 1, 2, &p, &q) == SLFOL_OK);
  EXPECT(p == -1 && q == 1);
  EXPECT(slfol_table_coefficient(t, 2, 0, 0, &p, &q) == SLFOL_OK);
  EXPECT(p == -2 && q == 1);
  EXPECT(slfol_table_coefficient(t, 0, 0, 0, &p, &q) == SLFOL_OK);
  EXPECT(p == 0);
  EXPECT(slfol_table_coefficient(t, 0, 0, 9, &p, &q) == SLFOL_ERR_INPUT);
  EXPECT(slfol_table_coefficient(t, 0, 0, 0, NULL, &q) == SLFOL_ERR_NULL);
  slfol_table_destroy(t);

  EXPECT(slfol_table_create(3, &t) == SLFOL_OK);
  size_t d = slfol_table_size(t);
  EXPECT(d == 8);
  for (size_t a = 0; a < d; ++a)
    for (size_t b = 0; b < d; ++b)
      for (size_t c = 0; c < d; ++c) {
        long long p1, q1, p2, q2;
        slfol_table_coefficient(t, a, b, c, &p1, &q1);
        slfol_table_coefficient(t, b, a, c, &p2, &q2);
        EXPECT(p1 == -p2 && q1 == q2);
      }
  slfol_table_destroy(t);
  EXPECT(slfol_table_create(1, &t) == SLFOL_ERR_INPUT);
  EXPECT(t == NULL);
  EXPECT(strcmp(slfol_last_error_code(), "IndexOutOfRange") == 0);
}

static void test_iwasawa(void) {
  slfol_context* ctx = slfol_context_create();
  const double g[4] = {2, 1, 1, 1};
  double k[4], chart[2], back[4];
  EXPECT(slfol_iwasawa(ctx, 2, g, k, chart) == SLFOL_OK);
  EXPECT(fabs(chart[0] + 0.5 * log(2.0)) < 1e-12);
  EXPECT(fabs(chart[1] - 3.0) < 1e-12);
  EXPECT(slfol_recompose(2, k, chart, back) == SLFOL_OK);
  for (int i = 0; i < 4; ++i) EXPECT(fabs(back[i] - g[i]) < 1e-12);

  const double bad[4] = {2, 0, 0, 1};
  EXPECT(slfol_iwasawa(ctx, 2, bad, k, chart) == SLFOL_ERR_INPUT);
  EXPECT(strcmp(slfol_last_error_code(), "NonUnimodular") == 0);
  EXPECT(slfol_iwasawa(ctx, 2, NULL, k, chart) == SLFOL_ERR_NULL);
  slfol_context_destroy(ctx);
}

static void test_reports(void) {
  slfol_context* ctx = slfol_context_create();
  EXPECT(slfol_context_set_tolerances(ctx, 1e-10, 1e-8) == SLFOL_OK);
  EXPECT(slfol_context_set_tolerances(ctx, -1.0, 1e-8) == SLFOL_ERR_INPUT);

  slfol_report* r = NULL;
  EXPECT(slfol_verify_brackets(ctx, 3, &r) == SLFOL_OK);
  EXPECT(slfol_report_passed(r) == 1);
  EXPECT(strstr(slfol_report_json(r), "\"table\"") != NULL);
  slfol_report_destroy(r);

  EXPECT(slfol_decompose(ctx, "[[2, 1], [1, 1]]", &r) == SLFOL_OK);
  EXPECT(strstr(slfol_report_json(r), "\"angle\"") != NULL);
  slfol_report_destroy(r);

  EXPECT(slfol_decompose(ctx, "[[2, 1], [1", &r) == SLFOL_ERR_INPUT);
  EXPECT(r == NULL);
  EXPECT(strcmp(slfol_last_error_code(), "InvalidInput") == 0);
  EXPECT(strlen(slfol_last_error()) > 0);

  slfol_report* input = NULL;
  EXPECT(slfol_example("product-sl2", &input) == SLFOL_OK);
  EXPECT(slfol_pipeline(ctx, slfol_report_json(input), 0.01, &r) == SLFOL_OK);
  EXPECT(strstr(slfol_report_json(r), "\"q\": 23") != NULL);
  slfol_report_destroy(r);
  EXPECT(slfol_check_foliation(ctx, slfol_report_json(input), &r) == SLFOL_OK);
  EXPECT(slfol_report_passed(r) == 1);
  slfol_report_destroy(r);
  slfol_report_destroy(input);

  EXPECT(slfol_example("zero-r2", &input) == SLFOL_OK);
  EXPECT(slfol_pipeline(ctx, slfol_report_json(input), 0.01, &r) == SLFOL_ERR_CHECK_FAILED);
  EXPECT(r != NULL && slfol_report_passed(r) == 0);
  slfol_report_destroy(r);
  slfol_report_destroy(input);

  EXPECT(slfol_example("tischler-t2", &input) == SLFOL_OK);
  EXPECT(slfol_tischler(ctx, slfol_report_json(input), 0.01, 1000000, &r) == SLFOL_OK);
  EXPECT(strstr(slfol_report_json(r), "\"17/12\"") != NULL);
  slfol_report_destroy(r);
  EXPECT(slfol_tischler(ctx, slfol_report_json(input), 1e-9, 100, &r) == SLFOL_ERR_CHECK_FAILED);
  EXPECT(strcmp(slfol_last_error_code(), "BudgetInfeasible") == 0);
  slfol_report_destroy(r);
  slfol_report_destroy(input);

  EXPECT(slfol_example("missing", &r) == SLFOL_ERR_INPUT);
  EXPECT(strstr(slfol_example_names(), "product-sl2") != NULL);
  EXPECT(slfol_verify_brackets(ctx, 3, NULL) == SLFOL_ERR_NULL);
  slfol_context_destroy(ctx);
}

int main(void) {
  EXPECT(strlen(slfol_version()) > 0);
  EXPECT(strcmp(slfol_status_name(SLFOL_ERR_CHECK_FAILED), "check failed") == 0);
  test_table();
  test_iwasawa();
  test_reports();
  slfol_report_destroy(NULL);
  slfol_table_destroy(NULL);
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi: all checks passed\n");
  return 0;
}
