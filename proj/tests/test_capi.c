/* Copyright 2026 The brauer-kit Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * Exercises the shared library through its C header only.
 */
#include <stdio.h>
#include <string.h>

#include "brauer/brauer_kit.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void rings(void) {
  bk_ring* r = NULL;
  char* text = NULL;
  EXPECT(bk_ring_parse("Z/3^2", &r) == BK_OK);
  EXPECT(bk_ring_format(r, &text) == BK_OK);
  EXPECT(text && strcmp(text, "Z/3^2") == 0);
  bk_string_free(text);
  bk_ring_free(r);

  r = NULL;
  EXPECT(bk_ring_parse("GF(6)", &r) == BK_NOT_PRIME);
  EXPECT(r == NULL);
  EXPECT(strlen(bk_last_error_detail()) > 0);
  EXPECT(strcmp(bk_status_name(BK_NOT_PRIME), "NotPrime") == 0);
  EXPECT(bk_ring_parse("GF(2^2;1,0,1)", &r) == BK_NOT_IRREDUCIBLE);
  EXPECT(bk_ring_parse("nonsense", &r) == BK_PARSE_ERROR);
  EXPECT(bk_ring_parse(NULL, &r) == BK_USAGE_ERROR);
}

static void algebras(void) {
  bk_ring* f5 = NULL;
  bk_algebra* m2 = NULL;
  bk_algebra* back = NULL;
  bk_algebra* d4 = NULL;
  char* doc = NULL;
  char* doc2 = NULL;
  int az = -1;
  size_t n = 99;

  EXPECT(bk_ring_parse("GF(5)", &f5) == BK_OK);
  EXPECT(bk_algebra_builtin(f5, "M2", &m2) == BK_OK);
  EXPECT(bk_algebra_rank(m2) == 4);
  EXPECT(bk_azumaya_check(m2, &az, &n) == BK_OK);
  EXPECT(az == 1 && n == 1);

  EXPECT(bk_algebra_to_json(m2, &doc) == BK_OK);
  EXPECT(bk_algebra_from_json(doc, &back) == BK_OK);
  EXPECT(bk_algebra_to_json(back, &doc2) == BK_OK);
  EXPECT(doc && doc2 && strcmp(doc, doc2) == 0);

  EXPECT(bk_algebra_builtin(f5, "D4", &d4) == BK_OK);
  EXPECT(bk_azumaya_check(d4, &az, &n) == BK_OK);
  EXPECT(az == 0);
  EXPECT(strlen(bk_last_error_detail()) > 0);

  EXPECT(bk_algebra_builtin(f5, "Q(0,1)", &back) == BK_NOT_UNIT);
  EXPECT(bk_algebra_from_json("{\"ring\":\"GF(5)\",\"rank\":1,\"sc\":[[[\"2\"]]],\"unit\":[\"1\"]}", &back) ==
         BK_INVALID_ALGEBRA);
  EXPECT(bk_algebra_from_json("{", &back) == BK_PARSE_ERROR);

  bk_string_free(doc);
  bk_string_free(doc2);
  bk_algebra_free(m2);
  bk_algebra_free(d4);
  bk_ring_free(f5);
}

static void commands(void) {
  char* out = NULL;
  EXPECT(bk_command("delta", "{\"ring\":\"GF(5)\",\"n\":1,\"point\":\"1,0\"}", &out) == BK_OK);
  EXPECT(out && strncmp(out, "{\"ok\":true,", 11) == 0);
  bk_string_free(out);

  EXPECT(bk_command("delta", "{\"point\":\"1,0\"}", &out) == BK_USAGE_ERROR);
  EXPECT(out && strstr(out, "\"UsageError\"") != NULL);
  EXPECT(bk_exit_code(BK_USAGE_ERROR) == 64);
  bk_string_free(out);

  EXPECT(bk_command("delta-inv", "{\"ring\":\"GF(3)\",\"ideal\":[[[1,0],[0,0]],[[0,0],[0,1]]]}", &out) ==
         BK_NOT_IN_DELTA_IMAGE);
  EXPECT(bk_exit_code(BK_NOT_IN_DELTA_IMAGE) == 2);
  bk_string_free(out);

  EXPECT(bk_command("delta", "not json", &out) == BK_PARSE_ERROR);
  bk_string_free(out);
  EXPECT(bk_command("delta", "{}", NULL) == BK_USAGE_ERROR);
}

int main(void) {
  rings();
  algebras();
  commands();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
