/* Copyright 2026 The brauer-kit Authors
 * SPDX-License-Identifier: Apache-2.0
 *
 * C interface to brauer-kit. Handles are opaque; every call that can fail
 * returns a bk_status, and the message for the last failure on the calling
 * thread is available from bk_last_error_detail(). Strings returned through
 * char** out-parameters are owned by the caller and released with
 * bk_string_free().
 */
#ifndef BRAUER_KIT_H
#define BRAUER_KIT_H

#include <stddef.h>

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
  BK_OK = 0,
  BK_PARSE_ERROR = 1,
  BK_NOT_PRIME = 2,
  BK_NOT_IRREDUCIBLE = 3,
  BK_INFINITE_RING = 4,
  BK_NOT_A_FIELD = 5,
  BK_DIMENSION_MISMATCH = 6,
  BK_NOT_INVERTIBLE = 7,
  BK_NOT_IDEMPOTENT = 8,
  BK_NOT_FREE_OVER_LOCAL_RING = 9,
  BK_NOT_UNIT = 10,
  BK_RING_MISMATCH = 11,
  BK_INVALID_ALGEBRA = 12,
  BK_NO_UNIT_COORDINATE = 13,
  BK_TOO_LARGE = 14,
  BK_NOT_IN_DELTA_IMAGE = 15,
  BK_BAD_RELATIONS = 16,
  BK_NOT_AUTOMORPHISM = 17,
  BK_NOT_AZUMAYA = 18,
  BK_NOT_RIGHT_IDEAL = 19,
  BK_WRONG_IDEAL_RANK = 20,
  BK_NOT_FAITHFUL = 21,
  BK_NOT_ON_CONIC = 22,
  BK_DEGENERATE_OUTPUT = 23,
  BK_DICHOTOMY_FAILURE = 24,
  BK_NO_SQUARE_ROOT = 25,
  BK_SELFTEST_FAILED = 26,
  BK_INTERNAL = 27,
  BK_USAGE_ERROR = 28
} bk_status;

typedef struct bk_ring bk_ring;
typedef struct bk_algebra bk_algebra;

/* Name of a status as it appears in CLI "error" fields, e.g. "NotUnit". */
BK_API const char* bk_status_name(bk_status status);
BK_API const char* bk_last_error_detail(void);
BK_API const char* bk_version(void);
BK_API void bk_string_free(char* s);

/* Rings: "QQ", "GF(p)", "GF(p^e;c0,...,1)", "Z/p^k", "Z/N". */
BK_API bk_status bk_ring_parse(const char* spec, bk_ring** out);
BK_API bk_status bk_ring_format(const bk_ring* ring, char** out);
BK_API void bk_ring_free(bk_ring* ring);

/* Builtin names: "Mk" (matrix algebra), "Dk" (diagonal), "Q(a,b)". */
BK_API bk_status bk_algebra_builtin(const bk_ring* ring, const char* name, bk_algebra** out);
BK_API bk_status bk_algebra_from_json(const char* json, bk_algebra** out);
BK_API bk_status bk_algebra_to_json(const bk_algebra* algebra, char** out);
BK_API size_t bk_algebra_rank(const bk_algebra* algebra);
BK_API void bk_algebra_free(bk_algebra* algebra);

/* *n is set only when the algebra is Azumaya of degree n + 1. */
BK_API bk_status bk_azumaya_check(const bk_algebra* algebra, int* is_azumaya, size_t* n);

/* Runs a CLI subcommand on a JSON request whose keys mirror the flags.
 * The response envelope is always written on return (unless response_json
 * is NULL); the status mirrors its "error" field. */
BK_API bk_status bk_command(const char* subcommand, const char* request_json, char** response_json);

/* Process exit code for a status: 0, 64 for BK_USAGE_ERROR, otherwise 2. */
BK_API int bk_exit_code(bk_status status);

#ifdef __cplusplus
}
#endif

#endif /* BRAUER_KIT_H */
