// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/brauer_kit.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "brauer/algebras.hpp"
#include "brauer/error.hpp"
#include "commands.hpp"
#include "json_io.hpp"

struct bk_ring {
  brauer::Ring ring;
};

struct bk_algebra {
  brauer::StructureAlgebra algebra;
};

namespace {

using brauer::ErrorCode;
using brauer::json_io::json;

static_assert(static_cast<int>(ErrorCode::ParseError) == BK_PARSE_ERROR);
static_assert(static_cast<int>(ErrorCode::NotFreeOverLocalRing) == BK_NOT_FREE_OVER_LOCAL_RING);
static_assert(static_cast<int>(ErrorCode::NotInDeltaImage) == BK_NOT_IN_DELTA_IMAGE);
static_assert(static_cast<int>(ErrorCode::NoSquareRoot) == BK_NO_SQUARE_ROOT);
static_assert(static_cast<int>(ErrorCode::Internal) == BK_INTERNAL);
static_assert(static_cast<int>(ErrorCode::Usage) == BK_USAGE_ERROR);

thread_local std::string last_detail;

bk_status remember(ErrorCode code, const std::string& detail) {
  last_detail = detail;
  return static_cast<bk_status>(code);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename F>
bk_status guarded(F&& body) {
  try {
    last_detail.clear();
    body();
    return BK_OK;
  } catch (const brauer::Error& e) {
    return remember(e.code(), e.what());
  } catch (const json::exception& e) {
    return remember(ErrorCode::ParseError, e.what());
  } catch (const std::bad_alloc&) {
    return remember(ErrorCode::Internal, "out of memory");
  } catch (const std::exception& e) {
    return remember(ErrorCode::Internal, e.what());
  }
}

bk_status null_argument(const char* what) { return remember(ErrorCode::Usage, std::string(what) + " must not be NULL"); }

}  // namespace

extern "C" {

const char* bk_status_name(bk_status status) {
  if (status == BK_OK) return "Ok";
  if (status < BK_PARSE_ERROR || status > BK_USAGE_ERROR) return "Unknown";
  return brauer::error_code_name(static_cast<ErrorCode>(status)).data();
}

const char* bk_last_error_detail(void) { return last_detail.c_str(); }

const char* bk_version(void) { return "1.0.0"; }

void bk_string_free(char* s) { std::free(s); }

bk_status bk_ring_parse(const char* spec, bk_ring** out) {
  if (!spec || !out) return null_argument("spec and out");
  return guarded([&] { *out = new bk_ring{brauer::Ring(brauer::parse_ring_spec(spec))}; });
}

bk_status bk_ring_format(const bk_ring* ring, char** out) {
  if (!ring || !out) return null_argument("ring and out");
  return guarded([&] { *out = copy_string(brauer::format_ring_spec(ring->ring.spec())); });
}

void bk_ring_free(bk_ring* ring) { delete ring; }

bk_status bk_algebra_builtin(const bk_ring* ring, const char* name, bk_algebra** out) {
  if (!ring || !name || !out) return null_argument("ring, name and out");
  return guarded([&] { *out = new bk_algebra{brauer::commands::make_builtin_algebra(ring->ring, name)}; });
}

bk_status bk_algebra_from_json(const char* text, bk_algebra** out) {
  if (!text || !out) return null_argument("json and out");
  return guarded([&] {
    *out = new bk_algebra{brauer::json_io::algebra_from_json(brauer::json_io::parse_json(text, "algebra"))};
  });
}

bk_status bk_algebra_to_json(const bk_algebra* algebra, char** out) {
  if (!algebra || !out) return null_argument("algebra and out");
  return guarded([&] { *out = copy_string(brauer::json_io::algebra_to_json(algebra->algebra).dump()); });
}

size_t bk_algebra_rank(const bk_algebra* algebra) { return algebra ? algebra->algebra.rank() : 0; }

void bk_algebra_free(bk_algebra* algebra) { delete algebra; }

bk_status bk_azumaya_check(const bk_algebra* algebra, int* is_azumaya, size_t* n) {
  if (!algebra || !is_azumaya) return null_argument("algebra and is_azumaya");
  return guarded([&] {
    brauer::AzumayaReport r = brauer::azumaya_check(algebra->algebra);
    *is_azumaya = r.is_azumaya ? 1 : 0;
    if (n && r.n) *n = *r.n;
    if (!r.is_azumaya) last_detail = r.reason;
  });
}

bk_status bk_command(const char* subcommand, const char* request_json, char** response_json) {
  if (!subcommand || !response_json) return null_argument("subcommand and response_json");
  json env;
  try {
    json request = request_json ? json::parse(request_json) : json::object();
    env = brauer::commands::run(subcommand, request);
  } catch (const json::parse_error& e) {
    env = json{{"ok", false}, {"error", "ParseError"}, {"detail", std::string("bad request JSON: ") + e.what()}};
  }
  *response_json = copy_string(env.dump(-1, ' ', false, json::error_handler_t::replace));
  if (env.value("ok", false)) {
    last_detail.clear();
    return BK_OK;
  }
  const std::string name = env.value("error", std::string());
  const std::string detail = env.value("detail", std::string());
  for (int c = BK_PARSE_ERROR; c <= BK_USAGE_ERROR; ++c) {
    if (brauer::error_code_name(static_cast<ErrorCode>(c)) == name) return remember(static_cast<ErrorCode>(c), detail);
  }
  return remember(ErrorCode::Internal, detail);
}

int bk_exit_code(bk_status status) {
  if (status == BK_OK) return 0;
  return status == BK_USAGE_ERROR ? 64 : 2;
}

}  // extern "C"
