// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace brauer {

// Error codes surface verbatim in CLI output and map 1:1 onto bk_status.
enum class ErrorCode {
  ParseError = 1,
  NotPrime,
  NotIrreducible,
  InfiniteRing,
  NotAField,
  DimensionMismatch,
  NotInvertible,
  NotIdempotent,
  NotFreeOverLocalRing,
  NotUnit,
  RingMismatch,
  InvalidAlgebra,
  NoUnitCoordinate,
  TooLarge,
  NotInDeltaImage,
  BadRelations,
  NotAutomorphism,
  NotAzumaya,
  NotRightIdeal,
  WrongIdealRank,
  NotFaithful,
  NotOnConic,
  DegenerateOutput,
  DichotomyFailure,
  NoSquareRoot,
  SelftestFailed,
  Internal,
  Usage,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail) {
  throw Error(code, detail);
}

}  // namespace brauer
