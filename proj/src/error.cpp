// Copyright 2026 The brauer-kit Authors
// SPDX-License-Identifier: Apache-2.0

#include "brauer/error.hpp"

namespace brauer {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::NotIrreducible: return "NotIrreducible";
    case ErrorCode::InfiniteRing: return "InfiniteRing";
    case ErrorCode::NotAField: return "NotAField";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::NotFreeOverLocalRing: return "NotFreeOverLocalRing";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::NoUnitCoordinate: return "NoUnitCoordinate";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotInDeltaImage: return "NotInDeltaImage";
    case ErrorCode::BadRelations: return "BadRelations";
    case ErrorCode::NotAutomorphism: return "NotAutomorphism";
    case ErrorCode::NotAzumaya: return "NotAzumaya";
    case ErrorCode::NotRightIdeal: return "NotRightIdeal";
    case ErrorCode::WrongIdealRank: return "WrongIdealRank";
    case ErrorCode::NotFaithful: return "NotFaithful";
    case ErrorCode::NotOnConic: return "NotOnConic";
    case ErrorCode::DegenerateOutput: return "DegenerateOutput";
    case ErrorCode::DichotomyFailure: return "DichotomyFailure";
    case ErrorCode::NoSquareRoot: return "NoSquareRoot";
    case ErrorCode::SelftestFailed: return "SelftestFailed";
    case ErrorCode::Internal: return "Internal";
    case ErrorCode::Usage: return "UsageError";
  }
  return "Unknown";
}

}  // namespace brauer
