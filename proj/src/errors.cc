// Copyright 2026 The mincontrol Authors.
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

#include "mincontrol/errors.h"

namespace mincontrol {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotSquare: return "NotSquare";
    case ErrorCode::kNotSimple: return "NotSimple";
    case ErrorCode::kEigensolveFailed: return "EigensolveFailed";
    case ErrorCode::kInvalidBasis: return "InvalidBasis";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kEmptySupport: return "EmptySupport";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kInvalidInstance: return "InvalidInstance";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kZeroPattern: return "ZeroPattern";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kRepairFailed: return "RepairFailed";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kMissingSelfLoops: return "MissingSelfLoops";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDimensionError: return "DimensionError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace mincontrol
