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

#ifndef MINCONTROL_ERRORS_H_
#define MINCONTROL_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mincontrol {

enum class ErrorCode {
  kDimensionMismatch,
  kNotSquare,
  kNotSimple,
  kEigensolveFailed,
  kInvalidBasis,
  kNonFinite,
  kEmptySupport,
  kIndexOutOfRange,
  kInvalidInstance,
  kTooLarge,
  kZeroPattern,
  kInfeasible,
  kRepairFailed,
  kVerificationFailed,
  kMissingSelfLoops,
  kParseError,
  kDimensionError,
  kInvalidArgument,
};

// Stable identifier used in CLI messages and JSON reports ("NotSimple", ...).
std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mincontrol

#endif  // MINCONTROL_ERRORS_H_
