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

#ifndef MINCONTROL_CLI_H_
#define MINCONTROL_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "mincontrol/numerics.h"

namespace mincontrol::cli {

enum ExitStatus : int {
  kExitOk = 0,
  // Infeasible, not controllable, or a failed precondition of the method.
  kExitUnsolved = 1,
  kExitInputError = 2,
};

// Runs one command; `args` excludes the program name. Reports go to `out`,
// diagnostics to `err`.
int RunCommand(std::span<const std::string> args, std::ostream& out,
               std::ostream& err);

// Adds uniform noise in [-magnitude, magnitude] to every nonzero entry
// (real and imaginary parts separately), row-major, from a seeded engine.
ComplexMatrix PerturbNonzeros(const ComplexMatrix& a, double magnitude,
                              std::uint64_t seed);

// Defaults overridden by MINCONTROL_TOL_{RESIDUAL,GAP,RANK,ZERO,ORTHOGONALITY}.
Tolerances TolerancesFromEnvironment();

}  // namespace mincontrol::cli

#endif  // MINCONTROL_CLI_H_
