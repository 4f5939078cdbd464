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

#ifndef MINCONTROL_ORACLE_H_
#define MINCONTROL_ORACLE_H_

#include <cstddef>
#include <vector>

#include "mincontrol/mcp.h"
#include "mincontrol/numerics.h"

namespace mincontrol {

struct OracleOptions {
  std::size_t n_limit = 12;
  Tolerances tolerances;
  RealizationConfig realization;
};

struct OracleResult {
  std::size_t min_support_size = 0;
  // Every support of minimum size, lexicographically ordered.
  std::vector<std::vector<std::size_t>> optimal_supports;
  // Kalman verdict of the realized input for each optimal support.
  std::vector<bool> kalman_verified;
};

// Exhaustive search for the sparsest input, independent of the set-cover
// route: a support is feasible iff every left eigenvector is nonzero
// somewhere inside it. Supports are enumerated by increasing size. Throws
// kTooLarge above options.n_limit and kNotSimple.
OracleResult BruteForceMcp(const ComplexMatrix& a,
                           const OracleOptions& options = {});

// Feasibility predicate used by the oracle, exposed for tests.
bool SupportReachesAll(std::span<const StructuralVector> patterns,
                       std::span<const std::size_t> support);

}  // namespace mincontrol

#endif  // MINCONTROL_ORACLE_H_
