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

#ifndef MINCONTROL_MCP_H_
#define MINCONTROL_MCP_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mincontrol/numerics.h"
#include "mincontrol/setcover.h"
#include "mincontrol/structure.h"
#include "mincontrol/verify.h"

namespace mincontrol {

// Parameters of the numerical realization of a sparsity pattern.
struct RealizationConfig {
  // Step size used to re-scale the newest vector while it leaves some
  // processed vector orthogonal to the partial sum.
  double eps1 = 0.1;
  // Step size used to repair zero entries of the partial sum.
  double eps2 = 0.1;
  // Initial multiplier of each vector; empty means all ones.
  std::vector<Complex> alphas;
  // |v^H b| <= orthogonality * |v| * |b| counts as orthogonal, and
  // |b_k| <= orthogonality * |b| counts as a zero entry.
  double orthogonality = 1e-13;
  // Threshold for the structural feasibility check and for choosing repair
  // vectors (see StructuralPattern).
  double zero = 1e-13;
};

struct Realization {
  ComplexVector b;
  // Additions made while folding in vector j: its own term plus any
  // re-scaling steps. At most |J_e| + 1, i.e. j + 2 for 0-based j.
  std::vector<std::size_t> accumulation_steps;
  // For each support position that needed repair, the multiplier count used;
  // bounded by p + |vectors| + 1.
  std::vector<std::size_t> repair_steps;
};

// S_i = { j : patterns[j] is '*' at i }, over the universe {0..|patterns|-1}.
// Throws kZeroPattern for an all-zero pattern and kDimensionMismatch for
// mixed lengths.
// Structural pattern of each eigenvector under its own relative threshold
// (see ZeroThresholds).
std::vector<StructuralVector> EigenvectorPatterns(
    const LeftEigenbasis& basis, std::span<const double> thresholds);

SetCoverInstance BuildCoverInstance(std::span<const StructuralVector> patterns);

// '*' exactly at the given positions. Throws kIndexOutOfRange.
StructuralVector SupportFromCover(std::span<const std::size_t> indices,
                                  std::size_t n);

// Finds b with the exact sparsity of `pattern` and v^H b != 0 for every
// vector. Throws kInfeasible when some vector has no '*' inside the pattern
// and kRepairFailed when the bounded re-scaling loops run out.
Realization Realize(const StructuralVector& pattern,
                    std::span<const ComplexVector> vectors,
                    const RealizationConfig& config = {});

enum class CoverMode { kExact, kGreedy };

std::string_view CoverModeName(CoverMode mode);

struct McpOptions {
  CoverMode mode = CoverMode::kExact;
  Tolerances tolerances;
  RealizationConfig realization;
  ExactSolverOptions exact;
};

struct McpSolution {
  CoverMode mode = CoverMode::kExact;
  LeftEigenbasis basis;
  // Threshold used for each eigenvector pattern.
  std::vector<double> zero_thresholds;
  std::vector<StructuralVector> eigenvector_patterns;
  SetCoverInstance instance{0, {}};
  CoverSolution cover;
  StructuralVector pattern{1};
  Realization realization;
  // The Kalman verdict is the certificate of record; PBH verdicts are
  // diagnostics.
  VerificationReport certificate;

  const ComplexVector& b() const { return realization.b; }
};

// Full pipeline on a matrix: eigenbasis, patterns, cover, realization,
// verification. Throws kNotSimple, kInfeasible, kTooLarge, kRepairFailed or
// kVerificationFailed.
McpSolution SolveMcp(const ComplexMatrix& a, const McpOptions& options = {});

// Same, with a caller-supplied eigenbasis. The basis must pass the gap test
// and, since A is present, the residual test.
McpSolution SolveMcp(const ComplexMatrix& a, const LeftEigenbasis& basis,
                     const McpOptions& options = {});

// Basis-only variant; the certificate holds only the eigenvector test.
McpSolution SolveMcp(const LeftEigenbasis& basis,
                     const McpOptions& options = {});

}  // namespace mincontrol

#endif  // MINCONTROL_MCP_H_
