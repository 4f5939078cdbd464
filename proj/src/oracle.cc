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

#include "mincontrol/oracle.h"

#include <string>

#include "mincontrol/errors.h"
#include "mincontrol/verify.h"

namespace mincontrol {

bool SupportReachesAll(std::span<const StructuralVector> patterns,
                       std::span<const std::size_t> support) {
  for (const auto& pattern : patterns) {
    bool hit = false;
    for (std::size_t i : support) {
      if (pattern.is_star(i)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

namespace {

// Calls visit(combination) for every k-subset of {0..n-1} in lexicographic
// order.
template <typename Visit>
void ForEachCombination(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> c(k);
  for (std::size_t i = 0; i < k; ++i) c[i] = i;
  while (true) {
    visit(c);
    std::size_t i = k;
    while (i > 0 && c[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++c[i - 1];
    for (std::size_t j = i; j < k; ++j) c[j] = c[j - 1] + 1;
  }
}

}  // namespace

OracleResult BruteForceMcp(const ComplexMatrix& a,
                           const OracleOptions& options) {
  const std::size_t n = static_cast<std::size_t>(a.rows());
  if (n > options.n_limit) {
    throw Error(ErrorCode::kTooLarge,
                "oracle limited to n <= " + std::to_string(options.n_limit));
  }
  const Tolerances& tol = options.tolerances;
  const LeftEigenbasis basis = ComputeLeftEigenbasis(a, tol);
  const std::vector<StructuralVector> patterns =
      EigenvectorPatterns(basis, ZeroThresholds(basis, &a, tol.zero));

  OracleResult out;
  for (std::size_t k = 1; k <= n && out.optimal_supports.empty(); ++k) {
    ForEachCombination(n, k, [&](const std::vector<std::size_t>& support) {
      if (SupportReachesAll(patterns, support)) {
        out.optimal_supports.push_back(support);
      }
    });
    if (!out.optimal_supports.empty()) out.min_support_size = k;
  }
  if (out.optimal_supports.empty()) {
    throw Error(ErrorCode::kInfeasible, "no feasible support found");
  }

  RealizationConfig config = options.realization;
  config.orthogonality = tol.orthogonality;
  config.zero = tol.zero;
  const auto vectors = basis.vectors();
  const double rank_tol = EffectiveRankTolerance(tol, a.rows(), a.cols());
  for (const auto& support : out.optimal_supports) {
    const auto realized =
        Realize(StructuralVector::FromPositions(support, n), vectors, config);
    out.kalman_verified.push_back(
        KalmanTest(a, realized.b, rank_tol).controllable);
  }
  return out;
}

}  // namespace mincontrol
