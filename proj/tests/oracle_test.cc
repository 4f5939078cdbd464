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

#include <random>

#include <gtest/gtest.h>

#include "mincontrol/errors.h"
#include "test_support.h"

namespace mincontrol {
namespace {

using testing::ThrownCode;
using Supports = std::vector<std::vector<std::size_t>>;

TEST(BruteForceMcpTest, Eq7) {
  const OracleResult r = BruteForceMcp(testing::Eq7Matrix());
  EXPECT_EQ(r.min_support_size, 3u);
  // x2 and x4 are forced by the eigenvectors e4 and e2; x3 or x5 is needed
  // for [0,0,1,0,1].
  EXPECT_EQ(r.optimal_supports, (Supports{{1, 2, 3}, {1, 3, 4}}));
  EXPECT_EQ(r.kalman_verified, (std::vector<bool>{true, true}));
}

TEST(BruteForceMcpTest, Diagonal) {
  ComplexMatrix a = ComplexMatrix::Zero(3, 3);
  a.diagonal() << 1.0, 2.0, 3.0;
  const OracleResult r = BruteForceMcp(a);
  EXPECT_EQ(r.min_support_size, 3u);
  EXPECT_EQ(r.optimal_supports, (Supports{{0, 1, 2}}));
}

TEST(BruteForceMcpTest, Errors) {
  OracleOptions small;
  small.n_limit = 4;
  EXPECT_EQ(ThrownCode([&] { BruteForceMcp(testing::Eq7Matrix(), small); }),
            ErrorCode::kTooLarge);
  EXPECT_EQ(ThrownCode([] { BruteForceMcp(ComplexMatrix::Identity(2, 2)); }),
            ErrorCode::kNotSimple);
}

TEST(BruteForceMcpTest, AgreesWithSetCoverPipeline) {
  std::mt19937_64 rng(149);
  for (int trial = 0; trial < 200; ++trial) {
    const bool sparse = trial % 2 == 1;
    const ComplexMatrix a =
        sparse ? testing::RandomSimpleMatrix(rng, 5, 0.6, testing::kSeparatedGap)
               : testing::RandomSimpleMatrix(rng, 5);
    const OracleResult r = BruteForceMcp(a);
    const McpSolution sol = SolveMcp(a);
    EXPECT_EQ(r.min_support_size, sol.pattern.count()) << "trial " << trial;
    // The lexicographically smallest optimal support is the exact cover.
    EXPECT_EQ(r.optimal_supports.front(), sol.pattern.positions());
    for (bool ok : r.kalman_verified) EXPECT_TRUE(ok);
  }
}

TEST(SupportReachesAllTest, SupersetsOfFeasibleSupportsAreFeasible) {
  std::mt19937_64 rng(151);
  std::bernoulli_distribution star(0.3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 6;
    std::vector<StructuralVector> patterns;
    for (std::size_t j = 0; j < n; ++j) {
      StructuralVector p(n);
      for (std::size_t i = 0; i < n; ++i) p.set_star(i, star(rng));
      if (p.count() == 0) p.set_star(j);
      patterns.push_back(p);
    }
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> support;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask >> i & 1u) support.push_back(i);
      }
      if (!SupportReachesAll(patterns, support)) continue;
      for (std::size_t extra = 0; extra < n; ++extra) {
        if (mask >> extra & 1u) continue;
        std::vector<std::size_t> bigger = support;
        bigger.push_back(extra);
        std::sort(bigger.begin(), bigger.end());
        EXPECT_TRUE(SupportReachesAll(patterns, bigger));
      }
    }
  }
}

}  // namespace
}  // namespace mincontrol
