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

#include "mincontrol/structure.h"

#include <complex>
#include <random>

#include <gtest/gtest.h>

#include "mincontrol/errors.h"
#include "test_support.h"

namespace mincontrol {
namespace {

using testing::RealVector;
using testing::ThrownCode;
using SV = StructuralVector;

SV RandomPattern(std::mt19937_64& rng, std::size_t n, double p = 0.5) {
  std::bernoulli_distribution star(p);
  SV v(n);
  for (std::size_t i = 0; i < n; ++i) v.set_star(i, star(rng));
  return v;
}

TEST(StructuralVectorTest, TextRoundTrip) {
  const SV v = SV::FromString("0***0");
  EXPECT_EQ(v.size(), 5u);
  EXPECT_EQ(v.count(), 3u);
  EXPECT_EQ(v.positions(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(v.ToString(), "0***0");
  const std::vector<std::size_t> pos{1, 3};
  EXPECT_EQ(SV::FromPositions(pos, 5).ToString(), "0*0*0");
}

TEST(StructuralVectorTest, RejectsMalformedInput) {
  EXPECT_EQ(ThrownCode([] { SV(0); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(ThrownCode([] { SV::FromString("0x*"); }), ErrorCode::kParseError);
  const std::vector<std::size_t> pos{5};
  EXPECT_EQ(ThrownCode([&] { SV::FromPositions(pos, 5); }),
            ErrorCode::kIndexOutOfRange);
}

TEST(StructuralMatrixTest, RowsRoundTrip) {
  const std::vector<std::string> rows{"*0*", "0*0"};
  const StructuralMatrix m = StructuralMatrix::FromRows(rows);
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_TRUE(m.is_star(0, 2));
  EXPECT_FALSE(m.is_star(1, 2));
  EXPECT_EQ(m.ToRows(), rows);
}

TEST(StructuralPatternTest, Examples) {
  EXPECT_EQ(StructuralPattern(RealVector({1, 1, 0, 0, 1}), 1e-9).ToString(),
            "**00*");
  EXPECT_EQ(StructuralPattern(RealVector({0, 0, 0}), 1e-9).ToString(), "000");
  EXPECT_EQ(StructuralPattern(RealVector({1, 1e-12, 2}), 1e-9).ToString(),
            "*0*");
}

TEST(StructuralPatternTest, MatrixPattern) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 1) = Complex(0.0, 3.0);
  m(1, 0) = 1e-20;
  const StructuralMatrix p = StructuralPattern(m, 1e-13);
  EXPECT_EQ(p.ToRows(), (std::vector<std::string>{"0*", "00"}));
}

TEST(StructuralPatternTest, ScaleInvariant) {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> log_mag(-8.0, 8.0);
  std::bernoulli_distribution small(0.3);
  for (int trial = 0; trial < 500; ++trial) {
    ComplexVector v(6);
    for (int i = 0; i < 6; ++i) {
      // Mix entries far above and far below the threshold.
      v(i) = Complex(u(rng), u(rng)) * (small(rng) ? 1e-15 : 1.0);
    }
    const Complex alpha =
        std::polar(std::pow(10.0, log_mag(rng)), 3.0 * u(rng));
    const ComplexVector scaled = alpha * v;
    EXPECT_EQ(StructuralPattern(scaled, 1e-9), StructuralPattern(v, 1e-9));
  }
}

TEST(StructuralInnerTest, Examples) {
  const SV b = SV::FromString("0***0");
  EXPECT_TRUE(StructuralInner(SV::FromString("00*0*"), b));
  EXPECT_FALSE(StructuralInner(SV::FromString("*0"), SV::FromString("0*")));
  EXPECT_TRUE(StructuralInner(SV::FromString("000*0"), b));
  EXPECT_EQ(ThrownCode([] {
              StructuralInner(SV::FromString("*"), SV::FromString("**"));
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(StructuralInnerTest, SymmetricAndMatchesDefinition) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 500; ++trial) {
    const SV v = RandomPattern(rng, 7, 0.3);
    const SV w = RandomPattern(rng, 7, 0.3);
    bool shared = false;
    for (std::size_t i = 0; i < 7; ++i) shared |= v.is_star(i) && w.is_star(i);
    EXPECT_EQ(StructuralInner(v, w), shared);
    EXPECT_EQ(StructuralInner(v, w), StructuralInner(w, v));
  }
}

TEST(StructuralGeqTest, Examples) {
  EXPECT_TRUE(StructuralGeq(SV::FromString("0***0"), SV::FromString("0*0*0")));
  EXPECT_FALSE(StructuralGeq(SV::FromString("*0"), SV::FromString("0*")));
  const SV v = SV::FromString("*0**0");
  EXPECT_TRUE(StructuralGeq(v, v));
  EXPECT_EQ(ThrownCode([] {
              StructuralGeq(SV::FromString("*"), SV::FromString("**"));
            }),
            ErrorCode::kDimensionMismatch);
}

TEST(StructuralGeqTest, IsPartialOrder) {
  std::mt19937_64 rng(47);
  // Short patterns so that comparable pairs occur often.
  for (int trial = 0; trial < 2000; ++trial) {
    const SV u = RandomPattern(rng, 4);
    const SV v = RandomPattern(rng, 4);
    const SV w = RandomPattern(rng, 4);
    EXPECT_TRUE(StructuralGeq(u, u));
    if (StructuralGeq(u, v) && StructuralGeq(v, u)) EXPECT_EQ(u, v);
    if (StructuralGeq(u, v) && StructuralGeq(v, w)) {
      EXPECT_TRUE(StructuralGeq(u, w));
    }
  }
}

TEST(RestrictTest, Examples) {
  EXPECT_EQ(Restrict(RealVector({1, 1, 0, 0, 1}), SV::FromString("0***0")),
            RealVector({1, 0, 0}));
  const ComplexVector v = RealVector({4, -2, 3});
  EXPECT_EQ(Restrict(v, SV::FromString("***")), v);
  EXPECT_EQ(Restrict(RealVector({7, 8, 9}), SV::FromString("00*")),
            RealVector({9}));
}

TEST(RestrictTest, Errors) {
  EXPECT_EQ(ThrownCode([] { Restrict(RealVector({1, 2}), SV::FromString("00")); }),
            ErrorCode::kEmptySupport);
  EXPECT_EQ(ThrownCode([] { Restrict(RealVector({1, 2}), SV::FromString("*")); }),
            ErrorCode::kDimensionMismatch);
}

TEST(RestrictTest, NonzeroCountBoundedBySupport) {
  std::mt19937_64 rng(53);
  std::bernoulli_distribution zero(0.4);
  for (int trial = 0; trial < 500; ++trial) {
    SV b = RandomPattern(rng, 6);
    if (b.count() == 0) b.set_star(0);
    ComplexVector v(6);
    for (int i = 0; i < 6; ++i) v(i) = zero(rng) ? 0.0 : 1.0 + i;
    const ComplexVector r = Restrict(v, b);
    std::size_t nnz = 0;
    for (Eigen::Index i = 0; i < r.size(); ++i) nnz += r(i) != 0.0;
    bool nonzero_on_support = true;
    for (std::size_t i : b.positions()) nonzero_on_support &= v(i) != 0.0;
    EXPECT_LE(nnz, b.count());
    EXPECT_EQ(nnz == b.count(), nonzero_on_support);
  }
}

}  // namespace
}  // namespace mincontrol
