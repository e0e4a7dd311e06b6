// Copyright 2026 The labeldp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "labeldp/step_density.h"

#include <cmath>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "labeldp/status.h"
#include "oracles.h"

namespace labeldp {
namespace {

std::vector<double> ToVector(std::span<const double> s) {
  return {s.begin(), s.end()};
}

using ::testing::DoubleNear;
using ::testing::ElementsAre;
using ::testing::HasSubstr;

StepDensity Make(std::vector<double> nodes, std::vector<double> values,
                 StepValues mode = StepValues::kHeights) {
  auto density = StepDensity::Create(nodes, values, mode);
  EXPECT_TRUE(density.ok()) << density.status();
  return *std::move(density);
}

TEST(StepDensityTest, UniformIsAlreadyNormalized) {
  StepDensity d = Make({0, 1}, {1});
  EXPECT_THAT(ToVector(d.heights()), ElementsAre(1.0));
  EXPECT_DOUBLE_EQ(*d.Integrate(0, 1), 1.0);
}

TEST(StepDensityTest, BinMassesAreDividedByWidth) {
  StepDensity d = Make({0, 1, 3}, {0.5, 0.5}, StepValues::kBinMasses);
  EXPECT_THAT(ToVector(d.heights()), ElementsAre(0.5, 0.25));
}

TEST(StepDensityTest, HeightsAreNormalized) {
  StepDensity d = Make({0, 1}, {4});
  EXPECT_THAT(ToVector(d.heights()), ElementsAre(1.0));
}

TEST(StepDensityTest, RejectsUnsortedNodes) {
  auto d = StepDensity::Create(std::vector<double>{0, 2, 1},
                               std::vector<double>{1, 1},
                               StepValues::kHeights);
  EXPECT_TRUE(HasErrorTag(d.status(), error_tag::kNonMonotoneNodes));
}

TEST(StepDensityTest, RejectsZeroWidthBin) {
  auto d = StepDensity::Create(std::vector<double>{0, 1, 1},
                               std::vector<double>{1, 1},
                               StepValues::kHeights);
  EXPECT_THAT(d.status().message(), HasSubstr("NonMonotoneNodes"));
}

TEST(StepDensityTest, RejectsNegativeMass) {
  auto d = StepDensity::Create(std::vector<double>{0, 1, 2},
                               std::vector<double>{1, -0.1},
                               StepValues::kBinMasses);
  EXPECT_THAT(d.status().message(), HasSubstr("NegativeMass"));
}

TEST(StepDensityTest, RejectsAllZero) {
  auto d = StepDensity::Create(std::vector<double>{0, 1, 2},
                               std::vector<double>{0, 0},
                               StepValues::kHeights);
  EXPECT_THAT(d.status().message(), HasSubstr("ZeroTotalMass"));
}

TEST(StepDensityTest, RejectsLengthMismatch) {
  auto d = StepDensity::Create(std::vector<double>{0, 1, 2},
                               std::vector<double>{1},
                               StepValues::kHeights);
  EXPECT_FALSE(d.ok());
}

TEST(StepDensityTest, PdfAt) {
  StepDensity uniform = Make({0, 1}, {1});
  EXPECT_EQ(uniform.PdfAt(0.5), 1.0);
  EXPECT_EQ(uniform.PdfAt(2.0), 0.0);
  StepDensity two = Make({0, 1, 3}, {0.5, 0.25});
  EXPECT_EQ(two.PdfAt(2.0), 0.25);
}

TEST(StepDensityTest, BinsAreHalfOpenExceptTheLast) {
  StepDensity d = Make({0, 1, 3}, {0.5, 0.25});
  EXPECT_EQ(d.BinIndex(0.0), 0);
  EXPECT_EQ(d.BinIndex(1.0), 1);
  EXPECT_EQ(d.BinIndex(3.0), 1);
  EXPECT_EQ(d.BinIndex(-1e-12), -1);
  EXPECT_EQ(d.BinIndex(3.0 + 1e-12), -1);
  EXPECT_EQ(d.PdfAt(1.0), 0.25);
}

TEST(StepDensityTest, IntegrateExamples) {
  StepDensity uniform = Make({0, 1}, {1});
  EXPECT_DOUBLE_EQ(*uniform.Integrate(0.25, 0.75), 0.5);
  EXPECT_EQ(*uniform.Integrate(0.3, 0.3), 0.0);
  StepDensity two = Make({0, 1, 3}, {0.5, 0.25});
  EXPECT_DOUBLE_EQ(*two.Integrate(0.5, 2), 0.5);
  oracle::Steps steps{{0, 1, 3}, {0.5, 0.25}};
  EXPECT_NEAR(oracle::MidpointRule([&](double y) { return steps.At(y); }, 0.5,
                                   2, 1000000),
              0.5, 1e-6);
}

TEST(StepDensityTest, IntegrateBeyondSupportAddsNothing) {
  StepDensity d = Make({0, 1, 3}, {0.5, 0.25});
  EXPECT_DOUBLE_EQ(*d.Integrate(-10, 10), 1.0);
  EXPECT_EQ(*d.Integrate(4, 5), 0.0);
}

TEST(StepDensityTest, IntegrateRejectsReversedBounds) {
  StepDensity d = Make({0, 1}, {1});
  EXPECT_TRUE(HasErrorTag(d.Integrate(0.7, 0.2).status(),
                          error_tag::kReversedBounds));
  EXPECT_EQ(d.MassBetween(0.7, 0.2), 0.0);
}

TEST(StepDensityTest, Cdf) {
  StepDensity d = Make({0, 1, 3}, {0.5, 0.25});
  EXPECT_EQ(d.Cdf(-1), 0.0);
  EXPECT_DOUBLE_EQ(d.Cdf(1), 0.5);
  EXPECT_DOUBLE_EQ(d.Cdf(2), 0.75);
  EXPECT_DOUBLE_EQ(d.Cdf(5), 1.0);
}

TEST(StepDensityTest, RestrictToRange) {
  StepDensity d = Make({-2, 0, 1, 3}, {0.1, 0.4, 0.2});
  auto restricted = d.RestrictToRange(0.5, 2);
  ASSERT_TRUE(restricted.ok()) << restricted.status();
  EXPECT_THAT(ToVector(restricted->nodes()), ElementsAre(0.5, 1, 2));
  // Masses 0.2 and 0.2 renormalized to 0.5 each.
  EXPECT_THAT(ToVector(restricted->heights()),
              ElementsAre(DoubleNear(1.0, 1e-12), DoubleNear(0.5, 1e-12)));
  EXPECT_TRUE(HasErrorTag(d.RestrictToRange(5, 6).status(),
                          error_tag::kZeroTotalMass));
  EXPECT_TRUE(HasErrorTag(d.RestrictToRange(1, 1).status(),
                          error_tag::kReversedBounds));
}

class StepDensityPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(StepDensityPropertyTest, NormalizedAdditiveAndMatchesRiemann) {
  std::mt19937_64 engine(1000 + GetParam());
  std::uniform_int_distribution<int> bins(1, 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int k = bins(engine);
  const double lo = -5.0 + 10.0 * unit(engine);
  const double span = 0.1 + 3.0 * unit(engine);

  // Unnormalized masses through the bin-mass constructor.
  oracle::Steps raw = oracle::RandomSteps(engine, k, lo, span);
  std::vector<double> masses;
  for (size_t i = 0; i < raw.heights.size(); ++i) {
    masses.push_back(7.0 * raw.heights[i] * (raw.nodes[i + 1] - raw.nodes[i]));
  }
  StepDensity d = Make(raw.nodes, masses, StepValues::kBinMasses);
  EXPECT_NEAR(*d.Integrate(d.lower(), d.upper()), 1.0, 1e-9);
  for (size_t i = 0; i < raw.heights.size(); ++i) {
    EXPECT_NEAR(d.heights()[i], raw.heights[i], 1e-12 * raw.heights[i]);
  }

  for (int t = 0; t < 20; ++t) {
    double p[3] = {lo - 0.5 + (span + 1) * unit(engine),
                   lo - 0.5 + (span + 1) * unit(engine),
                   lo - 0.5 + (span + 1) * unit(engine)};
    std::sort(p, p + 3);
    const double whole = *d.Integrate(p[0], p[2]);
    const double parts = *d.Integrate(p[0], p[1]) + *d.Integrate(p[1], p[2]);
    EXPECT_NEAR(whole, parts, 1e-12 * std::max(1.0, whole));
    EXPECT_NEAR(whole, raw.Mass(p[0], p[2]), 1e-12);
  }

  const double a = lo - 0.2;
  const double b = lo + span + 0.2;
  const auto steps = static_cast<int64_t>(std::ceil((b - a) / 1e-5));
  const double riemann = oracle::MidpointRule(
      [&](double y) { return d.PdfAt(y); }, a, b, steps);
  EXPECT_NEAR(riemann, *d.Integrate(a, b), 1e-4);
}

INSTANTIATE_TEST_SUITE_P(Random, StepDensityPropertyTest,
                         ::testing::Range(0, 25));

}  // namespace
}  // namespace labeldp
