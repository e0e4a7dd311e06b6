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


#include "labeldp/interval_optimizer.h"

#include <cmath>
#include <random>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "labeldp/status.h"
#include "labeldp/step_density.h"
#include "oracles.h"

namespace labeldp {
namespace {

StepDensity Make(std::vector<double> nodes, std::vector<double> values,
                 StepValues mode = StepValues::kHeights) {
  auto density = StepDensity::Create(nodes, values, mode);
  EXPECT_TRUE(density.ok()) << density.status();
  return *std::move(density);
}

const double kUniformF = 0.2 / (0.2 + std::exp(-1.0));

TEST(ObjectiveTest, UniformFullInterval) {
  StepDensity d = Make({0, 1}, {1});
  EXPECT_NEAR(*Objective(d, 0, 1, 0.1, 1), kUniformF, 1e-15);
  EXPECT_NEAR(kUniformF, 0.3521874, 1e-7);
}

TEST(ObjectiveTest, EmptyIntervalIsZero) {
  StepDensity d = Make({0, 1, 3}, {0.5, 0.25});
  EXPECT_EQ(*Objective(d, 0.4, 0.4, 0.1, 1), 0.0);
}

TEST(ObjectiveTest, HugeEpsilonApproachesOne) {
  StepDensity d = Make({0, 1}, {1});
  EXPECT_NEAR(*Objective(d, 0, 1, 0.1, 1e9), 1.0, 1e-6);
}

TEST(ObjectiveTest, Errors) {
  StepDensity d = Make({0, 1}, {1});
  EXPECT_TRUE(HasErrorTag(Objective(d, 0, 1, 0, 1).status(),
                          error_tag::kNonPositiveZeta));
  EXPECT_TRUE(HasErrorTag(Objective(d, 0, 1, 0.1, -1).status(),
                          error_tag::kNegativeEpsilon));
  EXPECT_TRUE(HasErrorTag(Objective(d, 1, 0, 0.1, 1).status(),
                          error_tag::kReversedBounds));
}

TEST(ObjectiveTest, AlwaysAProbability) {
  std::mt19937_64 engine(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    oracle::Steps s = oracle::RandomSteps(engine, 1 + t % 8, -1, 2);
    StepDensity d = Make(s.nodes, s.heights);
    double a = -2 + 4 * unit(engine);
    double b = -2 + 4 * unit(engine);
    if (a > b) std::swap(a, b);
    const double f = *Objective(d, a, b, 0.01 + unit(engine), 8 * unit(engine));
    EXPECT_GE(f, 0.0);
    EXPECT_LE(f, 1.0);
  }
}

TEST(CriticalPointsTest, SameBinHasEqualHeights) {
  StepDensity d = Make({0, 1}, {1});
  EXPECT_TRUE(HasErrorTag(ComputeCriticalPoints(d, 0, 0, 0.1, 1).status(),
                          error_tag::kEqualHeights));
}

TEST(CriticalPointsTest, EqualHeightsAcrossBins) {
  StepDensity d = Make({0, 1, 2, 3}, {1, 2, 1});
  EXPECT_TRUE(HasErrorTag(ComputeCriticalPoints(d, 0, 2, 0.1, 1).status(),
                          error_tag::kEqualHeights));
}

TEST(CriticalPointsTest, InvalidIndices) {
  StepDensity d = Make({0, 1, 2}, {1, 2});
  EXPECT_FALSE(ComputeCriticalPoints(d, 1, 0, 0.1, 1).ok());
  EXPECT_FALSE(ComputeCriticalPoints(d, 0, 2, 0.1, 1).ok());
}

TEST(CriticalPointsTest, TwoBinExampleByHand) {
  StepDensity d = Make({0, 1, 2}, {0.8, 0.2}, StepValues::kBinMasses);
  const double zeta = 0.1;
  const double decay = std::exp(-1.0);
  auto cp = ComputeCriticalPoints(d, 0, 1, zeta, 1);
  ASSERT_TRUE(cp.ok()) << cp.status();
  // h = 0.8 * 1 - 0.2 * 1.
  const double h = 0.6;
  const double c1 = 2 * zeta * 0.8 - decay * h;
  const double c2 = 2 * zeta * 0.2 - decay * h;
  EXPECT_NEAR(cp->h, h, 1e-15);
  EXPECT_NEAR(cp->c1, c1, 1e-15);
  EXPECT_NEAR(cp->c2, c2, 1e-15);
  EXPECT_NEAR(cp->e1, c2 / (decay * (0.2 - 0.8)), 1e-14);
  EXPECT_NEAR(cp->e2, c1 / (decay * (0.2 - 0.8)), 1e-14);
  EXPECT_NEAR(cp->c1 - cp->c2, 2 * zeta * (0.8 - 0.2), 1e-15);

  // F extended analytically with A1 in bin 0 and A2 in bin 1 is stationary
  // in A2 at A1 = e1 and stationary in A1 at A2 = e2.
  auto extended = [&](double a1, double a2) {
    const double mass = 0.8 * (1 - a1) + 0.2 * (a2 - 1);
    return oracle::ObjectiveFromMass(mass, a2 - a1, zeta, 1);
  };
  const double d_a2 = oracle::CentralDifference(
      [&](double a2) { return extended(cp->e1, a2); }, 1.5, 1e-6);
  const double d_a1 = oracle::CentralDifference(
      [&](double a1) { return extended(a1, cp->e2); }, 0.5, 1e-6);
  EXPECT_NEAR(d_a2, 0.0, 1e-8);
  EXPECT_NEAR(d_a1, 0.0, 1e-8);
}

TEST(CriticalPointsTest, IdentityOnRandomDensities) {
  std::mt19937_64 engine(11);
  for (int t = 0; t < 100; ++t) {
    oracle::Steps s = oracle::RandomSteps(engine, 2 + t % 7, 0, 1);
    StepDensity d = Make(s.nodes, s.heights);
    const size_t k = d.num_bins();
    const size_t i = t % (k - 1);
    const size_t j = k - 1;
    auto cp = ComputeCriticalPoints(d, i, j, 0.3, 0.7);
    ASSERT_TRUE(cp.ok());
    EXPECT_NEAR(cp->c1 - cp->c2,
                2 * 0.3 * (s.heights[i] - s.heights[j]), 1e-12);
    double h = s.heights[i] * s.nodes[i + 1] - s.heights[j] * s.nodes[j];
    for (size_t l = i + 1; l < j; ++l) {
      h += s.heights[l] * (s.nodes[l + 1] - s.nodes[l]);
    }
    EXPECT_NEAR(cp->h, h, 1e-12);
  }
}

TEST(GradientTest, MatchesFiniteDifferences) {
  std::mt19937_64 engine(12);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int checked = 0;
  while (checked < 100) {
    oracle::Steps s = oracle::RandomSteps(engine, 2 + checked % 7, 0, 1);
    StepDensity d = Make(s.nodes, s.heights);
    const double zeta = 0.01 + unit(engine);
    const double epsilon = 0.05 + 8 * unit(engine);
    double a1 = unit(engine);
    double a2 = unit(engine);
    if (a1 > a2) std::swap(a1, a2);
    if (d.BinIndex(a1) == d.BinIndex(a2)) continue;
    bool near_node = false;
    for (double n : s.nodes) {
      near_node |= std::abs(n - a1) < 1e-4 || std::abs(n - a2) < 1e-4;
    }
    if (near_node) continue;
    auto grad = ComputeObjectiveGradient(d, a1, a2, zeta, epsilon);
    ASSERT_TRUE(grad.ok()) << grad.status();
    auto f = [&](double x, double y) { return *Objective(d, x, y, zeta, epsilon); };
    const double fd1 = oracle::CentralDifference(
        [&](double x) { return f(x, a2); }, a1, 1e-6);
    const double fd2 = oracle::CentralDifference(
        [&](double y) { return f(a1, y); }, a2, 1e-6);
    EXPECT_NEAR(grad->d_a1, fd1, 1e-4 * std::max(std::abs(fd1), 1e-3));
    EXPECT_NEAR(grad->d_a2, fd2, 1e-4 * std::max(std::abs(fd2), 1e-3));
    ++checked;
  }
}

TEST(GradientTest, SameBinMatchesFiniteDifferences) {
  StepDensity d = Make({0, 1, 2}, {0.3, 0.7});
  auto grad = ComputeObjectiveGradient(d, 1.2, 1.7, 0.2, 1.5);
  ASSERT_TRUE(grad.ok());
  auto f = [&](double x, double y) { return *Objective(d, x, y, 0.2, 1.5); };
  EXPECT_NEAR(grad->d_a1,
              oracle::CentralDifference([&](double x) { return f(x, 1.7); },
                                        1.2, 1e-6),
              1e-7);
  EXPECT_NEAR(grad->d_a2,
              oracle::CentralDifference([&](double y) { return f(1.2, y); },
                                        1.7, 1e-6),
              1e-7);
}

TEST(OptimalIntervalTest, UniformPicksFullSupport) {
  StepDensity d = Make({0, 1}, {1});
  auto result = OptimalInterval(d, 0.1, 1);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->interval.a1, 0.0);
  EXPECT_EQ(result->interval.a2, 1.0);
  EXPECT_NEAR(result->objective, kUniformF, 1e-15);
  EXPECT_GT(result->evaluations, 0);
}

TEST(OptimalIntervalTest, HeavyBinMatchesGrid) {
  StepDensity d = Make({0, 1, 2}, {0.99, 0.01}, StepValues::kBinMasses);
  auto result = OptimalInterval(d, 0.05, 0.1);
  ASSERT_TRUE(result.ok());
  oracle::Steps s{{0, 1, 2}, {0.99, 0.01}};
  oracle::GridMaximum grid =
      oracle::BruteForceObjective(s, 0, 2, 0.05, 0.1, 1e-3);
  EXPECT_GE(result->objective, grid.value - 1e-6);
  EXPECT_NEAR(result->objective, grid.value, 1e-6);
  EXPECT_GE(result->interval.a1, 0.0);
  EXPECT_LE(result->interval.a2, 1.0);
}

TEST(OptimalIntervalTest, SingleBinStaysInSupport) {
  StepDensity d = Make({2, 5}, {1});
  auto result = OptimalInterval(d, 0.3, 2);
  ASSERT_TRUE(result.ok());
  EXPECT_GE(result->interval.a1, 2.0);
  EXPECT_LE(result->interval.a2, 5.0);
  EXPECT_LE(result->interval.a1, result->interval.a2);
}

TEST(OptimalIntervalTest, TiesPreferSmallerStart) {
  StepDensity d = Make({0, 1, 2, 3}, {0.5, 0, 0.5});
  auto result = OptimalInterval(d, 0.1, 1);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->interval.a1, 0.0);
  EXPECT_EQ(result->interval.a2, 1.0);
}

TEST(OptimalIntervalTest, TiesPreferLongerInterval) {
  // With epsilon = +inf-like budget on a zero-height tail, extending into the
  // empty bin does not change F at exp(-eps) = 0.
  StepDensity d = Make({0, 1, 2}, {1, 0});
  auto result = OptimalInterval(d, 0.1, 800);
  ASSERT_TRUE(result.ok());
  EXPECT_EQ(result->interval.a1, 0.0);
  EXPECT_EQ(result->interval.a2, 2.0);
}

TEST(OptimalIntervalTest, PropagatesErrors) {
  StepDensity d = Make({0, 1}, {1});
  EXPECT_TRUE(HasErrorTag(OptimalInterval(d, -1, 1).status(),
                          error_tag::kNonPositiveZeta));
  EXPECT_TRUE(HasErrorTag(OptimalInterval(d, 1, -1).status(),
                          error_tag::kNegativeEpsilon));
}

TEST(OptimalIntervalTest, MonotoneOutsideSupport) {
  std::mt19937_64 engine(21);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int t = 0; t < 20; ++t) {
    oracle::Steps s = oracle::RandomSteps(engine, 1 + t % 8, 0, 1);
    StepDensity d = Make(s.nodes, s.heights);
    const double zeta = 0.01 + unit(engine);
    const double epsilon = 0.05 + 8 * unit(engine);
    const double inner = unit(engine);
    double previous_left = *Objective(d, 0, inner, zeta, epsilon);
    double previous_right = *Objective(d, inner, 1, zeta, epsilon);
    std::vector<double> ts;
    for (int r = 0; r < 10; ++r) ts.push_back(2 * unit(engine));
    std::sort(ts.begin(), ts.end());
    for (double step : ts) {
      const double left = *Objective(d, -step, inner, zeta, epsilon);
      const double right = *Objective(d, inner, 1 + step, zeta, epsilon);
      EXPECT_LE(left, previous_left + 1e-15);
      EXPECT_LE(right, previous_right + 1e-15);
      previous_left = left;
      previous_right = right;
    }
  }
}

class OptimalIntervalOracleTest : public ::testing::TestWithParam<int> {};

TEST_P(OptimalIntervalOracleTest, AtLeastGridMaximum) {
  std::mt19937_64 engine(300 + GetParam());
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  oracle::Steps s = oracle::RandomSteps(engine, 1 + GetParam() % 8, 0, 1);
  StepDensity d = Make(s.nodes, s.heights);
  const double zeta = 0.01 + 0.99 * unit(engine);
  const double epsilon = 0.05 + 7.95 * unit(engine);
  auto result = OptimalInterval(d, zeta, epsilon);
  ASSERT_TRUE(result.ok());
  oracle::GridMaximum grid =
      oracle::BruteForceObjective(s, d.lower(), d.upper(), zeta, epsilon, 1e-3);
  EXPECT_GE(result->objective, grid.value - 1e-6);
  // The reported objective is F at the reported interval.
  EXPECT_NEAR(result->objective,
              oracle::ObjectiveFromMass(
                  s.Mass(result->interval.a1, result->interval.a2),
                  result->interval.length(), zeta, epsilon),
              1e-12);
  EXPECT_GE(result->interval.a1, d.lower());
  EXPECT_LE(result->interval.a2, d.upper());
}

INSTANTIATE_TEST_SUITE_P(Random, OptimalIntervalOracleTest,
                         ::testing::Range(0, 32));

}  // namespace
}  // namespace labeldp
