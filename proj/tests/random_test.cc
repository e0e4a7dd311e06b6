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


#include "labeldp/random.h"

#include <cmath>
#include <set>

#include "gtest/gtest.h"

namespace labeldp {
namespace {

TEST(RandomStreamTest, UniformRangeAndReplay) {
  RandomStream a(42);
  RandomStream b(42);
  double sum = 0.0;
  for (int i = 0; i < 100000; ++i) {
    const double u = a.Uniform();
    ASSERT_EQ(u, b.Uniform());
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  EXPECT_NEAR(sum / 100000, 0.5, 0.005);
  EXPECT_EQ(a.draws(), 100000u);
  EXPECT_EQ(a.seed(), 42u);
}

TEST(RandomStreamTest, OpenUniformAvoidsEndpoints) {
  RandomStream s(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = s.OpenUniform();
    ASSERT_GT(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomStreamTest, FirstUniformIsPinned) {
  // 53 high bits of the first mt19937_64 output for seed 5489.
  RandomStream s(5489);
  EXPECT_EQ(s.Uniform(), static_cast<double>(14514284786278117030ull >> 11) *
                             0x1.0p-53);
}

TEST(RandomStreamTest, NormalMoments) {
  RandomStream s(9);
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < 200000; ++i) {
    const double z = s.Normal();
    sum += z;
    sq += z * z;
  }
  EXPECT_NEAR(sum / 200000, 0.0, 0.01);
  EXPECT_NEAR(sq / 200000, 1.0, 0.02);
  EXPECT_EQ(s.draws(), 200000u);
}

TEST(DeriveSeedTest, DistinctStreams) {
  std::set<uint64_t> seeds;
  for (uint64_t tag = 0; tag < 10; ++tag) {
    for (uint64_t index = 0; index < 1000; ++index) {
      seeds.insert(DeriveSeed(7, tag, index));
    }
  }
  EXPECT_EQ(seeds.size(), 10000u);
  EXPECT_EQ(DeriveSeed(7, 1, 3), DeriveSeed(7, 1, 3));
  EXPECT_NE(DeriveSeed(7, 1, 3), DeriveSeed(8, 1, 3));
  EXPECT_EQ(DeriveSeed(7, 1, 0) ^ DeriveSeed(7, 1, 5), 5u);
  EXPECT_NE(MixBits(1), 1u);
}

}  // namespace
}  // namespace labeldp
