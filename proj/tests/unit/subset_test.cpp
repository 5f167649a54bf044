// Copyright 2026 The Authors.
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

#include "matroids/subset.hpp"

#include <vector>

#include "gtest/gtest.h"

namespace matroids {
namespace {

TEST(SubsetTest, DepositAndExtractAreInverse) {
  const Subset positions = 0b1011'0110;
  for (Subset c = 0; c < 32; ++c) {
    const Subset spread = deposit(c, positions);
    EXPECT_TRUE(is_subset(spread, positions));
    EXPECT_EQ(extract(spread, positions), c);
  }
}

TEST(SubsetTest, KSubsetsAreEnumeratedOnceEach) {
  const Subset s = 0b1101'1010;
  for (int k = 0; k <= popcount(s); ++k) {
    std::vector<Subset> seen;
    for_each_k_subset(s, k, [&](Subset x) { seen.push_back(x); });
    int expected = 0;
    for_each_subset(s, [&](Subset x) {
      if (popcount(x) == k) ++expected;
    });
    ASSERT_EQ(static_cast<int>(seen.size()), expected) << "k=" << k;
    for (Subset x : seen) {
      EXPECT_EQ(popcount(x), k);
      EXPECT_TRUE(is_subset(x, s));
    }
    for (std::size_t i = 1; i < seen.size(); ++i) EXPECT_LT(seen[i - 1], seen[i]);
  }
}

TEST(SubsetTest, FullWordSubsets) {
  int count = 0;
  for_each_k_subset(full_set(64), 64, [&](Subset x) {
    EXPECT_EQ(x, ~Subset{0});
    ++count;
  });
  EXPECT_EQ(count, 1);
  count = 0;
  for_each_k_subset(full_set(64), 63, [&](Subset) { ++count; });
  EXPECT_EQ(count, 64);
}

TEST(SubsetTest, BitsIterateInOrder) {
  std::vector<int> got;
  for (int i : bits(bit(3) | bit(0) | bit(63))) got.push_back(i);
  EXPECT_EQ(got, (std::vector<int>{0, 3, 63}));
}

}  // namespace
}  // namespace matroids
