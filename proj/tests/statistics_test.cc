// Copyright 2026 The tssenum Authors
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
#include "tss/statistics.h"

#include <vector>

#include "gtest/gtest.h"
#include "naive_oracles.h"
#include "tss/oracle.h"
#include "tss/pattern.h"

namespace tss {
namespace {

using testing::ForEachPermutation;

TEST(RightToLeftMaximaTest, Examples) {
  EXPECT_EQ(RightToLeftMaxima(Permutation::Of({1, 3, 2}).values()), 2);
  EXPECT_EQ(RightToLeftMaxima(Permutation::Of({1, 2, 3}).values()), 1);
  EXPECT_EQ(RightToLeftMaxima(Permutation::Of({3, 2, 1}).values()), 3);
  EXPECT_EQ(RightToLeftMaxima(Permutation().values()), 0);
}

TEST(CountIncreasingTest, Examples) {
  EXPECT_EQ(CountIncreasing(Permutation::Of({1, 2, 3, 4}).values(), 3), 4);
  EXPECT_EQ(CountIncreasing(Permutation::Of({1, 3, 4, 2}).values(), 2), 4);
  EXPECT_EQ(CountIncreasing(Permutation::Of({2, 1}).values(), 1), 2);
}

TEST(CountIncreasingTest, AgreesWithGenericCounter) {
  for (int n = 0; n <= 7; ++n) {
    ForEachPermutation(n, [&](const std::vector<int>& v) {
      for (int d = 1; d <= 4; ++d) {
        ASSERT_EQ(CountIncreasing(v, d),
                  PatternMatcher(IncreasingPattern(d)).Count(v));
      }
    });
  }
}

TEST(RightToLeftMaximaTest, AgreesWithNaiveScan) {
  ForEachPermutation(7, [](const std::vector<int>& v) {
    ASSERT_EQ(RightToLeftMaxima(v), testing::NaiveRmax(v));
  });
}

// rmax = sum_d (-1)^(d+1) occ(12...d) on 132-avoiders.
TEST(RightToLeftMaximaTest, AlternatingSumOnAvoiders) {
  const Oracle oracle;
  ConstraintSet avoiders;
  avoiders.avoid = {Permutation::Of({1, 3, 2})};
  for (int n = 0; n <= 9; ++n) {
    ASSERT_TRUE(oracle
                    .Enumerate(n, avoiders,
                               [&](const Permutation& pi) {
                                 BigInt sum = 0;
                                 for (int d = 1; d <= n; ++d) {
                                   const BigInt c =
                                       CountIncreasing(pi.values(), d);
                                   sum += (d % 2 == 1) ? c : BigInt(-c);
                                 }
                                 ASSERT_EQ(sum, RightToLeftMaxima(pi.values()))
                                     << pi;
                               })
                    .ok());
  }
}

TEST(StatisticTest, ParseAndName) {
  for (const char* text : {"rmax", "length", "inc(3)", "occ(132)"}) {
    auto s = ParseStatistic(text);
    ASSERT_TRUE(s.ok()) << text;
    EXPECT_EQ(s->Name(), text);
  }
  EXPECT_FALSE(ParseStatistic("inc(0)").ok());
  EXPECT_FALSE(ParseStatistic("occ(11)").ok());
  EXPECT_FALSE(ParseStatistic("bogus").ok());
}

TEST(StatisticTest, Evaluate) {
  const Permutation pi = Permutation::Of({1, 3, 4, 2});
  EXPECT_EQ(Evaluate(pi, Statistic::Occurrences(Permutation::Of({1, 3, 2}))),
            2);
  EXPECT_EQ(Evaluate(pi, Statistic::Increasing(2)), 4);
  EXPECT_EQ(Evaluate(pi, Statistic::RightToLeftMaxima()), 2);
  EXPECT_EQ(Evaluate(pi, Statistic::Length()), 4);
}

}  // namespace
}  // namespace tss
