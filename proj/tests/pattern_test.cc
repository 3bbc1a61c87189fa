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
#include "tss/pattern.h"

#include <map>
#include <vector>

#include "gtest/gtest.h"
#include "naive_oracles.h"

namespace tss {
namespace {

using testing::ForEachPermutation;
using testing::NaiveOccurrences;

const Permutation kExample = Permutation::Of({2, 1, 4, 5, 3, 8, 7, 6, 9});

TEST(ContainsTest, IntroductionExample) {
  EXPECT_FALSE(Contains(kExample, Permutation::Of({3, 1, 2})));
  EXPECT_FALSE(Contains(kExample, Permutation::Of({2, 4, 1, 3})));
  EXPECT_TRUE(Contains(kExample, Permutation::Of({1, 2, 4, 3})));
}

TEST(ContainsTest, EmptyCases) {
  EXPECT_FALSE(Contains(Permutation(), Permutation::Of({1})));
  EXPECT_TRUE(Contains(Permutation::Of({1}), Permutation()));
}

TEST(CountOccurrencesTest, Examples) {
  EXPECT_EQ(CountOccurrences(Permutation::Of({1, 3, 4, 2}),
                             Permutation::Of({1, 3, 2})),
            2);
  EXPECT_EQ(CountOccurrences(Permutation::Of({1, 3, 2}),
                             Permutation::Of({1, 3, 2})),
            1);
  EXPECT_EQ(CountOccurrences(Permutation::Of({3, 2, 1}),
                             Permutation::Of({1, 2, 3})),
            0);
}

// Every pattern of length <= 4 against every permutation of length <= 8
// (sampled at n = 8 to keep the run short).
TEST(CountOccurrencesTest, AgreesWithSubsetEnumeration) {
  std::vector<Permutation> patterns;
  for (int k = 1; k <= 4; ++k) {
    ForEachPermutation(k, [&](const std::vector<int>& t) {
      patterns.push_back(*Permutation::FromValues(t));
    });
  }
  for (int n = 0; n <= 8; ++n) {
    int index = 0;
    ForEachPermutation(n, [&](const std::vector<int>& v) {
      if (n == 8 && index++ % 97 != 0) return;
      const Permutation pi = *Permutation::FromValues(v);
      for (const auto& tau : patterns) {
        const auto expected = NaiveOccurrences(v, testing::Values(tau));
        const BigInt got = CountOccurrences(pi, tau);
        ASSERT_EQ(got, expected) << pi << " / " << tau;
        ASSERT_EQ(Contains(pi, tau), expected > 0) << pi << " / " << tau;
      }
    });
  }
}

TEST(CountOccurrencesTest, ResultsOverAllRSumToFactorial) {
  const Permutation tau = Permutation::Of({1, 3, 2});
  for (int n = 0; n <= 7; ++n) {
    std::map<BigInt, long> histogram;
    ForEachPermutation(n, [&](const std::vector<int>& v) {
      ++histogram[CountOccurrences(*Permutation::FromValues(v), tau)];
    });
    long total = 0;
    for (const auto& [r, count] : histogram) {
      total += count;
      EXPECT_LE(r, BigInt(n * (n - 1) * (n - 2) / 6));
    }
    long factorial = 1;
    for (int i = 2; i <= n; ++i) factorial *= i;
    EXPECT_EQ(total, factorial);
  }
}

TEST(PatternMatcherTest, AnchoredMatchesOnlyUseTheLastEntry) {
  const PatternMatcher m(Permutation::Of({1, 3, 2}));
  const std::vector<int> seq = {1, 3, 2, 4};
  EXPECT_TRUE(m.Matches(seq));
  EXPECT_FALSE(m.MatchesEndingAtLast(seq));
  const std::vector<int> seq2 = {1, 3, 4, 2};
  EXPECT_EQ(m.CountEndingAtLast(seq2, 100), 2u);
  // Counting stops just past the limit.
  EXPECT_EQ(m.CountEndingAtLast(seq2, 0), 1u);
}

TEST(PatternMatcherTest, AnchoredCountsSumToTotal) {
  const PatternMatcher m(Permutation::Of({2, 3, 1}));
  ForEachPermutation(7, [&](const std::vector<int>& v) {
    std::uint64_t sum = 0;
    for (std::size_t len = 1; len <= v.size(); ++len) {
      sum += m.CountEndingAtLast(std::span<const int>(v).first(len), 1000);
    }
    ASSERT_EQ(BigInt(static_cast<unsigned long>(sum)), m.Count(v));
  });
}

TEST(PatternMatcherTest, WorksOnArbitraryDistinctValues) {
  const PatternMatcher m(Permutation::Of({2, 1}));
  const std::vector<int> seq = {100, -5, 40};
  EXPECT_EQ(m.Count(seq), 2);
}

}  // namespace
}  // namespace tss
