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
#include "tss/sequences.h"

#include "gtest/gtest.h"

namespace tss {
namespace {

TEST(SequencesTest, Fibonacci) {
  const long expected[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
  for (int n = 0; n < 10; ++n) EXPECT_EQ(Fibonacci(n), expected[n]);
  EXPECT_EQ(Fibonacci(100), BigInt("354224848179261915075"));
}

TEST(SequencesTest, Pell) {
  const long expected[] = {0, 1, 2, 5, 12, 29, 70, 169, 408};
  for (int n = 0; n < 9; ++n) EXPECT_EQ(Pell(n), expected[n]);
}

TEST(SequencesTest, FactorialAndBinomial) {
  EXPECT_EQ(Factorial(0), 1);
  EXPECT_EQ(Factorial(20), BigInt("2432902008176640000"));
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(5, 0), 1);
  EXPECT_EQ(Binomial(5, 6), 0);
  EXPECT_EQ(Binomial(5, -1), 0);
  EXPECT_EQ(Binomial(0, 0), 1);
}

TEST(SequencesTest, WestCount) {
  EXPECT_EQ(WestCount(4), 22);
  EXPECT_EQ(WestCount(8), 9614);
  EXPECT_EQ(WestCount(20), BigInt("9737153323590"));
}

}  // namespace
}  // namespace tss
