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
#include "tss/tiling.h"

#include <set>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "tss/oracle.h"
#include "tss/sequences.h"

namespace tss {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

ConstraintSet P132() {
  ConstraintSet c;
  c.avoid = {Permutation::Of({1, 3, 2})};
  c.two_stack_sortable = true;
  return c;
}

Tiling T(const char* text) { return *ParseTiling(text); }

std::vector<std::string> Strings(const std::vector<Tiling>& tilings) {
  std::vector<std::string> out;
  for (const auto& t : tilings) out.push_back(t.ToString());
  return out;
}

TEST(TilingTest, ParseAndPrint) {
  const Tiling t = T("D,R,B");
  EXPECT_THAT(t.tiles, ElementsAre(Tile::kDomino, Tile::kRed, Tile::kBlue));
  EXPECT_EQ(t.cells(), 4);
  EXPECT_EQ(t.ToString(), "D,R,B");
  EXPECT_TRUE(T("").tiles.empty());
  auto bad = ParseTiling("D,X");
  ASSERT_FALSE(bad.ok());
  EXPECT_THAT(bad.status().message(), HasSubstr("'X'"));
}

TEST(TilingTest, EnumerateExamples) {
  EXPECT_THAT(Strings(EnumerateTilings(0)), ElementsAre(""));
  EXPECT_THAT(Strings(EnumerateTilings(2)),
              ElementsAre("D", "R,R", "R,B", "B,R", "B,B"));
  EXPECT_EQ(EnumerateTilings(3).size(), 12u);
}

TEST(TilingTest, CountIsPell) {
  for (int cells = 0; cells <= 11; ++cells) {
    const auto all = EnumerateTilings(cells);
    EXPECT_EQ(BigInt(static_cast<unsigned long>(all.size())), Pell(cells + 1));
    for (const auto& t : all) EXPECT_EQ(t.cells(), cells);
  }
}

TEST(TilingTest, EncodeExamples) {
  EXPECT_EQ(EncodeTiling(T("D")), Permutation::Of({2, 3, 1}));
  EXPECT_EQ(EncodeTiling(T("R,R")), Permutation::Of({1, 2, 3}));
  EXPECT_EQ(EncodeTiling(T("B,B")), Permutation::Of({3, 2, 1}));
  EXPECT_EQ(EncodeTiling(T("")), Permutation::Of({1}));
}

TEST(TilingTest, DecodeExamples) {
  EXPECT_EQ(DecodeTiling(Permutation::Of({2, 3, 1}))->ToString(), "D");
  EXPECT_EQ(DecodeTiling(Permutation::Of({3, 1, 2}))->ToString(), "R,B");
  auto bad = DecodeTiling(Permutation::Of({1, 3, 2}));
  ASSERT_FALSE(bad.ok());
  EXPECT_THAT(bad.status().message(), HasSubstr("position"));
  EXPECT_FALSE(DecodeTiling(Permutation()).ok());
}

TEST(TilingTest, BijectionOntoP132) {
  const Oracle oracle({.max_n = 12, .threads = 1});
  for (int n = 1; n <= 12; ++n) {
    auto members = oracle.EnumerateAll(n, P132());
    ASSERT_TRUE(members.ok());
    std::set<Permutation> image;
    for (const Tiling& t : EnumerateTilings(n - 1)) {
      const Permutation pi = EncodeTiling(t);
      ASSERT_EQ(pi.size(), n);
      ASSERT_TRUE(image.insert(pi).second) << "not injective at " << pi;
      auto back = DecodeTiling(pi);
      ASSERT_TRUE(back.ok()) << back.status();
      ASSERT_EQ(*back, t);
    }
    EXPECT_EQ(image, std::set<Permutation>(members->begin(), members->end()))
        << "n=" << n;
    for (const auto& pi : *members) {
      auto t = DecodeTiling(pi);
      ASSERT_TRUE(t.ok()) << pi;
      ASSERT_EQ(EncodeTiling(*t), pi);
    }
  }
}

TEST(TilingTest, DecodeRejectsEverythingOutsideTheClass) {
  const Oracle oracle;
  for (int n = 1; n <= 7; ++n) {
    auto members = oracle.EnumerateAll(n, P132());
    const std::set<Permutation> inside(members->begin(), members->end());
    ASSERT_TRUE(oracle
                    .Enumerate(n, ConstraintSet{},
                               [&](const Permutation& pi) {
                                 ASSERT_EQ(DecodeTiling(pi).ok(),
                                           inside.contains(pi))
                                     << pi;
                               })
                    .ok());
  }
}

}  // namespace
}  // namespace tss
