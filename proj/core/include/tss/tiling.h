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
#ifndef TSS_TILING_H_
#define TSS_TILING_H_

#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "tss/permutation.h"

namespace tss {

// Token order is also the enumeration order: D < R < B.
enum class Tile { kDomino, kRed, kBlue };

// Tiles of a 1 x cells strip, listed left to right.
struct Tiling {
  std::vector<Tile> tiles;

  int cells() const;
  // "D,R,B"; the empty tiling is "".
  std::string ToString() const;
  friend bool operator==(const Tiling&, const Tiling&) = default;
};

absl::StatusOr<Tiling> ParseTiling(absl::string_view text);

// All tilings of a 1 x cells strip in lexicographic token order. There are
// p_{cells+1} of them.
std::vector<Tiling> EnumerateTilings(int cells);

// Tiling of n - 1 cells -> member of P_n(132). The tiles occupy positions
// 2..n; filling the rightmost unfilled tile first, a domino takes the two
// smallest remaining values in increasing order, a red square the largest,
// a blue square the smallest. The last value goes to position 1, and the
// result is inverted.
Permutation EncodeTiling(const Tiling& t);

// Inverse of EncodeTiling. Reads the inverse permutation from position n
// down to 2 against the set of unplaced values; fails at the first position
// no tile explains, which happens exactly when pi is outside P_n(132).
absl::StatusOr<Tiling> DecodeTiling(const Permutation& pi);

}  // namespace tss

#endif  // TSS_TILING_H_
