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

#include <iterator>
#include <set>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"

namespace tss {
namespace {

char TileToken(Tile t) {
  switch (t) {
    case Tile::kDomino:
      return 'D';
    case Tile::kRed:
      return 'R';
    case Tile::kBlue:
      return 'B';
  }
  return '?';
}

int Width(Tile t) { return t == Tile::kDomino ? 2 : 1; }

void Extend(int remaining, std::vector<Tile>& partial,
            std::vector<Tiling>& out) {
  if (remaining == 0) {
    out.push_back(Tiling{partial});
    return;
  }
  for (Tile t : {Tile::kDomino, Tile::kRed, Tile::kBlue}) {
    if (Width(t) > remaining) continue;
    partial.push_back(t);
    Extend(remaining - Width(t), partial, out);
    partial.pop_back();
  }
}

}  // namespace

int Tiling::cells() const {
  int total = 0;
  for (Tile t : tiles) total += Width(t);
  return total;
}

std::string Tiling::ToString() const {
  return absl::StrJoin(tiles, ",", [](std::string* out, Tile t) {
    out->push_back(TileToken(t));
  });
}

absl::StatusOr<Tiling> ParseTiling(absl::string_view text) {
  Tiling tiling;
  text = absl::StripAsciiWhitespace(text);
  if (text.empty()) return tiling;
  int index = 0;
  for (absl::string_view token : absl::StrSplit(text, ',')) {
    ++index;
    token = absl::StripAsciiWhitespace(token);
    if (token == "D") {
      tiling.tiles.push_back(Tile::kDomino);
    } else if (token == "R") {
      tiling.tiles.push_back(Tile::kRed);
    } else if (token == "B") {
      tiling.tiles.push_back(Tile::kBlue);
    } else {
      return absl::InvalidArgumentError(absl::StrCat(
          "bad tile token '", token, "' at position ", index,
          " (expected D, R or B)"));
    }
  }
  return tiling;
}

std::vector<Tiling> EnumerateTilings(int cells) {
  std::vector<Tiling> out;
  if (cells < 0) return out;
  std::vector<Tile> partial;
  Extend(cells, partial, out);
  return out;
}

Permutation EncodeTiling(const Tiling& t) {
  const int n = t.cells() + 1;
  std::set<int> remaining;
  for (int v = 1; v <= n; ++v) remaining.insert(v);
  std::vector<int> built(n, 0);
  int right = n - 1;  // 0-based index of the rightmost unfilled box
  for (auto it = t.tiles.rbegin(); it != t.tiles.rend(); ++it) {
    switch (*it) {
      case Tile::kDomino: {
        const int low = *remaining.begin();
        remaining.erase(remaining.begin());
        const int high = *remaining.begin();
        remaining.erase(remaining.begin());
        built[right - 1] = low;
        built[right] = high;
        right -= 2;
        break;
      }
      case Tile::kRed:
        built[right--] = *std::prev(remaining.end());
        remaining.erase(std::prev(remaining.end()));
        break;
      case Tile::kBlue:
        built[right--] = *remaining.begin();
        remaining.erase(remaining.begin());
        break;
    }
  }
  built[0] = *remaining.begin();
  return Inverse(*Permutation::FromValues(std::move(built)));
}

absl::StatusOr<Tiling> DecodeTiling(const Permutation& pi) {
  const int n = pi.size();
  if (n == 0) {
    return absl::InvalidArgumentError(
        "the empty permutation has no tiling (a tiling of n-1 cells needs n >= 1)");
  }
  const Permutation sigma = Inverse(pi);
  std::set<int> remaining;
  for (int v = 1; v <= n; ++v) remaining.insert(v);
  std::vector<Tile> reversed;
  // p is a 1-based position in sigma.
  for (int p = n; p >= 2;) {
    const int v = sigma[p - 1];
    const int low = *remaining.begin();
    const int high = *std::prev(remaining.end());
    if (v == high) {
      reversed.push_back(Tile::kRed);
      remaining.erase(v);
      p -= 1;
    } else if (v == low) {
      reversed.push_back(Tile::kBlue);
      remaining.erase(v);
      p -= 1;
    } else if (p >= 3 && v == *std::next(remaining.begin()) &&
               sigma[p - 2] == low) {
      reversed.push_back(Tile::kDomino);
      remaining.erase(v);
      remaining.erase(low);
      p -= 2;
    } else {
      return absl::InvalidArgumentError(absl::StrCat(
          pi.ToString(), " is not in P_n(132): inverse entry ", v,
          " at position ", p, " matches no tile"));
    }
  }
  return Tiling{std::vector<Tile>(reversed.rbegin(), reversed.rend())};
}

}  // namespace tss
