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
#ifndef TSS_PATTERN_H_
#define TSS_PATTERN_H_

#include <cstdint>
#include <span>
#include <vector>

#include "tss/numeric.h"
#include "tss/permutation.h"

namespace tss {

// Positional backtracking matcher for one classical pattern. Sequences passed
// in need only hold distinct integers; they are compared by relative order,
// so prefixes of permutations can be matched without standardizing.
//
// The matcher assigns pattern positions left to right. Each new position is
// bounded by the values already matched for its nearest smaller and nearest
// larger pattern entries, and by how many sequence positions remain.
class PatternMatcher {
 public:
  explicit PatternMatcher(Permutation pattern);

  const Permutation& pattern() const { return pattern_; }

  bool Matches(std::span<const int> seq) const;
  BigInt Count(std::span<const int> seq) const;

  // Occurrences whose last pattern entry sits at the last sequence position.
  // Counting stops once the total exceeds `limit`.
  bool MatchesEndingAtLast(std::span<const int> seq) const;
  std::uint64_t CountEndingAtLast(std::span<const int> seq,
                                  std::uint64_t limit) const;

 private:
  struct Bounds {
    int below = -1;  // earlier pattern position holding the next smaller value
    int above = -1;  // earlier pattern position holding the next larger value
  };

  class Search;

  Permutation pattern_;
  std::vector<Bounds> bounds_;
  // For anchored searches: whether pattern position j must be below the
  // final entry's value.
  std::vector<bool> below_last_;
};

bool Contains(const Permutation& pi, const Permutation& tau);
BigInt CountOccurrences(const Permutation& pi, const Permutation& tau);

}  // namespace tss

#endif  // TSS_PATTERN_H_
