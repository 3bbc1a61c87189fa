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
#ifndef TSS_SORTABILITY_H_
#define TSS_SORTABILITY_H_

#include <span>
#include <vector>

#include "tss/permutation.h"

namespace tss {

struct SortEvent {
  enum class Kind { kPush, kPop };
  Kind kind;
  int value;
  friend bool operator==(const SortEvent&, const SortEvent&) = default;
};

struct SortTrace {
  std::vector<SortEvent> steps;
  Permutation output;
};

// One greedy pass through a stack that never holds a larger entry above a
// smaller one: before pushing the next input, pop while the top is smaller.
Permutation StackSort(const Permutation& pi);
SortTrace StackSortTraced(const Permutation& pi);

// Two passes of StackSort reach the identity.
bool IsTwoStackSortable(const Permutation& pi);

// Pattern characterization: avoids 2341, and every 3241 occurrence has an
// entry between its '3' and '2' that exceeds its '4' (so it lies inside a
// 35241). Operates on any sequence of distinct integers.
bool IsTwoStackSortableWest(std::span<const int> seq);
inline bool IsTwoStackSortableWest(const Permutation& pi) {
  return IsTwoStackSortableWest(pi.values());
}

}  // namespace tss

#endif  // TSS_SORTABILITY_H_
