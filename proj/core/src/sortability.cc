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
#include "tss/sortability.h"

#include <algorithm>
#include <climits>

namespace tss {
namespace {

template <typename OnEvent>
std::vector<int> RunStack(std::span<const int> input, OnEvent&& on_event) {
  std::vector<int> stack;
  std::vector<int> output;
  output.reserve(input.size());
  for (int v : input) {
    while (!stack.empty() && stack.back() < v) {
      on_event(SortEvent{SortEvent::Kind::kPop, stack.back()});
      output.push_back(stack.back());
      stack.pop_back();
    }
    on_event(SortEvent{SortEvent::Kind::kPush, v});
    stack.push_back(v);
  }
  while (!stack.empty()) {
    on_event(SortEvent{SortEvent::Kind::kPop, stack.back()});
    output.push_back(stack.back());
    stack.pop_back();
  }
  return output;
}

}  // namespace

Permutation StackSort(const Permutation& pi) {
  return *Permutation::FromValues(RunStack(pi.values(), [](SortEvent) {}));
}

SortTrace StackSortTraced(const Permutation& pi) {
  SortTrace trace;
  trace.steps.reserve(2 * pi.size());
  trace.output = *Permutation::FromValues(RunStack(
      pi.values(), [&](SortEvent e) { trace.steps.push_back(e); }));
  return trace;
}

bool IsTwoStackSortable(const Permutation& pi) {
  const Permutation twice = StackSort(StackSort(pi));
  return twice == Permutation::Identity(pi.size());
}

bool IsTwoStackSortableWest(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size());
  if (n < 4) return true;
  // suffix_min[i] = min(seq[i..n-1]).
  std::vector<int> suffix_min(n + 1, INT_MAX);
  for (int i = n - 1; i >= 0; --i) {
    suffix_min[i] = std::min(seq[i], suffix_min[i + 1]);
  }
  // Fix the '2' at k and the '4' at l; the '1' exists iff some later entry
  // is below the candidate it must undercut.
  for (int k = 1; k < n - 2; ++k) {
    for (int l = k + 1; l < n - 1; ++l) {
      const int two = seq[k];
      const int four = seq[l];
      if (four < two) continue;
      const int one = suffix_min[l + 1];
      if (one > two) continue;
      // 2341: an entry before k that is above the '1' and below the '2'.
      // 3241: an entry before k between the '2' and the '4' with nothing
      // above the '4' between it and k. Scanning leftwards, the first entry
      // above the '4' shields every 3241 further left.
      bool shielded = false;
      for (int i = k - 1; i >= 0; --i) {
        const int v = seq[i];
        if (v > one && v < two) return false;
        if (v > four) {
          shielded = true;
        } else if (!shielded && v > two) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace tss
