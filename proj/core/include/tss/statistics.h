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
#ifndef TSS_STATISTICS_H_
#define TSS_STATISTICS_H_

#include <span>
#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "tss/numeric.h"
#include "tss/permutation.h"

namespace tss {

// Number of increasing subsequences of length d, i.e. occurrences of 12...d.
// Dynamic program over (end position, length); O(n^2 d).
BigInt CountIncreasing(std::span<const int> seq, int d);

// Number of right-to-left maxima: entries larger than everything after them.
int RightToLeftMaxima(std::span<const int> seq);

enum class StatisticKind {
  kOccurrences,  // occurrences of `pattern`
  kIncreasing,   // occurrences of 12...d
  kRightToLeftMaxima,
  kLength,
};

struct Statistic {
  StatisticKind kind = StatisticKind::kLength;
  Permutation pattern;  // kOccurrences only
  int d = 1;            // kIncreasing only

  static Statistic Occurrences(Permutation tau);
  static Statistic Increasing(int d);
  static Statistic RightToLeftMaxima();
  static Statistic Length();

  // "occ(132)", "inc(3)", "rmax", "length".
  std::string Name() const;
  friend bool operator==(const Statistic&, const Statistic&) = default;
};

absl::StatusOr<Statistic> ParseStatistic(absl::string_view text);

BigInt Evaluate(const Permutation& pi, const Statistic& s);

}  // namespace tss

#endif  // TSS_STATISTICS_H_
