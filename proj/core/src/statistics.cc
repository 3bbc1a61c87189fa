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

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "tss/pattern.h"

namespace tss {

BigInt CountIncreasing(std::span<const int> seq, int d) {
  const int n = static_cast<int>(seq.size());
  if (d <= 0) return 1;
  if (d > n) return 0;
  // ending[i][l]: increasing subsequences of length l + 1 ending at i.
  std::vector<std::vector<BigInt>> ending(n, std::vector<BigInt>(d, 0));
  BigInt total = 0;
  for (int i = 0; i < n; ++i) {
    ending[i][0] = 1;
    for (int j = 0; j < i; ++j) {
      if (seq[j] >= seq[i]) continue;
      for (int l = 1; l < d; ++l) ending[i][l] += ending[j][l - 1];
    }
    total += ending[i][d - 1];
  }
  return total;
}

int RightToLeftMaxima(std::span<const int> seq) {
  int count = 0;
  int best = 0;
  bool first = true;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (first || *it > best) {
      best = *it;
      first = false;
      ++count;
    }
  }
  return count;
}

Statistic Statistic::Occurrences(Permutation tau) {
  Statistic s;
  s.kind = StatisticKind::kOccurrences;
  s.pattern = std::move(tau);
  return s;
}

Statistic Statistic::Increasing(int d) {
  Statistic s;
  s.kind = StatisticKind::kIncreasing;
  s.d = d;
  return s;
}

Statistic Statistic::RightToLeftMaxima() {
  Statistic s;
  s.kind = StatisticKind::kRightToLeftMaxima;
  return s;
}

Statistic Statistic::Length() { return Statistic(); }

std::string Statistic::Name() const {
  switch (kind) {
    case StatisticKind::kOccurrences:
      return absl::StrCat("occ(", pattern.ToString(), ")");
    case StatisticKind::kIncreasing:
      return absl::StrCat("inc(", d, ")");
    case StatisticKind::kRightToLeftMaxima:
      return "rmax";
    case StatisticKind::kLength:
      return "length";
  }
  return "";
}

absl::StatusOr<Statistic> ParseStatistic(absl::string_view text) {
  if (text == "rmax") return Statistic::RightToLeftMaxima();
  if (text == "length") return Statistic::Length();
  auto inner = [&](absl::string_view prefix) -> absl::string_view {
    return text.substr(prefix.size(), text.size() - prefix.size() - 1);
  };
  if (absl::StartsWith(text, "inc(") && absl::EndsWith(text, ")")) {
    int d = 0;
    if (!absl::SimpleAtoi(inner("inc("), &d) || d < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad statistic '", text, "': d must be >= 1"));
    }
    return Statistic::Increasing(d);
  }
  if (absl::StartsWith(text, "occ(") && absl::EndsWith(text, ")")) {
    auto tau = ParsePermutation(inner("occ("));
    if (!tau.ok()) return tau.status();
    return Statistic::Occurrences(*std::move(tau));
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown statistic '", text, "' (expected rmax, length, inc(d), occ(tau))"));
}

BigInt Evaluate(const Permutation& pi, const Statistic& s) {
  switch (s.kind) {
    case StatisticKind::kOccurrences:
      return CountOccurrences(pi, s.pattern);
    case StatisticKind::kIncreasing:
      return CountIncreasing(pi.values(), s.d);
    case StatisticKind::kRightToLeftMaxima:
      return RightToLeftMaxima(pi.values());
    case StatisticKind::kLength:
      return pi.size();
  }
  return 0;
}

}  // namespace tss
