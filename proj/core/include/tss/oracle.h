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
#ifndef TSS_ORACLE_H_
#define TSS_ORACLE_H_

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "tss/numeric.h"
#include "tss/permutation.h"
#include "tss/statistics.h"

namespace tss {

struct ExactRequirement {
  Permutation pattern;
  int count = 0;
  friend bool operator==(const ExactRequirement&,
                         const ExactRequirement&) = default;
};

// A permutation satisfies the set iff it avoids every pattern in `avoid`,
// has exactly `count` occurrences of each exact requirement, and, when
// flagged, is two-stack sortable.
struct ConstraintSet {
  std::vector<Permutation> avoid;
  std::vector<ExactRequirement> exact;
  bool two_stack_sortable = false;

  // Stable text form, e.g. "avoid{132,2341} exact{132:1} tss".
  std::string ToString() const;
  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

// "132:1" -> {132, 1}.
absl::StatusOr<ExactRequirement> ParseExactRequirement(absl::string_view text);

bool Satisfies(const Permutation& pi, const ConstraintSet& c);

struct OracleOptions {
  int max_n = 11;
  int threads = 1;
};

// Ceiling on OracleOptions::max_n, whatever the configuration says.
inline constexpr int kOracleCeiling = 14;

struct StatisticSplit {
  Statistic statistic;
  // by_n[n] maps statistic value -> number of members with that value.
  std::vector<std::map<BigInt, BigInt>> by_n;
};

struct CountTable {
  int n_max = 0;
  std::vector<BigInt> values;  // values[n] for n = 0..n_max
  ConstraintSet constraint;
  std::optional<StatisticSplit> split;
};

// Exhaustive search over S_n under a ConstraintSet. Candidates are built
// left to right in increasing value order, so members come out in
// lexicographic order. Prefixes are pruned when they already contain an
// avoided pattern (2341 counts as avoided under the sortability flag) or
// already exceed an exact occurrence count; sortability itself is decided on
// complete permutations. Work is split by first entry across threads and
// merged in first-entry order, so output does not depend on thread count.
class Oracle {
 public:
  explicit Oracle(OracleOptions options = {});

  const OracleOptions& options() const { return options_; }

  absl::Status Enumerate(
      int n, const ConstraintSet& c,
      const std::function<void(const Permutation&)>& sink) const;
  absl::StatusOr<std::vector<Permutation>> EnumerateAll(
      int n, const ConstraintSet& c) const;
  absl::StatusOr<BigInt> Count(int n, const ConstraintSet& c) const;
  absl::StatusOr<CountTable> Tabulate(
      const ConstraintSet& c, int n_max,
      const std::optional<Statistic>& split = std::nullopt) const;

 private:
  absl::Status CheckRange(int n) const;

  OracleOptions options_;
};

}  // namespace tss

#endif  // TSS_ORACLE_H_
