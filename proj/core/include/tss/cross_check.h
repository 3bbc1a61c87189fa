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
#ifndef TSS_CROSS_CHECK_H_
#define TSS_CROSS_CHECK_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "tss/families.h"
#include "tss/numeric.h"
#include "tss/oracle.h"

namespace tss {

// One value that disagrees with the oracle. `source` is "GF" or a closed
// form name; `citation` restates the claimed formula.
struct DiscrepancyEntry {
  std::string family;
  std::string source;
  std::string citation;
  int n = 0;
  Rational claimed;
  BigInt oracle;
  bool non_integral = false;
};

struct FamilyVerdict {
  std::string family;
  int values_checked = 0;
  int discrepancies = 0;
  bool agrees() const { return discrepancies == 0; }
};

struct DiscrepancyReport {
  int max_n = 0;
  std::vector<FamilyVerdict> verdicts;   // scope order
  std::vector<DiscrepancyEntry> entries; // by family, then n, then source

  bool empty() const { return entries.empty(); }
  std::string ToJson() const;
  std::string ToText() const;
};

// Compares oracle counts, generating-function coefficients and every
// applicable closed form for n = 0..max_n. The oracle is authoritative;
// disagreements are recorded, not raised.
absl::StatusOr<DiscrepancyReport> CrossCheck(const std::vector<FamilyId>& scope,
                                             int max_n, const Oracle& oracle);

}  // namespace tss

#endif  // TSS_CROSS_CHECK_H_
