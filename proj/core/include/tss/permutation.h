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
#ifndef TSS_PERMUTATION_H_
#define TSS_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"

namespace tss {

// A permutation of {1, ..., n} in one-line notation. Patterns use the same
// type. Values are 1-based; element access is 0-based like any container.
class Permutation {
 public:
  // The empty permutation.
  Permutation() = default;

  // Validates that `values` is a rearrangement of {1, ..., values.size()}.
  static absl::StatusOr<Permutation> FromValues(std::vector<int> values);

  // Aborts on invalid input; for literals in code and tests.
  static Permutation Of(std::initializer_list<int> values);

  static Permutation Identity(int n);
  static Permutation Decreasing(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  int operator[](std::size_t index) const { return values_[index]; }
  std::span<const int> values() const { return values_; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  // Contiguous digits when every value is a single digit ("214538769"),
  // comma-separated otherwise ("10,2,1,...").
  std::string ToString() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;
};

std::ostream& operator<<(std::ostream& os, const Permutation& p);

// Accepts comma/space separated integers ("3,1,2", "3 1 2") or a contiguous
// digit string ("312"). Errors name the offending token and its position.
absl::StatusOr<Permutation> ParsePermutation(absl::string_view text);

// Group-theoretic inverse: result[p[i] - 1] == i + 1.
Permutation Inverse(const Permutation& p);

// The permutation order-isomorphic to `values`, which must be distinct.
Permutation Standardize(std::span<const int> values);

// The 12...d and d...21 patterns, and d12...(d-1).
Permutation IncreasingPattern(int d);
Permutation DecreasingPattern(int d);
Permutation LeadingMaxPattern(int d);

}  // namespace tss

#endif  // TSS_PERMUTATION_H_
