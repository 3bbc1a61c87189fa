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
#include "tss/permutation.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <iostream>
#include <numeric>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"

namespace tss {

absl::StatusOr<Permutation> Permutation::FromValues(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = values[i];
    if (v < 1 || v > n) {
      return absl::InvalidArgumentError(
          absl::StrCat("value ", v, " at position ", i + 1,
                       " is outside 1..", n, " (gap in the value set)"));
    }
    if (seen[v]) {
      return absl::InvalidArgumentError(absl::StrCat(
          "duplicate value ", v, " at position ", i + 1));
    }
    seen[v] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::Of(std::initializer_list<int> values) {
  auto p = FromValues(std::vector<int>(values));
  if (!p.ok()) {
    std::cerr << "Permutation::Of: " << p.status() << "\n";
    std::abort();
  }
  return *std::move(p);
}

Permutation Permutation::Identity(int n) {
  std::vector<int> values(n);
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

Permutation Permutation::Decreasing(int n) {
  std::vector<int> values(n);
  for (int i = 0; i < n; ++i) values[i] = n - i;
  return Permutation(std::move(values));
}

std::string Permutation::ToString() const {
  if (size() <= 9) {
    std::string out;
    for (int v : values_) out.push_back(static_cast<char>('0' + v));
    return out;
  }
  return absl::StrJoin(values_, ",");
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  return os << p.ToString();
}

absl::StatusOr<Permutation> ParsePermutation(absl::string_view text) {
  auto is_sep = [](char c) {
    return c == ',' || std::isspace(static_cast<unsigned char>(c));
  };
  const bool has_separator = std::any_of(text.begin(), text.end(), is_sep);

  std::vector<int> values;
  if (!has_separator) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char c = text[i];
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        return absl::InvalidArgumentError(absl::StrCat(
            "non-integer token '", std::string(1, c), "' at position ", i + 1));
      }
      values.push_back(c - '0');
    }
  } else {
    std::size_t pos = 0;
    int token_index = 0;
    while (pos < text.size()) {
      while (pos < text.size() && is_sep(text[pos])) ++pos;
      if (pos >= text.size()) break;
      std::size_t end = pos;
      while (end < text.size() && !is_sep(text[end])) ++end;
      absl::string_view token = text.substr(pos, end - pos);
      ++token_index;
      int value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        return absl::InvalidArgumentError(
            absl::StrCat("non-integer token '", token, "' at position ",
                         token_index));
      }
      values.push_back(value);
      pos = end;
    }
  }
  return Permutation::FromValues(std::move(values));
}

Permutation Inverse(const Permutation& p) {
  std::vector<int> inverse(p.size());
  for (int i = 0; i < p.size(); ++i) inverse[p[i] - 1] = i + 1;
  return *Permutation::FromValues(std::move(inverse));
}

Permutation Standardize(std::span<const int> values) {
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> ranks(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    ranks[order[r]] = static_cast<int>(r) + 1;
  }
  return *Permutation::FromValues(std::move(ranks));
}

Permutation IncreasingPattern(int d) { return Permutation::Identity(d); }

Permutation DecreasingPattern(int d) { return Permutation::Decreasing(d); }

Permutation LeadingMaxPattern(int d) {
  std::vector<int> values;
  if (d >= 1) values.push_back(d);
  for (int v = 1; v < d; ++v) values.push_back(v);
  return *Permutation::FromValues(std::move(values));
}

}  // namespace tss
