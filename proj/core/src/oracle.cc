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
#include "tss/oracle.h"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <thread>
#include <utility>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "tss/pattern.h"
#include "tss/sortability.h"

namespace tss {
namespace {

const Permutation& Pattern2341() {
  static const Permutation* p = new Permutation(Permutation::Of({2, 3, 4, 1}));
  return *p;
}

// Depth-first search over permutations of {1..n} whose first entry is fixed.
class PrefixSearch {
 public:
  PrefixSearch(int n, const ConstraintSet& c) : n_(n), c_(c) {
    for (const auto& tau : c.avoid) avoid_.emplace_back(tau);
    if (c.two_stack_sortable) avoid_.emplace_back(Pattern2341());
    for (const auto& req : c.exact) {
      exact_.emplace_back(req.pattern);
      targets_.push_back(static_cast<std::uint64_t>(std::max(req.count, 0)));
    }
    prefix_.reserve(n);
    used_.assign(n + 1, false);
  }

  // Calls `emit` for every member starting with `first`.
  template <typename Emit>
  void Run(int first, Emit&& emit) {
    std::vector<std::uint64_t> counts(exact_.size(), 0);
    if (n_ == 0) {
      if (Complete(counts)) emit(prefix_);
      return;
    }
    Place(first, counts, emit);
  }

 private:
  template <typename Emit>
  void Place(int v, const std::vector<std::uint64_t>& parent_counts,
             Emit& emit) {
    prefix_.push_back(v);
    used_[v] = true;
    std::vector<std::uint64_t> counts = parent_counts;
    if (Admissible(counts)) {
      if (static_cast<int>(prefix_.size()) == n_) {
        if (Complete(counts)) emit(prefix_);
      } else {
        for (int next = 1; next <= n_; ++next) {
          if (!used_[next]) Place(next, counts, emit);
        }
      }
    }
    used_[v] = false;
    prefix_.pop_back();
  }

  // Checks only occurrences that use the newest entry; older ones were
  // checked when their own last entry was placed.
  bool Admissible(std::vector<std::uint64_t>& counts) const {
    for (const auto& m : avoid_) {
      if (m.MatchesEndingAtLast(prefix_)) return false;
    }
    for (std::size_t i = 0; i < exact_.size(); ++i) {
      const std::uint64_t room = targets_[i] - counts[i];
      counts[i] += exact_[i].CountEndingAtLast(prefix_, room);
      if (counts[i] > targets_[i]) return false;
    }
    return true;
  }

  bool Complete(const std::vector<std::uint64_t>& counts) const {
    if (c_.two_stack_sortable && !IsTwoStackSortableWest(prefix_)) {
      return false;
    }
    for (std::size_t i = 0; i < exact_.size(); ++i) {
      if (counts[i] != targets_[i]) return false;
    }
    return true;
  }

  const int n_;
  const ConstraintSet& c_;
  std::vector<PatternMatcher> avoid_;
  std::vector<PatternMatcher> exact_;
  std::vector<std::uint64_t> targets_;
  std::vector<int> prefix_;
  std::vector<bool> used_;
};

// Runs `task(first)` for first = 1..n (or once with first = 0 when n = 0)
// on up to `threads` workers.
template <typename Task>
void ForEachFirst(int n, int threads, Task&& task) {
  const int tasks = std::max(n, 1);
  const int workers = std::clamp(threads, 1, tasks);
  if (workers == 1) {
    for (int t = 0; t < tasks; ++t) task(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int t = next++; t < tasks; t = next++) task(t);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

std::string ConstraintSet::ToString() const {
  std::vector<std::string> parts;
  if (!avoid.empty()) {
    parts.push_back(absl::StrCat(
        "avoid{",
        absl::StrJoin(avoid, ",",
                      [](std::string* out, const Permutation& p) {
                        out->append(p.ToString());
                      }),
        "}"));
  }
  if (!exact.empty()) {
    parts.push_back(absl::StrCat(
        "exact{",
        absl::StrJoin(exact, ",",
                      [](std::string* out, const ExactRequirement& r) {
                        absl::StrAppend(out, r.pattern.ToString(), ":",
                                        r.count);
                      }),
        "}"));
  }
  if (two_stack_sortable) parts.push_back("tss");
  if (parts.empty()) return "all";
  return absl::StrJoin(parts, " ");
}

absl::StatusOr<ExactRequirement> ParseExactRequirement(absl::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == absl::string_view::npos) {
    return absl::InvalidArgumentError(absl::StrCat(
        "exact requirement '", text, "' must look like PATTERN:COUNT"));
  }
  auto pattern = ParsePermutation(text.substr(0, colon));
  if (!pattern.ok()) return pattern.status();
  int count = 0;
  if (!absl::SimpleAtoi(text.substr(colon + 1), &count) || count < 0) {
    return absl::InvalidArgumentError(
        absl::StrCat("bad occurrence count in '", text, "'"));
  }
  return ExactRequirement{*std::move(pattern), count};
}

bool Satisfies(const Permutation& pi, const ConstraintSet& c) {
  for (const auto& tau : c.avoid) {
    if (Contains(pi, tau)) return false;
  }
  if (c.two_stack_sortable && !IsTwoStackSortableWest(pi)) return false;
  for (const auto& req : c.exact) {
    if (CountOccurrences(pi, req.pattern) != req.count) return false;
  }
  return true;
}

Oracle::Oracle(OracleOptions options) : options_(options) {
  options_.max_n = std::clamp(options_.max_n, 0, kOracleCeiling);
  options_.threads = std::max(options_.threads, 1);
}

absl::Status Oracle::CheckRange(int n) const {
  if (n < 0) {
    return absl::InvalidArgumentError(absl::StrCat("n must be >= 0, got ", n));
  }
  if (n > options_.max_n) {
    return absl::OutOfRangeError(absl::StrCat(
        "n = ", n, " exceeds the oracle cap of ", options_.max_n,
        " (", n, "! candidates); raise the cap (at most ", kOracleCeiling,
        ") or lower n"));
  }
  return absl::OkStatus();
}

absl::Status Oracle::Enumerate(
    int n, const ConstraintSet& c,
    const std::function<void(const Permutation&)>& sink) const {
  if (auto s = CheckRange(n); !s.ok()) return s;
  const int tasks = std::max(n, 1);
  std::vector<std::vector<std::vector<int>>> buckets(tasks);
  ForEachFirst(n, options_.threads, [&](int t) {
    PrefixSearch search(n, c);
    search.Run(t + 1, [&](const std::vector<int>& values) {
      buckets[t].push_back(values);
    });
  });
  for (auto& bucket : buckets) {
    for (auto& values : bucket) {
      sink(*Permutation::FromValues(std::move(values)));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Permutation>> Oracle::EnumerateAll(
    int n, const ConstraintSet& c) const {
  std::vector<Permutation> out;
  auto s = Enumerate(n, c, [&](const Permutation& p) { out.push_back(p); });
  if (!s.ok()) return s;
  return out;
}

absl::StatusOr<BigInt> Oracle::Count(int n, const ConstraintSet& c) const {
  if (auto s = CheckRange(n); !s.ok()) return s;
  const int tasks = std::max(n, 1);
  std::vector<std::uint64_t> counts(tasks, 0);
  ForEachFirst(n, options_.threads, [&](int t) {
    PrefixSearch search(n, c);
    search.Run(t + 1, [&](const std::vector<int>&) { ++counts[t]; });
  });
  BigInt total = 0;
  for (std::uint64_t v : counts) {
    total += static_cast<unsigned long>(v);
  }
  return total;
}

absl::StatusOr<CountTable> Oracle::Tabulate(
    const ConstraintSet& c, int n_max,
    const std::optional<Statistic>& split) const {
  if (auto s = CheckRange(n_max); !s.ok()) return s;
  CountTable table;
  table.n_max = n_max;
  table.constraint = c;
  if (split.has_value()) table.split = StatisticSplit{*split, {}};
  for (int n = 0; n <= n_max; ++n) {
    if (!split.has_value()) {
      auto count = Count(n, c);
      if (!count.ok()) return count.status();
      table.values.push_back(*count);
      continue;
    }
    BigInt total = 0;
    std::map<BigInt, BigInt> cells;
    auto s = Enumerate(n, c, [&](const Permutation& p) {
      ++total;
      ++cells[Evaluate(p, *split)];
    });
    if (!s.ok()) return s;
    table.values.push_back(total);
    table.split->by_n.push_back(std::move(cells));
  }
  return table;
}

}  // namespace tss
