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
#include "tss/pattern.h"

#include <limits>
#include <utility>

namespace tss {

// One search over one sequence. `limit` caps the number of occurrences
// visited; Matches() uses a limit of 1.
class PatternMatcher::Search {
 public:
  Search(const PatternMatcher& m, std::span<const int> seq, bool anchored,
         std::uint64_t limit)
      : m_(m),
        seq_(seq),
        k_(m.pattern_.size()),
        anchored_(anchored),
        limit_(limit),
        chosen_(m.pattern_.size()) {}

  void Run() {
    const int n = static_cast<int>(seq_.size());
    if (k_ == 0) {
      // The empty pattern occurs once in every sequence, but never "ending at
      // the last position".
      if (!anchored_) Bump();
      return;
    }
    if (k_ > n) return;
    if (anchored_) {
      last_value_ = seq_[n - 1];
      end_ = n - 1;  // positions 0..k-2 must lie strictly before the anchor
      if (k_ == 1) {
        Bump();
        return;
      }
    } else {
      end_ = n;
    }
    Extend(0, 0);
  }

  BigInt total() const { return BigInt(overflow_) * kFlush + count_; }
  std::uint64_t small_total() const { return count_; }

 private:
  static constexpr std::uint64_t kFlush = std::uint64_t{1} << 62;

  void Bump() {
    if (++count_ == kFlush) {
      count_ = 0;
      ++overflow_;
    }
    ++visited_;
  }

  bool Done() const { return visited_ >= limit_; }

  bool Fits(int j, int value) const {
    const Bounds& b = m_.bounds_[j];
    if (b.below >= 0 && value < chosen_[b.below]) return false;
    if (b.above >= 0 && value > chosen_[b.above]) return false;
    if (anchored_) {
      if (m_.below_last_[j] != (value < last_value_)) return false;
    }
    return true;
  }

  void Extend(int j, int start) {
    const int last_free = anchored_ ? k_ - 1 : k_;
    if (j == last_free) {
      if (!anchored_ || Fits(k_ - 1, last_value_)) Bump();
      return;
    }
    // Leave room for the remaining k_ - j - 1 free positions.
    const int stop = end_ - (last_free - j - 1);
    for (int i = start; i < stop && !Done(); ++i) {
      const int v = seq_[i];
      if (!Fits(j, v)) continue;
      chosen_[j] = v;
      Extend(j + 1, i + 1);
    }
  }

  const PatternMatcher& m_;
  std::span<const int> seq_;
  const int k_;
  const bool anchored_;
  const std::uint64_t limit_;
  std::vector<int> chosen_;
  int last_value_ = 0;
  int end_ = 0;
  std::uint64_t count_ = 0;
  std::uint64_t overflow_ = 0;
  std::uint64_t visited_ = 0;
};

PatternMatcher::PatternMatcher(Permutation pattern)
    : pattern_(std::move(pattern)),
      bounds_(pattern_.size()),
      below_last_(pattern_.size(), false) {
  const int k = pattern_.size();
  for (int j = 0; j < k; ++j) {
    int best_below = 0;
    int best_above = k + 1;
    for (int i = 0; i < j; ++i) {
      const int v = pattern_[i];
      if (v < pattern_[j] && v > best_below) {
        best_below = v;
        bounds_[j].below = i;
      }
      if (v > pattern_[j] && v < best_above) {
        best_above = v;
        bounds_[j].above = i;
      }
    }
    if (k > 0) below_last_[j] = pattern_[j] < pattern_[k - 1];
  }
}

bool PatternMatcher::Matches(std::span<const int> seq) const {
  Search s(*this, seq, /*anchored=*/false, /*limit=*/1);
  s.Run();
  return s.small_total() > 0;
}

BigInt PatternMatcher::Count(std::span<const int> seq) const {
  Search s(*this, seq, /*anchored=*/false,
           std::numeric_limits<std::uint64_t>::max());
  s.Run();
  return s.total();
}

bool PatternMatcher::MatchesEndingAtLast(std::span<const int> seq) const {
  Search s(*this, seq, /*anchored=*/true, /*limit=*/1);
  s.Run();
  return s.small_total() > 0;
}

std::uint64_t PatternMatcher::CountEndingAtLast(std::span<const int> seq,
                                                std::uint64_t limit) const {
  const std::uint64_t cap =
      limit == std::numeric_limits<std::uint64_t>::max() ? limit : limit + 1;
  Search s(*this, seq, /*anchored=*/true, cap);
  s.Run();
  return s.small_total();
}

bool Contains(const Permutation& pi, const Permutation& tau) {
  return PatternMatcher(tau).Matches(pi.values());
}

BigInt CountOccurrences(const Permutation& pi, const Permutation& tau) {
  return PatternMatcher(tau).Count(pi.values());
}

}  // namespace tss
