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
#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "tss/pattern.h"
#include "tss/permutation.h"
#include "tss/statistics.h"

namespace tss {
namespace {

std::vector<int> RandomPermutation(int n, unsigned seed) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), std::mt19937(seed));
  return v;
}

void BM_CountOccurrences(benchmark::State& state) {
  const auto pi = RandomPermutation(static_cast<int>(state.range(0)), 1);
  const PatternMatcher matcher(Permutation::Of({1, 3, 2, 4}));
  for (auto _ : state) benchmark::DoNotOptimize(matcher.Count(pi));
}
BENCHMARK(BM_CountOccurrences)->Arg(10)->Arg(20)->Arg(40);

void BM_Contains(benchmark::State& state) {
  const auto pi = RandomPermutation(static_cast<int>(state.range(0)), 2);
  const PatternMatcher matcher(Permutation::Of({4, 3, 2, 1, 5}));
  for (auto _ : state) benchmark::DoNotOptimize(matcher.Matches(pi));
}
BENCHMARK(BM_Contains)->Arg(10)->Arg(20)->Arg(40);

void BM_CountIncreasing(benchmark::State& state) {
  const auto pi = RandomPermutation(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) benchmark::DoNotOptimize(CountIncreasing(pi, 4));
}
BENCHMARK(BM_CountIncreasing)->Arg(10)->Arg(40)->Arg(160);

}  // namespace
}  // namespace tss
