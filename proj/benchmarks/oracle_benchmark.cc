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
#include "benchmark/benchmark.h"
#include "tss/oracle.h"
#include "tss/permutation.h"

namespace tss {
namespace {

void BM_CountSortable(benchmark::State& state) {
  const Oracle oracle({.max_n = 11, .threads = 1});
  ConstraintSet c;
  c.two_stack_sortable = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.Count(static_cast<int>(state.range(0)), c));
  }
}
BENCHMARK(BM_CountSortable)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_CountP132(benchmark::State& state) {
  const Oracle oracle({.max_n = 14, .threads = 1});
  ConstraintSet c;
  c.avoid = {Permutation::Of({1, 3, 2})};
  c.two_stack_sortable = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.Count(static_cast<int>(state.range(0)), c));
  }
}
BENCHMARK(BM_CountP132)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

void BM_CountQ(benchmark::State& state) {
  const Oracle oracle({.max_n = 11, .threads = 1});
  ConstraintSet c;
  c.exact = {{Permutation::Of({1, 3, 2}), 1}};
  c.two_stack_sortable = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.Count(static_cast<int>(state.range(0)), c));
  }
}
BENCHMARK(BM_CountQ)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace tss

BENCHMARK_MAIN();
