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
#include "tss/families.h"
#include "tss/rational_gf.h"

namespace tss {
namespace {

void BM_SeriesP132(benchmark::State& state) {
  const RationalGF f = *FamilyGf({FamilyKind::kP132, 0, {}});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        SeriesCoefficients(f, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_SeriesP132)->Arg(50)->Arg(200)->Arg(800);

void BM_GfForTau(benchmark::State& state) {
  const Permutation tau = Permutation::Of({5, 6, 1, 2, 3, 4});
  for (auto _ : state) benchmark::DoNotOptimize(GfForTau(tau));
}
BENCHMARK(BM_GfForTau);

void BM_ExpandIncreasingWeights(benchmark::State& state) {
  const Substitution sub = {{2, Rational(1, 2)}, {3, Rational(2, 3)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ExpandIncreasingWeights(sub, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ExpandIncreasingWeights)->Arg(8)->Arg(12);

}  // namespace
}  // namespace tss
