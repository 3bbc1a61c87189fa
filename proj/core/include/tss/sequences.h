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
#ifndef TSS_SEQUENCES_H_
#define TSS_SEQUENCES_H_

#include "tss/numeric.h"

namespace tss {

// F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}. Requires n >= 0.
BigInt Fibonacci(int n);
// p_0 = 0, p_1 = 1, p_n = 2 p_{n-1} + p_{n-2}. Requires n >= 0.
BigInt Pell(int n);

BigInt Factorial(int n);
// Zero when k < 0 or k > n.
BigInt Binomial(int n, int k);

// Number of two-stack sortable permutations of length n:
// 2 (3n)! / ((n+1)! (2n+1)!).
BigInt WestCount(int n);

}  // namespace tss

#endif  // TSS_SEQUENCES_H_
