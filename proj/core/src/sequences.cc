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
#include "tss/sequences.h"

#include <stdexcept>
#include <string>

namespace tss {
namespace {

void RequireNonNegative(int n, const char* what) {
  if (n < 0) {
    throw std::out_of_range(std::string(what) + " index must be >= 0, got " +
                            std::to_string(n));
  }
}

}  // namespace

BigInt Fibonacci(int n) {
  RequireNonNegative(n, "Fibonacci");
  BigInt result;
  mpz_fib_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt Pell(int n) {
  RequireNonNegative(n, "Pell");
  BigInt prev = 0;
  BigInt cur = 1;
  if (n == 0) return prev;
  for (int i = 1; i < n; ++i) {
    BigInt next = 2 * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt Factorial(int n) {
  RequireNonNegative(n, "Factorial");
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

BigInt Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return result;
}

BigInt WestCount(int n) {
  RequireNonNegative(n, "WestCount");
  const BigInt numerator = 2 * Factorial(3 * n);
  const BigInt denominator = Factorial(n + 1) * Factorial(2 * n + 1);
  return numerator / denominator;
}

}  // namespace tss
