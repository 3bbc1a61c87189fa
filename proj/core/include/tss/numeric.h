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

#ifndef TSS_NUMERIC_H_
#define TSS_NUMERIC_H_

#include <gmpxx.h>

#include <string>

namespace tss {

// Unbounded integer used for every count the library reports.
using BigInt = mpz_class;
// Exact rational used for series coefficients and closed-form values.
using Rational = mpq_class;

// Decimal rendering; rationals print as "p/q", or "p" when integral.
std::string ToDecimal(const BigInt& value);
std::string ToDecimal(const Rational& value);

bool IsIntegral(const Rational& value);

// Exact power with the convention 0^0 = 1. Negative exponents invert.
Rational Power(const Rational& base, long exponent);

}  // namespace tss

#endif  // TSS_NUMERIC_H_
