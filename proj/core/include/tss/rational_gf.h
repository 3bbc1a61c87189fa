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
#ifndef TSS_RATIONAL_GF_H_
#define TSS_RATIONAL_GF_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "tss/numeric.h"
#include "tss/poly.h"

namespace tss {

// Rational function N(x)/D(x) with D(0) != 0, kept with D(0) == 1. No
// polynomial GCD is taken; equality is decided by cross-multiplication.
class RationalGF {
 public:
  // The constant 0.
  RationalGF() : den_(1) {}
  RationalGF(Poly numerator);  // NOLINT(google-explicit-constructor)
  RationalGF(int c) : RationalGF(Poly(c)) {}  // NOLINT

  // Fails when the denominator vanishes at x = 0.
  static absl::StatusOr<RationalGF> Make(Poly numerator, Poly denominator);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalGF& operator+=(const RationalGF& other);
  RationalGF& operator-=(const RationalGF& other);
  RationalGF& operator*=(const RationalGF& other);
  RationalGF operator-() const;

  friend RationalGF operator+(RationalGF a, const RationalGF& b) {
    return a += b;
  }
  friend RationalGF operator-(RationalGF a, const RationalGF& b) {
    return a -= b;
  }
  friend RationalGF operator*(RationalGF a, const RationalGF& b) {
    return a *= b;
  }
  // Equal as rational functions.
  friend bool operator==(const RationalGF& a, const RationalGF& b);

  // "(num)/(den)".
  std::string ToString() const;

 private:
  RationalGF(Poly numerator, Poly denominator);
  void Normalize();

  Poly num_;
  Poly den_;
};

enum class GfOp { kAdd, kSub, kMul, kDiv };

// Exact field arithmetic. Division fails for a zero divisor, and for a
// quotient whose denominator would vanish at x = 0 (no power series).
absl::StatusOr<RationalGF> Arith(const RationalGF& a, const RationalGF& b,
                                 GfOp op);

// Coefficients of x^0 .. x^max_degree, from the recurrence
// D(0) c_n = N_n - sum_{j>=1} D_j c_{n-j}.
std::vector<Rational> SeriesCoefficients(const RationalGF& f, int max_degree);

}  // namespace tss

#endif  // TSS_RATIONAL_GF_H_
