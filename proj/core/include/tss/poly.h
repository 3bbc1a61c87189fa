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
#ifndef TSS_POLY_H_
#define TSS_POLY_H_

#include <initializer_list>
#include <string>
#include <vector>

#include "tss/numeric.h"

namespace tss {

// Dense univariate polynomial with exact rational coefficients; index is the
// exponent. Trailing zeros are trimmed, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rational> coefficients);
  explicit Poly(std::vector<Rational> coefficients);
  // Constant polynomial.
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(int c);              // NOLINT(google-explicit-constructor)

  static Poly X();
  static Poly Monomial(const Rational& c, int degree);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Zero beyond the degree.
  Rational operator[](int exponent) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly Pow(int exponent) const;

  // "1 - x - x^2".
  std::string ToString() const;

 private:
  void Trim();

  std::vector<Rational> coeffs_;
};

}  // namespace tss

#endif  // TSS_POLY_H_
