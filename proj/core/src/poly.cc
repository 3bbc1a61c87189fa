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
#include "tss/poly.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "absl/strings/str_cat.h"

namespace tss {

Poly::Poly(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  Trim();
}

Poly::Poly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  Trim();
}

Poly::Poly(const Rational& c) : coeffs_{c} { Trim(); }

Poly::Poly(int c) : coeffs_{Rational(c)} { Trim(); }

Poly Poly::X() { return Poly{0, 1}; }

Poly Poly::Monomial(const Rational& c, int degree) {
  std::vector<Rational> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return Poly(std::move(coeffs));
}

Rational Poly::operator[](int exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coeffs_[exponent];
}

void Poly::Trim() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly& Poly::operator+=(const Poly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), 0);
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  Trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) { return *this += -other; }

Poly& Poly::operator*=(const Poly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> product(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      product[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  coeffs_ = std::move(product);
  Trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  for (auto& v : coeffs_) v *= c;
  Trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& v : out.coeffs_) v = -v;
  return out;
}

bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

Poly Poly::Pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  Poly result(1);
  Poly base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Poly::ToString() const {
  if (is_zero()) return "0";
  std::string out;
  for (int e = 0; e <= degree(); ++e) {
    Rational c = coeffs_[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1;
    if (e == 0 || !unit) {
      out += ToDecimal(c);
      if (e > 0) out += "*";
    }
    if (e == 1) out += "x";
    if (e > 1) absl::StrAppend(&out, "x^", e);
  }
  return out;
}

}  // namespace tss
