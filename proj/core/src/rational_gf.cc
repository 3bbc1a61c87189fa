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
#include "tss/rational_gf.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace tss {

RationalGF::RationalGF(Poly numerator)
    : num_(std::move(numerator)), den_(1) {}

RationalGF::RationalGF(Poly numerator, Poly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  Normalize();
}

absl::StatusOr<RationalGF> RationalGF::Make(Poly numerator, Poly denominator) {
  if (denominator[0] == 0) {
    return absl::InvalidArgumentError(absl::StrCat(
        "denominator ", denominator.ToString(),
        " vanishes at x = 0; no power series expansion"));
  }
  return RationalGF(std::move(numerator), std::move(denominator));
}

void RationalGF::Normalize() {
  const Rational lead = den_[0];
  if (lead != 1) {
    const Rational scale = Rational(1) / lead;
    num_ *= scale;
    den_ *= scale;
  }
  if (num_.is_zero()) den_ = Poly(1);
}

RationalGF& RationalGF::operator+=(const RationalGF& other) {
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ *= other.den_;
  }
  Normalize();
  return *this;
}

RationalGF& RationalGF::operator-=(const RationalGF& other) {
  return *this += -other;
}

RationalGF& RationalGF::operator*=(const RationalGF& other) {
  num_ *= other.num_;
  den_ *= other.den_;
  Normalize();
  return *this;
}

RationalGF RationalGF::operator-() const {
  RationalGF out = *this;
  out.num_ = -out.num_;
  return out;
}

bool operator==(const RationalGF& a, const RationalGF& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RationalGF::ToString() const {
  if (den_ == Poly(1)) return absl::StrCat("(", num_.ToString(), ")");
  return absl::StrCat("(", num_.ToString(), ")/(", den_.ToString(), ")");
}

absl::StatusOr<RationalGF> Arith(const RationalGF& a, const RationalGF& b,
                                 GfOp op) {
  switch (op) {
    case GfOp::kAdd:
      return a + b;
    case GfOp::kSub:
      return a - b;
    case GfOp::kMul:
      return a * b;
    case GfOp::kDiv:
      break;
  }
  if (b.is_zero()) {
    return absl::InvalidArgumentError("division by the zero generating function");
  }
  // a / b = (Na * Db) / (Da * Nb); a factor x^k common to Na*Db and Nb is
  // cancelled so that the quotient keeps a nonzero constant term when it has
  // a power series at all.
  Poly num = a.numerator() * b.denominator();
  Poly den = a.denominator() * b.numerator();
  while (!den.is_zero() && den[0] == 0 && !num.is_zero() && num[0] == 0) {
    std::vector<Rational> n(num.coefficients().begin() + 1,
                            num.coefficients().end());
    std::vector<Rational> d(den.coefficients().begin() + 1,
                            den.coefficients().end());
    num = Poly(std::move(n));
    den = Poly(std::move(d));
  }
  if (num.is_zero()) return RationalGF();
  return RationalGF::Make(std::move(num), std::move(den));
}

std::vector<Rational> SeriesCoefficients(const RationalGF& f, int max_degree) {
  std::vector<Rational> out;
  if (max_degree < 0) return out;
  out.reserve(max_degree + 1);
  const Poly& num = f.numerator();
  const Poly& den = f.denominator();
  const Rational inv_lead = Rational(1) / den[0];
  for (int n = 0; n <= max_degree; ++n) {
    Rational c = num[n];
    const int reach = std::min(n, den.degree());
    for (int j = 1; j <= reach; ++j) c -= den[j] * out[n - j];
    c *= inv_lead;
    c.canonicalize();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace tss
