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

#include "tss/numeric.h"

#include <stdexcept>

namespace tss {

std::string ToDecimal(const BigInt& value) { return value.get_str(10); }

std::string ToDecimal(const Rational& value) {
  mpq_class canonical = value;
  canonical.canonicalize();
  return canonical.get_str(10);
}

bool IsIntegral(const Rational& value) {
  mpq_class canonical = value;
  canonical.canonicalize();
  return canonical.get_den() == 1;
}

Rational Power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero to a negative power");
    return Power(Rational(1) / base, -exponent);
  }
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(),
             static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(),
             static_cast<unsigned long>(exponent));
  Rational result(num, den);
  result.canonicalize();
  return result;
}

}  // namespace tss
