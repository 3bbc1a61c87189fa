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
#include "tss/families.h"

#include <algorithm>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "tss/pattern.h"
#include "tss/sequences.h"
#include "tss/sortability.h"

namespace tss {
namespace {

const Poly& X() {
  static const Poly* x = new Poly(Poly::X());
  return *x;
}

// 1 - x - x^2 and 1 - 2x - x^2.
Poly FibDen() { return Poly{1, -1, -1}; }
Poly PellDen() { return Poly{1, -2, -1}; }
Poly OneMinusX() { return Poly{1, -1}; }
Poly XPow(int e) { return Poly::Monomial(1, e); }

RationalGF Frac(Poly num, Poly den) {
  return *RationalGF::Make(std::move(num), std::move(den));
}

Permutation P132Pattern() { return Permutation::Of({1, 3, 2}); }

bool InP132(const Permutation& tau) {
  return !Contains(tau, P132Pattern()) && IsTwoStackSortable(tau);
}

RationalGF P132Gf() { return Frac(FibDen(), PellDen()); }

// 12...d avoiders, d >= 3:
// [(1-x) sum_{r=0}^{d-3} (1-x-x^2)^{r+1} x^{d-3-r} + x^{d-2}]
//   / [(1-x)(1-x-x^2)^{d-2}]
RationalGF IncreasingAvoiderGf(int d) {
  if (d == 1) return RationalGF(1);
  if (d == 2) return Frac(1, OneMinusX());
  Poly sum;
  for (int r = 0; r <= d - 3; ++r) sum += FibDen().Pow(r + 1) * XPow(d - 3 - r);
  return Frac(OneMinusX() * sum + XPow(d - 2),
              OneMinusX() * FibDen().Pow(d - 2));
}

// d12...(d-1) avoiders.
RationalGF LeadingMaxAvoiderGf(int d) {
  if (d == 2) return Frac(1, OneMinusX());
  const Poly one_plus_x{1, 1};
  if (d == 3) {
    return Frac(FibDen() * OneMinusX() + X() * one_plus_x,
                OneMinusX().Pow(2));
  }
  Poly sum;
  for (int r = 0; r <= d - 4; ++r) sum += FibDen().Pow(r + 1) * XPow(d - 3 - r);
  const Poly one_minus_x2{1, 0, -1};
  Poly num = OneMinusX() * FibDen().Pow(d - 2) + one_minus_x2 * sum +
             XPow(d - 2) * one_plus_x;
  return Frac(std::move(num), OneMinusX().Pow(2) * FibDen().Pow(d - 3));
}

// d...21 avoiders, d >= 2:
// [(1-x-x^2) sum_{i=0}^{d-3} x^i (1+x)^i (1-x)^{d-i-2}
//   + x^{d-2} (1+x)^{d-2}] / (1-x)^{d-1}
RationalGF DecreasingAvoiderGf(int d) {
  const Poly one_plus_x{1, 1};
  Poly sum;
  for (int i = 0; i <= d - 3; ++i) {
    sum += XPow(i) * one_plus_x.Pow(i) * OneMinusX().Pow(d - i - 2);
  }
  return Frac(FibDen() * sum + XPow(d - 2) * one_plus_x.Pow(d - 2),
              OneMinusX().Pow(d - 1));
}

absl::Status RangeError(const FamilyId& f, absl::string_view hypothesis) {
  return absl::InvalidArgumentError(absl::StrCat(
      f.Name(), ": parameter out of range; the formula requires ", hypothesis));
}

struct KindName {
  FamilyKind kind;
  absl::string_view name;
  bool takes_param;
};

constexpr KindName kKindNames[] = {
    {FamilyKind::kWest, "WEST", false},
    {FamilyKind::kP132, "P132", false},
    {FamilyKind::kP132Increasing, "P132_12d", true},
    {FamilyKind::kP132LeadingMax, "P132_d12", true},
    {FamilyKind::kP132Decreasing, "P132_dec", true},
    {FamilyKind::kP132Tau, "TAU", true},
    {FamilyKind::kB1Increasing, "B1_12d", true},
    {FamilyKind::kB1LeadingMax, "B1_d12", true},
    {FamilyKind::kB1Decreasing, "B1_dec", true},
    {FamilyKind::kRightToLeftMaxima, "RMAX", true},
    {FamilyKind::kQ, "Q", false},
    {FamilyKind::kD1Increasing, "D1_12d", true},
};

const KindName& NameOf(FamilyKind kind) {
  for (const auto& k : kKindNames) {
    if (k.kind == kind) return k;
  }
  return kKindNames[0];
}

// What a family counts, for matching closed forms to families.
struct Subject {
  enum class Kind { kWest, kAvoid, kOne, kRmax, kQ, kOneInQ };
  Kind kind;
  Permutation pattern;
  int r = 0;
};

Subject SubjectOf(const FamilyId& f) {
  using K = Subject::Kind;
  switch (f.kind) {
    case FamilyKind::kWest:
      return {K::kWest, {}, 0};
    case FamilyKind::kP132:
      return {K::kAvoid, P132Pattern(), 0};
    case FamilyKind::kP132Increasing:
      return {K::kAvoid, IncreasingPattern(f.param), 0};
    case FamilyKind::kP132LeadingMax:
      return {K::kAvoid, LeadingMaxPattern(f.param), 0};
    case FamilyKind::kP132Decreasing:
      return {K::kAvoid, DecreasingPattern(f.param), 0};
    case FamilyKind::kP132Tau:
      return {K::kAvoid, InP132(f.tau) ? f.tau : P132Pattern(), 0};
    case FamilyKind::kB1Increasing:
      return {K::kOne, IncreasingPattern(f.param), 0};
    case FamilyKind::kB1LeadingMax:
      return {K::kOne, LeadingMaxPattern(f.param), 0};
    case FamilyKind::kB1Decreasing:
      return {K::kOne, DecreasingPattern(f.param), 0};
    case FamilyKind::kRightToLeftMaxima:
      return {K::kRmax, {}, f.param};
    case FamilyKind::kQ:
      return {K::kQ, {}, 0};
    case FamilyKind::kD1Increasing:
      return {K::kOneInQ, IncreasingPattern(f.param), 0};
  }
  return {K::kWest, {}, 0};
}

struct ClosedFormSubject {
  ClosedFormId id;
  Subject subject;
};

const std::vector<ClosedFormSubject>& ClosedFormSubjects() {
  using K = Subject::Kind;
  using P = Permutation;
  static const auto* subjects = new std::vector<ClosedFormSubject>{
      {ClosedFormId::kWest, {K::kWest, {}, 0}},
      {ClosedFormId::kPell, {K::kAvoid, P::Of({1, 3, 2}), 0}},
      {ClosedFormId::k123, {K::kAvoid, P::Of({1, 2, 3}), 0}},
      {ClosedFormId::k1234, {K::kAvoid, P::Of({1, 2, 3, 4}), 0}},
      {ClosedFormId::k312, {K::kAvoid, P::Of({3, 1, 2}), 0}},
      {ClosedFormId::k4123, {K::kAvoid, P::Of({4, 1, 2, 3}), 0}},
      {ClosedFormId::k3412, {K::kAvoid, P::Of({3, 4, 1, 2}), 0}},
      {ClosedFormId::k45123, {K::kAvoid, P::Of({4, 5, 1, 2, 3}), 0}},
      {ClosedFormId::k561234, {K::kAvoid, P::Of({5, 6, 1, 2, 3, 4}), 0}},
      {ClosedFormId::k321, {K::kAvoid, P::Of({3, 2, 1}), 0}},
      {ClosedFormId::k4321, {K::kAvoid, P::Of({4, 3, 2, 1}), 0}},
      {ClosedFormId::k54321, {K::kAvoid, P::Of({5, 4, 3, 2, 1}), 0}},
      {ClosedFormId::kB1_123, {K::kOne, P::Of({1, 2, 3}), 0}},
      {ClosedFormId::kB1_51234, {K::kOne, P::Of({5, 1, 2, 3, 4}), 0}},
      {ClosedFormId::kA1, {K::kRmax, {}, 1}},
      {ClosedFormId::kA2, {K::kRmax, {}, 2}},
      {ClosedFormId::kA3, {K::kRmax, {}, 3}},
      {ClosedFormId::kQ, {K::kQ, {}, 0}},
      {ClosedFormId::kD1_123, {K::kOneInQ, P::Of({1, 2, 3}), 0}},
  };
  return *subjects;
}

Rational R(const BigInt& v) { return Rational(v); }
Rational F(int n) { return R(Fibonacci(n)); }
Rational Pl(int n) { return R(Pell(n)); }
Rational Pow2(int e) { return R(BigInt(1) << e); }

}  // namespace

std::string FamilyId::Name() const {
  const KindName& k = NameOf(kind);
  if (!k.takes_param) return std::string(k.name);
  if (kind == FamilyKind::kP132Tau) {
    return absl::StrCat(k.name, "(", tau.ToString(), ")");
  }
  return absl::StrCat(k.name, "(", param, ")");
}

absl::Status ValidateFamily(const FamilyId& f) {
  switch (f.kind) {
    case FamilyKind::kWest:
    case FamilyKind::kP132:
    case FamilyKind::kQ:
      return absl::OkStatus();
    case FamilyKind::kP132Increasing:
      if (f.param < 1) return RangeError(f, "d >= 1");
      break;
    case FamilyKind::kP132LeadingMax:
    case FamilyKind::kP132Decreasing:
    case FamilyKind::kD1Increasing:
      if (f.param < 2) return RangeError(f, "d >= 2");
      break;
    case FamilyKind::kP132Tau:
      if (f.tau.empty()) return RangeError(f, "a nonempty pattern");
      break;
    case FamilyKind::kB1Increasing:
    case FamilyKind::kB1LeadingMax:
      if (f.param < 3) return RangeError(f, "d >= 3");
      break;
    case FamilyKind::kB1Decreasing:
      if (f.param < 1) return RangeError(f, "d >= 1");
      break;
    case FamilyKind::kRightToLeftMaxima:
      if (f.param < 1) return RangeError(f, "r >= 1");
      break;
  }
  return absl::OkStatus();
}

absl::StatusOr<FamilyId> ParseFamilyId(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  absl::string_view name = text;
  absl::string_view arg;
  bool has_arg = false;
  if (const auto open = text.find('('); open != absl::string_view::npos) {
    if (!absl::EndsWith(text, ")")) {
      return absl::InvalidArgumentError(
          absl::StrCat("family '", text, "' has an unclosed parenthesis"));
    }
    name = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
    has_arg = true;
  } else if (const auto colon = text.find(':');
             colon != absl::string_view::npos) {
    name = text.substr(0, colon);
    arg = text.substr(colon + 1);
    has_arg = true;
  }
  for (const auto& k : kKindNames) {
    if (k.name != name) continue;
    FamilyId f;
    f.kind = k.kind;
    if (k.takes_param != has_arg) {
      return absl::InvalidArgumentError(absl::StrCat(
          "family '", name, "' ",
          k.takes_param ? "needs a parameter, e.g. NAME(3)"
                        : "takes no parameter"));
    }
    if (k.kind == FamilyKind::kP132Tau) {
      auto tau = ParsePermutation(arg);
      if (!tau.ok()) return tau.status();
      f.tau = *std::move(tau);
    } else if (k.takes_param && !absl::SimpleAtoi(arg, &f.param)) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad parameter '", arg, "' for family ", name));
    }
    if (auto s = ValidateFamily(f); !s.ok()) return s;
    return f;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown family '", name,
      "' (known: WEST, P132, P132_12d, P132_d12, P132_dec, TAU, B1_12d, "
      "B1_d12, B1_dec, RMAX, Q, D1_12d)"));
}

std::vector<FamilyId> DefaultScope() {
  std::vector<FamilyId> scope;
  auto add = [&](FamilyKind kind, int param) {
    scope.push_back(FamilyId{kind, param, {}});
  };
  add(FamilyKind::kWest, 0);
  add(FamilyKind::kP132, 0);
  for (int d = 1; d <= 6; ++d) add(FamilyKind::kP132Increasing, d);
  for (int d = 2; d <= 6; ++d) add(FamilyKind::kP132LeadingMax, d);
  for (int d = 2; d <= 6; ++d) add(FamilyKind::kP132Decreasing, d);
  for (const auto& tau : {Permutation::Of({3, 4, 1, 2}),
                          Permutation::Of({4, 5, 1, 2, 3}),
                          Permutation::Of({5, 6, 1, 2, 3, 4})}) {
    scope.push_back(FamilyId{FamilyKind::kP132Tau, 0, tau});
  }
  for (int d = 3; d <= 5; ++d) add(FamilyKind::kB1Increasing, d);
  for (int d = 3; d <= 5; ++d) add(FamilyKind::kB1LeadingMax, d);
  for (int d = 1; d <= 5; ++d) add(FamilyKind::kB1Decreasing, d);
  for (int r = 1; r <= 5; ++r) add(FamilyKind::kRightToLeftMaxima, r);
  add(FamilyKind::kQ, 0);
  for (int d = 2; d <= 4; ++d) add(FamilyKind::kD1Increasing, d);
  return scope;
}

absl::StatusOr<RationalGF> FamilyGf(const FamilyId& f) {
  if (auto s = ValidateFamily(f); !s.ok()) return s;
  const int d = f.param;
  switch (f.kind) {
    case FamilyKind::kWest:
      return absl::InvalidArgumentError(
          "WEST has no rational generating function; only the closed form "
          "2(3n)!/((n+1)!(2n+1)!) is available");
    case FamilyKind::kP132:
      return P132Gf();
    case FamilyKind::kP132Increasing:
      return IncreasingAvoiderGf(d);
    case FamilyKind::kP132LeadingMax:
      return LeadingMaxAvoiderGf(d);
    case FamilyKind::kP132Decreasing:
      return DecreasingAvoiderGf(d);
    case FamilyKind::kP132Tau:
      return GfForTau(f.tau);
    case FamilyKind::kB1Increasing:
      // x^d / ((1-x)^2 (1-x-x^2)^{d-2})
      return Frac(XPow(d), OneMinusX().Pow(2) * FibDen().Pow(d - 2));
    case FamilyKind::kB1LeadingMax:
      if (d == 3) return Frac(XPow(3), OneMinusX().Pow(2));
      // x^d / ((1-x)^3 (1-x-x^2)^{d-4})
      return Frac(XPow(d), OneMinusX().Pow(3) * FibDen().Pow(d - 4));
    case FamilyKind::kB1Decreasing:
      return Frac(XPow(d), OneMinusX().Pow(d - 1));
    case FamilyKind::kRightToLeftMaxima: {
      // x^r (1+x)^{r-1} (1-x-x^2) / (1-2x-x^2)
      const Poly one_plus_x{1, 1};
      return Frac(XPow(d) * one_plus_x.Pow(d - 1) * FibDen(), PellDen());
    }
    case FamilyKind::kQ:
      // x^3 (1 + x - 2x^2 - x^3) / (1-2x-x^2)^2
      return Frac(XPow(3) * Poly{1, 1, -2, -1}, PellDen().Pow(2));
    case FamilyKind::kD1Increasing:
      // (d-2) x^{d+2} / ((1-x)^2 (1-x-x^2)^{d-1})
      return Frac(Poly::Monomial(d - 2, d + 2),
                  OneMinusX().Pow(2) * FibDen().Pow(d - 1));
  }
  return absl::InternalError("unhandled family");
}

absl::StatusOr<RationalGF> GfForTau(const Permutation& tau) {
  const int k = tau.size();
  if (k == 0) {
    return absl::InvalidArgumentError("GfForTau needs a nonempty pattern");
  }
  if (!InP132(tau)) return P132Gf();
  if (k == 1) return RationalGF(1);
  if (k == 2) return Frac(1, OneMinusX());

  auto values = tau.values();
  const Poly one_plus_x{1, 1};
  if (values[0] == k) {
    auto inner = GfForTau(Standardize(values.subspan(1)));
    if (!inner.ok()) return inner;
    // (1 - x - x^2 + x(1+x) P') / (1-x)
    return RationalGF(FibDen()) * Frac(1, OneMinusX()) +
           RationalGF(X() * one_plus_x) * *inner * Frac(1, OneMinusX());
  }
  if (values[0] == k - 1 && values[1] == k) {
    auto inner = GfForTau(Standardize(values.subspan(2)));
    if (!inner.ok()) return inner;
    // (1 - x - x^2 + x^2 P') / (1-2x)
    const Poly one_minus_2x{1, -2};
    return (RationalGF(FibDen()) + RationalGF(XPow(2)) * *inner) *
           Frac(1, one_minus_2x);
  }
  if (values[k - 1] == k) {
    auto inner = GfForTau(Standardize(values.first(k - 1)));
    if (!inner.ok()) return inner;
    // 1 + x P' / (1-x-x^2)
    return RationalGF(1) + RationalGF(X()) * *inner * Frac(1, FibDen());
  }
  return absl::InternalError(absl::StrCat(
      tau.ToString(), " is in P_k(132) but matches no decomposition"));
}

RationalGF QStructuralGf() {
  // Q (1 - 2x - x^2) = x^2 (P132 - 1) + x^4
  const RationalGF rhs =
      RationalGF(XPow(2)) * (P132Gf() - RationalGF(1)) + RationalGF(XPow(4));
  return rhs * Frac(1, PellDen());
}

absl::StatusOr<OracleQuery> FamilyOracleQuery(const FamilyId& f) {
  if (auto s = ValidateFamily(f); !s.ok()) return s;
  OracleQuery q;
  q.constraint.two_stack_sortable = true;
  const Permutation p132 = P132Pattern();
  switch (f.kind) {
    case FamilyKind::kWest:
      break;
    case FamilyKind::kP132:
      q.constraint.avoid = {p132};
      break;
    case FamilyKind::kP132Increasing:
      q.constraint.avoid = {p132, IncreasingPattern(f.param)};
      break;
    case FamilyKind::kP132LeadingMax:
      q.constraint.avoid = {p132, LeadingMaxPattern(f.param)};
      break;
    case FamilyKind::kP132Decreasing:
      q.constraint.avoid = {p132, DecreasingPattern(f.param)};
      break;
    case FamilyKind::kP132Tau:
      q.constraint.avoid = {p132, f.tau};
      break;
    case FamilyKind::kB1Increasing:
      q.constraint.avoid = {p132};
      q.constraint.exact = {{IncreasingPattern(f.param), 1}};
      break;
    case FamilyKind::kB1LeadingMax:
      q.constraint.avoid = {p132};
      q.constraint.exact = {{LeadingMaxPattern(f.param), 1}};
      break;
    case FamilyKind::kB1Decreasing:
      q.constraint.avoid = {p132};
      q.constraint.exact = {{DecreasingPattern(f.param), 1}};
      break;
    case FamilyKind::kRightToLeftMaxima:
      q.constraint.avoid = {p132};
      q.split = Statistic::RightToLeftMaxima();
      q.split_value = f.param;
      break;
    case FamilyKind::kQ:
      q.constraint.exact = {{p132, 1}};
      break;
    case FamilyKind::kD1Increasing:
      q.constraint.exact = {{p132, 1}, {IncreasingPattern(f.param), 1}};
      break;
  }
  return q;
}

const std::vector<ClosedFormInfo>& AllClosedForms() {
  using C = ClosedFormId;
  static const auto* infos = new std::vector<ClosedFormInfo>{
      {C::kWest, "CF_WEST",
       "|P_n| = 2(3n)!/((n+1)!(2n+1)!), n >= 0", 0},
      {C::kPell, "CF_P132", "|P_n(132)| = p_n, n >= 1", 1},
      {C::k123, "CF_123", "|P_n(132,123)| = F_{n+2} - 1, n >= 1", 1},
      {C::k1234, "CF_1234",
       "|P_n(132,1234)| = 1 - (8/5) F_{n+1} + ((n+1)/5)(F_{n+3} + F_{n+1}), "
       "n >= 1",
       1},
      {C::k312, "CF_312", "|P_n(132,312)| = 2n - 2, n >= 2", 2},
      {C::k4123, "CF_4123", "|P_n(132,4123)| = F_{n+4} - 2n - 2, n >= 0", 0},
      {C::k3412, "CF_3412", "|P_n(132,3412)| = 3*2^{n-2} - 1, n >= 2", 2},
      {C::k45123, "CF_45123",
       "|P_n(132,45123)| = 3*2^{n-1} - F_{n+3} + 1, n >= 1", 1},
      {C::k561234, "CF_561234",
       "|P_n(132,561234)| = 3*2^n - 1 - (6/5) F_{n+1} "
       "- ((n+1)/5)(F_{n+4} + F_{n+2}), n >= 1",
       1},
      {C::k321, "CF_321", "|P_n(132,321)| = 2n - 2, n >= 2", 2},
      {C::k4321, "CF_4321", "|P_n(132,4321)| = 2n^2 - 8n + 11, n >= 3", 3},
      {C::k54321, "CF_54321",
       "|P_n(132,54321)| = (4/3)n^3 - 12n^2 + (128/3)n - 52, n >= 4", 4},
      {C::kB1_123, "CF_B1_123",
       "#{P_n(132) with one 123} = F_{n+2} - n - 1, n >= 0", 0},
      {C::kB1_51234, "CF_B1_51234",
       "#{P_n(132) with one 51234} = F_{n+2} - C(n+1,2), n >= 1", 1},
      {C::kA1, "CF_A1", "a_{1,n} = p_{n-1}, n >= 2", 2},
      {C::kA2, "CF_A2", "a_{2,n} = p_{n-2} + p_{n-3}, n >= 4", 4},
      {C::kA3, "CF_A3", "a_{3,n} = 2 p_{n-3}, n >= 6", 6},
      {C::kQ, "CF_Q",
       "|Q_n| = (51n p_n - 145 p_n - 21n p_{n+1} + 60 p_{n+1})/4, n >= 3", 3},
      {C::kD1_123, "CF_D1_123",
       "#{Q_n with one 123} = (n/5)(F_{n+1} + F_{n-1}) "
       "- (2/5)(5F_{n+1} - F_{n-1}) + n + 2, n >= 4",
       4},
  };
  return *infos;
}

const ClosedFormInfo& Info(ClosedFormId id) {
  for (const auto& info : AllClosedForms()) {
    if (info.id == id) return info;
  }
  return AllClosedForms().front();
}

absl::StatusOr<ClosedFormId> ParseClosedFormId(absl::string_view name) {
  for (const auto& info : AllClosedForms()) {
    if (info.name == name) return info.id;
  }
  return absl::InvalidArgumentError(
      absl::StrCat("unknown closed form '", name, "'"));
}

absl::StatusOr<Rational> ClosedForm(ClosedFormId id, int n) {
  const ClosedFormInfo& info = Info(id);
  if (n < info.min_n) {
    return absl::OutOfRangeError(absl::StrCat(
        info.name, " is stated only for n >= ", info.min_n, " (", info.formula,
        "); got n = ", n));
  }
  const Rational nn = n;
  Rational v;
  switch (id) {
    case ClosedFormId::kWest:
      v = Rational(2 * Factorial(3 * n), Factorial(n + 1) * Factorial(2 * n + 1));
      break;
    case ClosedFormId::kPell:
      v = Pl(n);
      break;
    case ClosedFormId::k123:
      v = F(n + 2) - 1;
      break;
    case ClosedFormId::k1234:
      v = 1 - Rational(8, 5) * F(n + 1) + (nn + 1) / 5 * (F(n + 3) + F(n + 1));
      break;
    case ClosedFormId::k312:
    case ClosedFormId::k321:
      v = 2 * nn - 2;
      break;
    case ClosedFormId::k4123:
      v = F(n + 4) - 2 * nn - 2;
      break;
    case ClosedFormId::k3412:
      v = 3 * Pow2(n - 2) - 1;
      break;
    case ClosedFormId::k45123:
      v = 3 * Pow2(n - 1) - F(n + 3) + 1;
      break;
    case ClosedFormId::k561234:
      v = 3 * Pow2(n) - 1 - Rational(6, 5) * F(n + 1) -
          (nn + 1) / 5 * (F(n + 4) + F(n + 2));
      break;
    case ClosedFormId::k4321:
      v = 2 * nn * nn - 8 * nn + 11;
      break;
    case ClosedFormId::k54321:
      v = Rational(4, 3) * nn * nn * nn - 12 * nn * nn +
          Rational(128, 3) * nn - 52;
      break;
    case ClosedFormId::kB1_123:
      v = F(n + 2) - nn - 1;
      break;
    case ClosedFormId::kB1_51234:
      v = F(n + 2) - R(Binomial(n + 1, 2));
      break;
    case ClosedFormId::kA1:
      v = Pl(n - 1);
      break;
    case ClosedFormId::kA2:
      v = Pl(n - 2) + Pl(n - 3);
      break;
    case ClosedFormId::kA3:
      v = 2 * Pl(n - 3);
      break;
    case ClosedFormId::kQ:
      v = (51 * nn * Pl(n) - 145 * Pl(n) - 21 * nn * Pl(n + 1) +
           60 * Pl(n + 1)) /
          4;
      break;
    case ClosedFormId::kD1_123:
      v = nn / 5 * (F(n + 1) + F(n - 1)) -
          Rational(2, 5) * (5 * F(n + 1) - F(n - 1)) + nn + 2;
      break;
  }
  v.canonicalize();
  return v;
}

std::vector<ClosedFormId> FamilyClosedForms(const FamilyId& f) {
  std::vector<ClosedFormId> out;
  if (!ValidateFamily(f).ok()) return out;
  const Subject mine = SubjectOf(f);
  for (const auto& cs : ClosedFormSubjects()) {
    const Subject& s = cs.subject;
    if (s.kind == mine.kind && s.pattern == mine.pattern && s.r == mine.r) {
      out.push_back(cs.id);
    }
  }
  return out;
}

absl::StatusOr<Substitution> ParseSubstitution(absl::string_view text) {
  Substitution sub;
  text = absl::StripAsciiWhitespace(text);
  if (text.empty()) return sub;
  for (absl::string_view item : absl::StrSplit(text, ',')) {
    item = absl::StripAsciiWhitespace(item);
    std::pair<absl::string_view, absl::string_view> kv =
        absl::StrSplit(item, absl::MaxSplits('=', 1));
    int d = 0;
    if (!absl::SimpleAtoi(kv.first, &d) || d < 2) {
      return absl::InvalidArgumentError(absl::StrCat(
          "bad substitution '", item, "': expected D=VALUE with D >= 2"));
    }
    Rational value;
    if (kv.second.empty() ||
        value.set_str(std::string(kv.second), 10) != 0) {
      return absl::InvalidArgumentError(absl::StrCat(
          "bad substitution '", item, "': value must be an integer or p/q"));
    }
    if (value.get_den() == 0) {
      return absl::InvalidArgumentError(
          absl::StrCat("bad substitution '", item, "': zero denominator"));
    }
    value.canonicalize();
    sub[d] = value;
  }
  return sub;
}

std::vector<Rational> ExpandIncreasingWeights(const Substitution& sub,
                                              int max_degree) {
  std::vector<Rational> total(std::max(max_degree + 1, 0), 0);
  if (max_degree < 0) return total;
  auto value = [&](int j) -> Rational {
    auto it = sub.find(j);
    return it == sub.end() ? Rational(1) : it->second;
  };
  // x_j^e; exponents are exact binomials.
  auto power = [&](int j, const BigInt& e) -> Rational {
    return Power(value(j), e.get_si());
  };

  total[0] = 1;
  for (int n = 1; n <= max_degree; ++n) {
    // Summand n starts at x_1^n with constant prod_{j>=2} x_j^C(n,j).
    Rational lead = 1;
    for (int j = 2; j <= n; ++j) lead *= power(j, Binomial(n, j));
    std::vector<Rational> term(max_degree + 1, 0);
    term[n] = lead;
    for (int m = 1; m <= n; ++m) {
      // Factor 1 - alpha x_1 - beta x_1^2 after pulling out powers of x_1.
      Rational alpha = 1;
      Rational beta = 1;
      for (int j = 1; j <= m; ++j) {
        const BigInt e = Binomial(m - 1, j - 1);
        if (j >= 2) {
          alpha *= power(j, e);
          beta *= power(j, 2 * e);
        }
        beta *= power(j + 1, e);
      }
      // Divide the truncated series by the factor in place.
      for (int k = 0; k <= max_degree; ++k) {
        if (k >= 1) term[k] += alpha * term[k - 1];
        if (k >= 2) term[k] += beta * term[k - 2];
      }
    }
    for (int k = 0; k <= max_degree; ++k) total[k] += term[k];
  }
  for (auto& c : total) c.canonicalize();
  return total;
}

absl::StatusOr<std::vector<Rational>> WeightedIncreasingSum(
    const Substitution& sub, int max_n, const Oracle& oracle) {
  ConstraintSet p132;
  p132.avoid = {P132Pattern()};
  p132.two_stack_sortable = true;
  std::vector<Rational> out;
  for (int n = 0; n <= max_n; ++n) {
    Rational sum = 0;
    auto s = oracle.Enumerate(n, p132, [&](const Permutation& pi) {
      Rational w = 1;
      for (int d = 2; d <= n; ++d) {
        auto it = sub.find(d);
        if (it == sub.end()) continue;
        w *= Power(it->second, CountIncreasing(pi.values(), d).get_si());
      }
      sum += w;
    });
    if (!s.ok()) return s;
    sum.canonicalize();
    out.push_back(sum);
  }
  return out;
}

}  // namespace tss
