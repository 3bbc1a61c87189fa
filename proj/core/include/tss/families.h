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
#ifndef TSS_FAMILIES_H_
#define TSS_FAMILIES_H_

#include <map>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "tss/numeric.h"
#include "tss/oracle.h"
#include "tss/permutation.h"
#include "tss/rational_gf.h"
#include "tss/statistics.h"

namespace tss {

// Generating-function families over P(132) and Q. Naming: "12d" is the
// pattern 12...d, "d12" is d12...(d-1), "dec" is d...21. B1 counts members
// of P_n(132) with exactly one occurrence; D1 counts members of Q_n with
// exactly one occurrence; Q_n holds the two-stack sortable permutations with
// exactly one 132.
enum class FamilyKind {
  kWest,              // all two-stack sortable permutations (no rational GF)
  kP132,              // P_n(132)
  kP132Increasing,    // P_n(132, 12...d)
  kP132LeadingMax,    // P_n(132, d12...(d-1))
  kP132Decreasing,    // P_n(132, d...21)
  kP132Tau,           // P_n(132, tau), via the structural recursion
  kB1Increasing,      // one 12...d inside P_n(132)
  kB1LeadingMax,      // one d12...(d-1) inside P_n(132)
  kB1Decreasing,      // one d...21 inside P_n(132)
  kRightToLeftMaxima, // members of P_n(132) with exactly r right-to-left maxima
  kQ,                 // Q_n
  kD1Increasing,      // one 12...d inside Q_n
};

struct FamilyId {
  FamilyKind kind = FamilyKind::kP132;
  int param = 0;    // d or r
  Permutation tau;  // kP132Tau only

  // "P132", "P132_12d(3)", "RMAX(2)", "TAU(3412)", ...
  std::string Name() const;
  friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

// Accepts "NAME", "NAME(p)" and "NAME:p"; validates the parameter range.
absl::StatusOr<FamilyId> ParseFamilyId(absl::string_view text);
absl::Status ValidateFamily(const FamilyId& f);

// The families checked by `verify --scope all`.
std::vector<FamilyId> DefaultScope();

// Exact generating function for the family. Fails for out-of-range
// parameters and for kWest, whose generating function is not rational.
absl::StatusOr<RationalGF> FamilyGf(const FamilyId& f);

// Structural recursion on the shape of tau: tau = k,tau' / k-1,k,tau' /
// tau',k with bases 1, 12, 21; tau outside P_k(132) gives the P132 function.
absl::StatusOr<RationalGF> GfForTau(const Permutation& tau);

// Q from its decomposition Q = 2xQ + x^2 Q + x^2 (P132 - 1) + x^4.
RationalGF QStructuralGf();

// How the oracle counts a family at length n: members of S_n meeting
// `constraint`, restricted to those whose `split` statistic equals
// `split_value` when a split is given.
struct OracleQuery {
  ConstraintSet constraint;
  std::optional<Statistic> split;
  BigInt split_value = 0;
};

absl::StatusOr<OracleQuery> FamilyOracleQuery(const FamilyId& f);

enum class ClosedFormId {
  kWest,
  kPell,
  k123,
  k1234,
  k312,
  k4123,
  k3412,
  k45123,
  k561234,
  k321,
  k4321,
  k54321,
  kB1_123,
  kB1_51234,
  kA1,
  kA2,
  kA3,
  kQ,
  kD1_123,
};

struct ClosedFormInfo {
  ClosedFormId id;
  std::string name;     // "CF_123"
  std::string formula;  // human-readable statement with its range
  int min_n;
};

const std::vector<ClosedFormInfo>& AllClosedForms();
const ClosedFormInfo& Info(ClosedFormId id);
absl::StatusOr<ClosedFormId> ParseClosedFormId(absl::string_view name);

// Exact value; may be non-integral. Fails below the formula's range.
absl::StatusOr<Rational> ClosedForm(ClosedFormId id, int n);

// Closed forms that make a claim about the family's counts.
std::vector<ClosedFormId> FamilyClosedForms(const FamilyId& f);

// Values for x_d, d >= 2; unspecified indeterminates are 1.
using Substitution = std::map<int, Rational>;

// "2=1/2,3=0" -> {2: 1/2, 3: 0}.
absl::StatusOr<Substitution> ParseSubstitution(absl::string_view text);

// Coefficients of x_1^0 .. x_1^max_degree of
//   1 + sum_{n>=1} prod_j x_j^C(n,j) /
//       prod_{m=1..n} (1 - prod_j x_j^C(m-1,j-1)
//                        - prod_j x_j^(2 C(m-1,j-1)) x_{j+1}^C(m-1,j-1))
// after substituting the given values for x_2, x_3, ...
std::vector<Rational> ExpandIncreasingWeights(const Substitution& sub,
                                              int max_degree);

// Brute-force side of the same quantity: for each n, the sum over P_n(132)
// of prod_{d>=2} x_d^(number of 12...d occurrences).
absl::StatusOr<std::vector<Rational>> WeightedIncreasingSum(
    const Substitution& sub, int max_n, const Oracle& oracle);

}  // namespace tss

#endif  // TSS_FAMILIES_H_
