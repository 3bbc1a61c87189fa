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
#include "tss/cross_check.h"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "absl/strings/str_cat.h"
#include "json.hpp"

namespace tss {
namespace {

using Json = nlohmann::ordered_json;

// Oracle column for one family, sharing tabulations between families that
// differ only in the split value (RMAX(1), RMAX(2), ...).
class OracleColumns {
 public:
  explicit OracleColumns(const Oracle& oracle) : oracle_(oracle) {}

  absl::StatusOr<std::vector<BigInt>> Column(const OracleQuery& q,
                                             int max_n) {
    const std::string key = absl::StrCat(
        q.constraint.ToString(), "|", q.split ? q.split->Name() : "-");
    auto it = cache_.find(key);
    if (it == cache_.end()) {
      auto table = oracle_.Tabulate(q.constraint, max_n, q.split);
      if (!table.ok()) return table.status();
      it = cache_.emplace(key, *std::move(table)).first;
    }
    const CountTable& table = it->second;
    if (!q.split) return table.values;
    std::vector<BigInt> column;
    for (const auto& cells : table.split->by_n) {
      auto cell = cells.find(q.split_value);
      column.push_back(cell == cells.end() ? BigInt(0) : cell->second);
    }
    return column;
  }

 private:
  const Oracle& oracle_;
  std::map<std::string, CountTable> cache_;
};

}  // namespace

absl::StatusOr<DiscrepancyReport> CrossCheck(const std::vector<FamilyId>& scope,
                                             int max_n, const Oracle& oracle) {
  DiscrepancyReport report;
  report.max_n = max_n;
  OracleColumns columns(oracle);
  for (const FamilyId& family : scope) {
    auto query = FamilyOracleQuery(family);
    if (!query.ok()) return query.status();
    auto truth = columns.Column(*query, max_n);
    if (!truth.ok()) return truth.status();

    FamilyVerdict verdict{family.Name(), 0, 0};
    auto record = [&](std::string source, std::string citation, int n,
                      const Rational& claimed) {
      ++verdict.values_checked;
      const BigInt& actual = (*truth)[n];
      if (claimed == Rational(actual)) return;
      ++verdict.discrepancies;
      report.entries.push_back(DiscrepancyEntry{
          family.Name(), std::move(source), std::move(citation), n, claimed,
          actual, !IsIntegral(claimed)});
    };

    if (family.kind != FamilyKind::kWest) {
      auto gf = FamilyGf(family);
      if (!gf.ok()) return gf.status();
      const auto series = SeriesCoefficients(*gf, max_n);
      const std::string citation = absl::StrCat("GF ", gf->ToString());
      for (int n = 0; n <= max_n; ++n) record("GF", citation, n, series[n]);
    }
    for (ClosedFormId id : FamilyClosedForms(family)) {
      const ClosedFormInfo& info = Info(id);
      for (int n = info.min_n; n <= max_n; ++n) {
        auto value = ClosedForm(id, n);
        if (!value.ok()) return value.status();
        record(info.name, info.formula, n, *value);
      }
    }
    report.verdicts.push_back(verdict);
  }
  std::stable_sort(report.entries.begin(), report.entries.end(),
                   [](const DiscrepancyEntry& a, const DiscrepancyEntry& b) {
                     return std::tie(a.family, a.n, a.source) <
                            std::tie(b.family, b.n, b.source);
                   });
  return report;
}

std::string DiscrepancyReport::ToJson() const {
  Json families = Json::array();
  for (const auto& v : verdicts) {
    families.push_back(Json{{"family", v.family},
                            {"values_checked", v.values_checked},
                            {"discrepancies", v.discrepancies},
                            {"verdict", v.agrees() ? "agree" : "discrepant"}});
  }
  Json list = Json::array();
  for (const auto& e : entries) {
    list.push_back(Json{{"family", e.family},
                        {"source", e.source},
                        {"citation", e.citation},
                        {"n", e.n},
                        {"claimed_value", ToDecimal(e.claimed)},
                        {"oracle_value", ToDecimal(e.oracle)},
                        {"non_integral", e.non_integral}});
  }
  Json doc{{"max_n", max_n},
           {"empty", empty()},
           {"families", std::move(families)},
           {"entries", std::move(list)}};
  return doc.dump(2);
}

std::string DiscrepancyReport::ToText() const {
  std::string out;
  for (const auto& v : verdicts) {
    absl::StrAppend(&out, v.agrees() ? "agree      " : "DISCREPANT ",
                    v.family, "  (", v.values_checked, " values")
    ;
    if (!v.agrees()) absl::StrAppend(&out, ", ", v.discrepancies, " mismatched");
    absl::StrAppend(&out, ")\n");
  }
  for (const auto& e : entries) {
    absl::StrAppend(&out, "mismatch ", e.family, " ", e.source, " n=", e.n,
                    ": claimed ", ToDecimal(e.claimed), ", oracle ",
                    ToDecimal(e.oracle),
                    e.non_integral ? " [non-integral]" : "", "  -- ",
                    e.citation, "\n");
  }
  absl::StrAppend(&out, empty() ? "report empty: all values agree\n"
                                : absl::StrCat(entries.size(),
                                               " discrepancies\n"));
  return out;
}

}  // namespace tss
