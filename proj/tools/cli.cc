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
#include "cli.h"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "json.hpp"
#include "tss/cross_check.h"
#include "tss/families.h"
#include "tss/oracle.h"
#include "tss/permutation.h"
#include "tss/rational_gf.h"
#include "tss/sequences.h"
#include "tss/sortability.h"
#include "tss/statistics.h"
#include "tss/tiling.h"

namespace tss::cli {
namespace {

using Json = nlohmann::ordered_json;

// Raised for bad input discovered after flag parsing; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename T>
T OrThrow(absl::StatusOr<T> value) {
  if (!value.ok()) throw InputError(std::string(value.status().message()));
  return *std::move(value);
}

// Flags shared by every subcommand.
struct RunConfig {
  int cap = 11;  // oracle cap on n; never above kOracleCeiling
  int threads = 1;
  std::string format = "text";
  std::string output;
};

void AddCommon(CLI::App* sub, RunConfig& cfg,
               std::vector<std::string> formats = {"text", "json", "csv"}) {
  sub->add_option("--cap", cfg.cap, "Oracle cap on n")
      ->check(CLI::Range(0, kOracleCeiling))
      ->capture_default_str();
  sub->add_option("--threads", cfg.threads, "Oracle worker threads")
      ->check(CLI::Range(1, 256))
      ->capture_default_str();
  sub->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  sub->add_option("--output", cfg.output, "Write output here instead of stdout");
}

Oracle MakeOracle(const RunConfig& cfg) {
  return Oracle(OracleOptions{cfg.cap, cfg.threads});
}

struct ConstraintFlags {
  std::vector<std::string> avoid;
  std::vector<std::string> exact;
  bool tss = false;

  void Add(CLI::App* sub) {
    sub->add_option("--avoid", avoid, "Pattern to avoid (repeatable)");
    sub->add_option("--exact", exact,
                    "PATTERN:COUNT exact occurrence requirement (repeatable)");
    sub->add_flag("--tss", tss, "Require two-stack sortability");
  }

  ConstraintSet Build() const {
    ConstraintSet c;
    for (const auto& a : avoid) c.avoid.push_back(OrThrow(ParsePermutation(a)));
    for (const auto& e : exact) {
      c.exact.push_back(OrThrow(ParseExactRequirement(e)));
    }
    c.two_stack_sortable = tss;
    return c;
  }
};

Json PermJson(const Permutation& p) {
  Json values = Json::array();
  for (int v : p) values.push_back(v);
  return values;
}

std::string SpaceJoined(const Permutation& p) {
  return absl::StrJoin(p.values(), " ");
}

// Splits a scope list on commas that are not inside parentheses.
std::vector<std::string> SplitScope(const std::string& text) {
  std::vector<std::string> parts;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) parts.push_back(current);
  return parts;
}

// --- subcommand bodies; each returns its exit code and fills `out`. ---

struct CountArgs {
  std::optional<int> n;
  std::optional<int> n_max;
  std::string split;
  ConstraintFlags constraint;
};

int DoCount(const CountArgs& args, const RunConfig& cfg, std::string& out) {
  if (args.n.has_value() == args.n_max.has_value()) {
    throw InputError("count needs exactly one of --n or --n-max");
  }
  const ConstraintSet c = args.constraint.Build();
  const Oracle oracle = MakeOracle(cfg);
  std::optional<Statistic> split;
  if (!args.split.empty()) split = OrThrow(ParseStatistic(args.split));

  const int lo = args.n ? *args.n : 0;
  const int hi = args.n ? *args.n : *args.n_max;
  if (lo < 0) throw InputError(absl::StrCat("--n must be >= 0, got ", lo));
  // Tabulate from 0 and keep the requested rows.
  const CountTable table = OrThrow(oracle.Tabulate(c, hi, split));

  const std::string name = c.ToString();
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (int n = lo; n <= hi; ++n) {
      Json row{{"n", n},
               {"constraint", name},
               {"value", ToDecimal(table.values[n])}};
      if (split) {
        Json cells = Json::object();
        for (const auto& [stat, count] : table.split->by_n[n]) {
          cells[ToDecimal(stat)] = ToDecimal(count);
        }
        row["split"] = Json{{"statistic", split->Name()}, {"cells", cells}};
      }
      rows.push_back(std::move(row));
    }
    out = (args.n ? rows[0] : rows).dump(2) + "\n";
  } else if (cfg.format == "csv") {
    if (split) {
      out = absl::StrCat("n,", split->Name(), ",count\n");
      for (int n = lo; n <= hi; ++n) {
        for (const auto& [stat, count] : table.split->by_n[n]) {
          absl::StrAppend(&out, n, ",", ToDecimal(stat), ",", ToDecimal(count),
                          "\n");
        }
      }
    } else {
      out = "n,value\n";
      for (int n = lo; n <= hi; ++n) {
        absl::StrAppend(&out, n, ",", ToDecimal(table.values[n]), "\n");
      }
    }
  } else {
    for (int n = lo; n <= hi; ++n) {
      if (args.n) {
        absl::StrAppend(&out, ToDecimal(table.values[n]), "\n");
      } else {
        absl::StrAppend(&out, n, "\t", ToDecimal(table.values[n]), "\n");
      }
      if (split) {
        for (const auto& [stat, count] : table.split->by_n[n]) {
          absl::StrAppend(&out, "  ", split->Name(), "=", ToDecimal(stat), "\t",
                          ToDecimal(count), "\n");
        }
      }
    }
  }
  return kExitOk;
}

struct EnumerateArgs {
  int n = 0;
  ConstraintFlags constraint;
};

int DoEnumerate(const EnumerateArgs& args, const RunConfig& cfg,
                std::string& out) {
  const ConstraintSet c = args.constraint.Build();
  const auto members = OrThrow(MakeOracle(cfg).EnumerateAll(args.n, c));
  if (cfg.format == "json") {
    Json perms = Json::array();
    for (const auto& p : members) perms.push_back(PermJson(p));
    Json doc{{"n", args.n},
             {"constraint", c.ToString()},
             {"value", std::to_string(members.size())},
             {"permutations", std::move(perms)}};
    out = doc.dump(2) + "\n";
  } else if (cfg.format == "csv") {
    out = "permutation\n";
    for (const auto& p : members) absl::StrAppend(&out, SpaceJoined(p), "\n");
  } else {
    for (const auto& p : members) absl::StrAppend(&out, p.ToString(), "\n");
  }
  return kExitOk;
}

struct SeriesArgs {
  std::string family;
  std::string tau;
  std::string multivariate;
  bool structural_q = false;
  int terms = 10;
};

int DoSeries(const SeriesArgs& args, const RunConfig& cfg, std::string& out) {
  const int sources = !args.family.empty() + !args.tau.empty() +
                      !args.multivariate.empty() + args.structural_q;
  if (sources != 1) {
    throw InputError(
        "series needs exactly one of --family, --tau, --multivariate, "
        "--q-structural");
  }
  if (args.terms < 0) throw InputError("--terms must be >= 0");
  std::vector<Rational> coeffs;
  if (!args.multivariate.empty()) {
    const Substitution sub = OrThrow(ParseSubstitution(args.multivariate));
    coeffs = ExpandIncreasingWeights(sub, args.terms - 1);
  } else {
    RationalGF gf;
    if (!args.family.empty()) {
      gf = OrThrow(FamilyGf(OrThrow(ParseFamilyId(args.family))));
    } else if (!args.tau.empty()) {
      gf = OrThrow(GfForTau(OrThrow(ParsePermutation(args.tau))));
    } else {
      gf = QStructuralGf();
    }
    coeffs = SeriesCoefficients(gf, args.terms - 1);
  }
  std::vector<std::string> text;
  for (const auto& c : coeffs) text.push_back(ToDecimal(c));
  if (cfg.format == "json") {
    out = Json(text).dump() + "\n";
  } else if (cfg.format == "csv") {
    out = absl::StrJoin(text, ",") + "\n";
  } else {
    for (const auto& t : text) absl::StrAppend(&out, t, "\n");
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string scope = "all";
  int max_n = 9;
};

int DoVerify(const VerifyArgs& args, const RunConfig& cfg, std::string& out) {
  std::vector<FamilyId> scope;
  if (args.scope == "all") {
    scope = DefaultScope();
  } else {
    for (const auto& name : SplitScope(args.scope)) {
      scope.push_back(OrThrow(ParseFamilyId(name)));
    }
  }
  if (scope.empty()) throw InputError("--scope names no families");
  const DiscrepancyReport report =
      OrThrow(CrossCheck(scope, args.max_n, MakeOracle(cfg)));
  out = cfg.format == "json" ? report.ToJson() + "\n" : report.ToText();
  return report.empty() ? kExitOk : kExitDiscrepancies;
}

struct BijectionArgs {
  std::string tiling;
  std::string perm;
};

int DoEncode(const BijectionArgs& args, const RunConfig& cfg,
             std::string& out) {
  const Tiling t = OrThrow(ParseTiling(args.tiling));
  const Permutation p = EncodeTiling(t);
  if (cfg.format == "json") {
    out = Json{{"tiling", t.ToString()}, {"permutation", PermJson(p)}}.dump() +
          "\n";
  } else {
    out = p.ToString() + "\n";
  }
  return kExitOk;
}

int DoDecode(const BijectionArgs& args, const RunConfig& cfg,
             std::string& out) {
  const Permutation p = OrThrow(ParsePermutation(args.perm));
  const Tiling t = OrThrow(DecodeTiling(p));
  if (cfg.format == "json") {
    out = Json{{"permutation", PermJson(p)}, {"tiling", t.ToString()}}.dump() +
          "\n";
  } else {
    out = t.ToString() + "\n";
  }
  return kExitOk;
}

int DoSortcheck(const std::string& perm, const RunConfig& cfg,
                std::string& out) {
  const Permutation input = OrThrow(ParsePermutation(perm));
  const SortTrace first = StackSortTraced(input);
  const SortTrace second = StackSortTraced(first.output);
  const bool sortable = second.output == Permutation::Identity(input.size());
  const bool west = IsTwoStackSortableWest(input);
  if (cfg.format == "json") {
    Json passes = Json::array();
    for (const SortTrace* t : {&first, &second}) {
      Json steps = Json::array();
      for (const auto& e : t->steps) {
        steps.push_back(
            Json{{"op", e.kind == SortEvent::Kind::kPush ? "PUSH" : "POP"},
                 {"value", e.value}});
      }
      passes.push_back(
          Json{{"trace", std::move(steps)}, {"output", PermJson(t->output)}});
    }
    out = Json{{"input", PermJson(input)},
               {"passes", std::move(passes)},
               {"two_stack_sortable", sortable},
               {"pattern_test", west}}
              .dump(2) +
          "\n";
    return kExitOk;
  }
  int pass = 1;
  for (const SortTrace* t : {&first, &second}) {
    absl::StrAppend(&out, "pass ", pass, "\n");
    for (const auto& e : t->steps) {
      absl::StrAppend(&out,
                      e.kind == SortEvent::Kind::kPush ? "PUSH " : "POP ",
                      e.value, "\n");
    }
    absl::StrAppend(&out, "after pass ", pass, ": ", t->output.ToString(),
                    "\n");
    ++pass;
  }
  absl::StrAppend(&out, "two-stack sortable: ", sortable ? "yes" : "no", "\n");
  absl::StrAppend(&out, "pattern test: ", west ? "yes" : "no", "\n");
  return kExitOk;
}

struct SequenceArgs {
  std::string name;
  int terms = 10;
};

int DoSequence(const SequenceArgs& args, const RunConfig& cfg,
               std::string& out) {
  if (args.terms < 0) throw InputError("--terms must be >= 0");
  std::vector<std::string> values;
  for (int n = 0; n < args.terms; ++n) {
    BigInt v;
    if (args.name == "fibonacci") {
      v = Fibonacci(n);
    } else if (args.name == "pell") {
      v = Pell(n);
    } else {
      v = WestCount(n);
    }
    values.push_back(ToDecimal(v));
  }
  if (cfg.format == "json") {
    out = Json(values).dump() + "\n";
  } else if (cfg.format == "csv") {
    out = "n,value\n";
    for (int n = 0; n < args.terms; ++n) {
      absl::StrAppend(&out, n, ",", values[n], "\n");
    }
  } else {
    for (const auto& v : values) absl::StrAppend(&out, v, "\n");
  }
  return kExitOk;
}

}  // namespace

RunResult Run(const std::vector<std::string>& args) {
  CLI::App app{
      "Exact enumeration and verification for two-stack sortable "
      "permutations avoiding 132",
      "tssenum"};
  app.require_subcommand(1);
  RunConfig cfg;

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count members of S_n under constraints");
  count->add_option("--n", count_args.n, "Length");
  count->add_option("--n-max", count_args.n_max, "Tabulate n = 0..K");
  count->add_option("--split", count_args.split,
                    "Split counts by a statistic: rmax, length, inc(d), occ(tau)");
  count_args.constraint.Add(count);
  AddCommon(count, cfg);

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "List members in lexicographic order");
  enumerate->add_option("--n", enum_args.n, "Length")->required();
  enum_args.constraint.Add(enumerate);
  AddCommon(enumerate, cfg);

  SeriesArgs series_args;
  auto* series = app.add_subcommand("series", "Print generating-function coefficients");
  series->add_option("--family", series_args.family,
                     "Family, e.g. P132, P132_12d(3), RMAX(2), Q, TAU(3412)");
  series->add_option("--tau", series_args.tau,
                     "Pattern tau for the P132-and-tau recursion");
  series->add_option("--multivariate", series_args.multivariate,
                     "Substitution for x_2, x_3, ... e.g. \"2=1/2,3=0\"");
  series->add_flag("--q-structural", series_args.structural_q,
                   "Q from its structural decomposition");
  series->add_option("--terms", series_args.terms,
                     "Number of coefficients (x^0 .. x^{terms-1})")
      ->capture_default_str();
  AddCommon(series, cfg);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check oracle, generating functions and closed forms");
  verify->add_option("--scope", verify_args.scope,
                     "all, or a comma-separated family list")
      ->capture_default_str();
  verify->add_option("--max-n", verify_args.max_n, "Largest n to check")
      ->check(CLI::Range(0, kOracleCeiling))
      ->capture_default_str();
  AddCommon(verify, cfg, {"text", "json"});

  BijectionArgs bij_args;
  auto* bijection = app.add_subcommand("bijection", "Pell tiling bijection");
  bijection->require_subcommand(1);
  auto* encode = bijection->add_subcommand("encode", "Tiling -> permutation");
  encode->add_option("--tiling", bij_args.tiling, "Tokens D,R,B left to right")
      ->required();
  AddCommon(encode, cfg, {"text", "json"});
  auto* decode = bijection->add_subcommand("decode", "Permutation -> tiling");
  decode->add_option("--perm", bij_args.perm, "Member of P_n(132)")->required();
  AddCommon(decode, cfg, {"text", "json"});

  std::string sort_perm;
  auto* sortcheck = app.add_subcommand(
      "sortcheck", "Trace two stack-sort passes and both sortability tests");
  sortcheck->add_option("--perm", sort_perm, "Permutation")->required();
  AddCommon(sortcheck, cfg, {"text", "json"});

  SequenceArgs seq_args;
  auto* sequence = app.add_subcommand("sequence", "Print reference sequences");
  sequence->add_option("--name", seq_args.name, "fibonacci, pell or west")
      ->required()
      ->check(CLI::IsMember({"fibonacci", "pell", "west"}));
  sequence->add_option("--terms", seq_args.terms, "Number of terms")
      ->capture_default_str();
  AddCommon(sequence, cfg);

  RunResult result;
  std::ostringstream out;
  std::ostringstream err;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    result.out = out.str();
    result.err = err.str();
    result.exit_code = code == 0 ? kExitOk : kExitUsage;
    return result;
  }

  std::string payload;
  try {
    if (count->parsed()) {
      result.exit_code = DoCount(count_args, cfg, payload);
    } else if (enumerate->parsed()) {
      result.exit_code = DoEnumerate(enum_args, cfg, payload);
    } else if (series->parsed()) {
      result.exit_code = DoSeries(series_args, cfg, payload);
    } else if (verify->parsed()) {
      result.exit_code = DoVerify(verify_args, cfg, payload);
    } else if (encode->parsed()) {
      result.exit_code = DoEncode(bij_args, cfg, payload);
    } else if (decode->parsed()) {
      result.exit_code = DoDecode(bij_args, cfg, payload);
    } else if (sortcheck->parsed()) {
      result.exit_code = DoSortcheck(sort_perm, cfg, payload);
    } else if (sequence->parsed()) {
      result.exit_code = DoSequence(seq_args, cfg, payload);
    }
  } catch (const InputError& e) {
    result.exit_code = kExitUsage;
    result.err = absl::StrCat("error: ", e.what(), "\n");
    return result;
  }

  if (!cfg.output.empty()) {
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
      result.exit_code = kExitUsage;
      result.err = absl::StrCat("error: cannot write ", cfg.output, "\n");
      return result;
    }
    file << payload;
  } else {
    result.out = std::move(payload);
  }
  return result;
}

}  // namespace tss::cli
