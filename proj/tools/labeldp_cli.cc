// Copyright 2026 The labeldp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// labeldp: command-line front end.
//
//   labeldp optimal-interval --prior P.json --zeta Z --epsilon E
//   labeldp estimate-prior --input D.csv --label-col y --eps1 E --output P.json
//   labeldp privatize --input D.csv --output O.csv --label-col y --epsilon E
//   labeldp audit --spec S.json [--empirical]
//   labeldp bench --synthetic N D --epsilon 0.1,0.5,inf
//
// Exit codes: 0 success, 2 configuration error, 3 I/O error, 4 audit failure.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_format.h"
#include "absl/strings/str_split.h"
#include "labeldp/audit.h"
#include "labeldp/bench.h"
#include "labeldp/csv.h"
#include "labeldp/interval_optimizer.h"
#include "labeldp/pipeline.h"
#include "labeldp/presets.h"
#include "labeldp/prior_estimator.h"
#include "labeldp/random.h"
#include "labeldp/rp_mechanism.h"
#include "labeldp/serialization.h"
#include "labeldp/status.h"

namespace labeldp {
namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitAuditFailure = 4;

// Failure carrying the exit code it maps to.
struct CliError {
  int exit_code;
  std::string message;
};

CliError ConfigError(const absl::Status& status) {
  return {kExitConfig, std::string(status.message())};
}
CliError ConfigError(std::string message) {
  return {kExitConfig, std::move(message)};
}
CliError IoError(const absl::Status& status) {
  return {kExitIo, std::string(status.message())};
}

template <typename T>
using CliResult = std::variant<T, CliError>;

#define CLI_TRY(lhs, expr, kind)                             \
  auto CLI_TMP_##lhs = (expr);                               \
  if (!CLI_TMP_##lhs.ok()) return kind(CLI_TMP_##lhs.status()); \
  auto lhs = *std::move(CLI_TMP_##lhs)

#define CLI_CHECK(expr, kind)                  \
  do {                                         \
    absl::Status cli_status_ = (expr);         \
    if (!cli_status_.ok()) return kind(cli_status_); \
  } while (0)

absl::StatusOr<double> ParseEpsilon(const std::string& text) {
  double value;
  if (!absl::SimpleAtod(text, &value) || std::isnan(value)) {
    return absl::InvalidArgumentError(
        absl::StrCat("cannot parse epsilon '", text, "'"));
  }
  return value;
}

absl::StatusOr<uint64_t> ResolveSeed(const std::optional<uint64_t>& flag) {
  if (flag.has_value()) return *flag;
  const char* env = std::getenv("LABELDP_SEED");
  if (env == nullptr || *env == '\0') return 0;
  uint64_t seed;
  if (!absl::SimpleAtoi(env, &seed)) {
    return absl::InvalidArgumentError(
        absl::StrCat("LABELDP_SEED is not an unsigned integer: '", env, "'"));
  }
  return seed;
}

std::optional<ClipBounds> BoundsFromFlag(const std::vector<double>& flag) {
  if (flag.size() != 2) return std::nullopt;
  return ClipBounds{flag[0], flag[1]};
}

// Public bounds from the flag, or the observed label range with a warning.
absl::StatusOr<ClipBounds> ResolveBounds(const std::vector<double>& flag,
                                         const std::vector<double>& labels) {
  if (auto bounds = BoundsFromFlag(flag); bounds.has_value()) {
    if (!(bounds->lo < bounds->hi)) {
      return absl::InvalidArgumentError("--label-bounds needs LO < HI");
    }
    return *bounds;
  }
  if (labels.empty()) return absl::InvalidArgumentError("no labels");
  const auto [lo, hi] = std::minmax_element(labels.begin(), labels.end());
  std::cerr << "warning: --label-bounds not given; using the observed label "
               "range ["
            << *lo << ", " << *hi
            << "], which is not private. Pass public bounds for a DP "
               "release.\n";
  const double pad = *hi > *lo ? 0.0 : 0.5;
  return ClipBounds{*lo - pad, *hi + pad};
}

SigmaPolicy SigmaFromFlag(const std::optional<double>& sigma) {
  return sigma.has_value() ? SigmaPolicy::Fixed(*sigma)
                           : SigmaPolicy::StdOfRandomized();
}

absl::Status WriteJsonOrPrint(const std::optional<std::string>& path,
                              const Json& json) {
  if (path.has_value()) return WriteJsonFile(*path, json);
  std::cout << json.dump(2) << "\n";
  return absl::OkStatus();
}

struct TableInput {
  CsvTable table;
  size_t label_column;
};

CliResult<TableInput> LoadTable(const std::string& path,
                                const std::string& label_col) {
  CLI_TRY(table, ReadCsvFile(path), IoError);
  CLI_TRY(column, table.ColumnIndex(label_col), ConfigError);
  return TableInput{std::move(table), column};
}

// ---------------------------------------------------------------------------

struct OptimalIntervalArgs {
  std::string prior;
  double zeta = 0.0;
  std::string epsilon;
  std::optional<std::string> output;
};

CliResult<int> RunOptimalInterval(const OptimalIntervalArgs& args) {
  CLI_TRY(json, ReadJsonFile(args.prior), IoError);
  CLI_TRY(prior, StepDensityFromJson(json), IoError);
  CLI_TRY(epsilon, ParseEpsilon(args.epsilon), ConfigError);
  CLI_TRY(result, OptimalInterval(prior, args.zeta, epsilon), ConfigError);
  Json out = OptimizationResultToJson(result);
  out["zeta"] = args.zeta;
  out["epsilon"] = epsilon;
  CLI_CHECK(WriteJsonOrPrint(args.output, out), IoError);
  return 0;
}

struct EstimatePriorArgs {
  std::string input;
  std::string label_col;
  double eps1 = 0.0;
  std::optional<double> sigma;
  std::vector<double> label_bounds;
  std::optional<uint64_t> seed;
  std::string output;
  std::optional<std::string> plan;
};

CliResult<int> RunEstimatePrior(const EstimatePriorArgs& args) {
  CLI_TRY(seed, ResolveSeed(args.seed), ConfigError);
  auto loaded = LoadTable(args.input, args.label_col);
  if (auto* error = std::get_if<CliError>(&loaded)) return *error;
  const TableInput& input = std::get<TableInput>(loaded);
  CLI_TRY(dataset, DatasetFromCsv(input.table, input.label_column), IoError);
  const std::vector<double> labels = dataset.Labels();
  CLI_TRY(bounds, ResolveBounds(args.label_bounds, labels), ConfigError);
  CLI_TRY(noise, AdditiveNoiseSpec::Laplace(args.eps1, bounds), ConfigError);

  // Same per-row streams as the prior stage of `privatize`.
  std::vector<double> randomized;
  randomized.reserve(labels.size());
  for (size_t r = 0; r < labels.size(); ++r) {
    RandomStream stream(DeriveSeed(seed, kPriorStageTag, r));
    randomized.push_back(AddNoise(labels[r], noise, stream));
  }
  auto estimate = BuildHistogramPrior(randomized, SigmaFromFlag(args.sigma));
  if (!estimate.ok() &&
      HasErrorTag(estimate.status(), error_tag::kDegenerateSpread)) {
    std::cerr << "warning: " << estimate.status().message()
              << "; using a single-bin prior\n";
    estimate =
        DegenerateFallbackPrior(randomized.front(),
                                static_cast<int64_t>(randomized.size()));
  }
  if (!estimate.ok()) return ConfigError(estimate.status());

  Json prior = StepDensityToJson(estimate->prior);
  Json plan = HistogramPlanToJson(estimate->plan);
  plan["epsilon1"] = args.eps1;
  plan["seed"] = seed;
  plan["label_bounds"] = Json{{"lo", bounds.lo}, {"hi", bounds.hi}};
  CLI_CHECK(WriteJsonFile(args.output, prior), IoError);
  if (args.plan.has_value()) {
    CLI_CHECK(WriteJsonFile(*args.plan, plan), IoError);
  } else {
    std::cout << plan.dump(2) << "\n";
  }
  return 0;
}

struct PrivatizeArgs {
  std::string input;
  std::string output;
  std::string label_col;
  std::string epsilon;
  std::optional<double> eps1;
  std::optional<double> zeta;
  std::optional<std::string> preset;
  std::string policy = "projection";
  std::optional<double> sigma;
  std::vector<double> label_bounds;
  bool keep_original = false;
  bool no_restrict_prior = false;
  std::optional<std::string> report;
  std::optional<uint64_t> seed;
};

CliResult<int> RunPrivatize(const PrivatizeArgs& args) {
  CLI_TRY(seed, ResolveSeed(args.seed), ConfigError);
  CLI_TRY(epsilon, ParseEpsilon(args.epsilon), ConfigError);
  if (!(epsilon > 0.0) || std::isinf(epsilon)) {
    return ConfigError("privatize needs a finite --epsilon > 0");
  }
  CLI_TRY(policy, ParsePolicy(args.policy), ConfigError);

  double eps1 = epsilon / 2.0;
  double zeta = PipelineOptions().zeta;
  if (args.preset.has_value()) {
    CLI_TRY(choice, LookupPreset(*args.preset, epsilon), ConfigError);
    eps1 = choice.epsilon1;
    zeta = choice.zeta;
  }
  if (args.eps1.has_value()) eps1 = *args.eps1;
  if (args.zeta.has_value()) zeta = *args.zeta;
  CLI_TRY(split, PrivacyBudgetSplit::Create(epsilon, eps1), ConfigError);

  auto loaded = LoadTable(args.input, args.label_col);
  if (auto* error = std::get_if<CliError>(&loaded)) return *error;
  const TableInput& input = std::get<TableInput>(loaded);
  CLI_TRY(dataset, DatasetFromCsv(input.table, input.label_column), IoError);
  CLI_TRY(bounds, ResolveBounds(args.label_bounds, dataset.Labels()),
          ConfigError);
  dataset.label_bounds = bounds;

  PipelineOptions options{.zeta = zeta,
                          .policy = policy,
                          .sigma_policy = SigmaFromFlag(args.sigma),
                          .seed = seed,
                          .restrict_prior_to_bounds = !args.no_restrict_prior};
  CLI_TRY(result, PrivatizeDataset(dataset, split, options), ConfigError);
  if (result.report.plan.degenerate_fallback) {
    std::cerr << "warning: randomized labels had no spread; used a "
                 "single-bin prior\n";
  }
  if (args.keep_original) {
    std::cerr << "warning: --keep-original writes the true labels next to "
                 "the private ones; the output is not private\n";
  }
  CLI_TRY(csv,
          RenderCsvWithLabels(input.table, input.label_column,
                              result.dataset.Labels(), args.keep_original),
          ConfigError);
  CLI_CHECK(WriteTextFile(args.output, csv), IoError);

  Json report = PipelineReportToJson(result.report);
  report["config"] = Json{{"input", args.input},
                          {"label_col", args.label_col},
                          {"epsilon", epsilon},
                          {"preset", args.preset.value_or("")},
                          {"keep_original", args.keep_original}};
  if (args.report.has_value()) {
    CLI_CHECK(WriteJsonFile(*args.report, report), IoError);
  }
  std::cerr << absl::StrFormat(
      "privatized %d rows: eps1=%g eps2=%g zeta=%g interval=[%g, %g]\n",
      dataset.rows.size(), split.epsilon1(), split.epsilon2(), zeta,
      result.report.interval.a1, result.report.interval.a2);
  return 0;
}

struct AuditArgs {
  std::string spec;
  bool empirical = false;
  uint64_t samples = EmpiricalAuditOptions().samples_per_label;
  int bins = EmpiricalAuditOptions().bins;
  double significance = EmpiricalAuditOptions().significance;
  std::vector<std::string> pairs;
  std::optional<uint64_t> seed;
  std::optional<std::string> output;
};

void PrintAuditTable(const RandomizerSpec& spec, const AuditReport& report) {
  auto verdict = [](bool pass) { return pass ? "PASS" : "FAIL"; };
  std::cout << absl::StrFormat(
      "spec: [%g, %g] zeta=%g epsilon=%g policy=%s\n", spec.a1(), spec.a2(),
      spec.zeta(), spec.epsilon(), PolicyName(spec.policy()));
  std::cout << absl::StrFormat("%-10s %-38s %s\n", "check", "value",
                               "result");
  std::cout << absl::StrFormat(
      "%-10s %-38s %s\n", "analytic",
      absl::StrFormat("max ratio %.9g vs e^eps %.9g", report.analytic_max_ratio,
                      std::exp(report.epsilon_claimed)),
      verdict(report.pass_analytic));
  if (report.empirical.has_value()) {
    const EmpiricalAuditResult& e = *report.empirical;
    std::cout << absl::StrFormat(
        "%-10s %-38s %s\n", "empirical",
        absl::StrFormat("max log ratio %.4g (lower bound %.4g)",
                        e.max_log_ratio, e.max_lower_bound),
        verdict(e.pass));
    std::cout << absl::StrFormat("samples drawn: %d\n", report.samples_used);
  }
  std::cout << "overall: " << verdict(report.pass()) << "\n";
}

CliResult<int> RunAudit(const AuditArgs& args) {
  CLI_TRY(json, ReadJsonFile(args.spec), IoError);
  CLI_TRY(spec, RandomizerSpecFromJson(json), IoError);
  AuditReport report = AnalyticAudit(spec);
  if (args.empirical) {
    CLI_TRY(seed, ResolveSeed(args.seed), ConfigError);
    std::vector<std::pair<double, double>> pairs = DefaultAuditPairs(spec);
    for (const std::string& text : args.pairs) {
      std::vector<std::string> parts = absl::StrSplit(text, ',');
      double y;
      double y_prime;
      if (parts.size() != 2 || !absl::SimpleAtod(parts[0], &y) ||
          !absl::SimpleAtod(parts[1], &y_prime)) {
        return ConfigError(
            absl::StrCat("--pair expects Y,Y' but got '", text, "'"));
      }
      pairs.emplace_back(y, y_prime);
    }
    EmpiricalAuditOptions options{.samples_per_label = args.samples,
                                  .bins = args.bins,
                                  .significance = args.significance};
    RandomStream rng(seed);
    CLI_TRY(empirical, EmpiricalAudit(spec, pairs, options, rng), ConfigError);
    report = empirical;
  }
  PrintAuditTable(spec, report);
  Json out = AuditReportToJson(report);
  out["spec"] = RandomizerSpecToJson(spec);
  if (args.output.has_value()) {
    CLI_CHECK(WriteJsonFile(*args.output, out), IoError);
  }
  return report.pass() ? 0 : kExitAuditFailure;
}

struct BenchArgs {
  std::optional<std::string> input;
  std::optional<std::string> label_col;
  std::vector<size_t> synthetic;
  std::vector<std::string> epsilons = {"0.1", "0.5", "1", "inf"};
  int trials = 10;
  std::string preset = "crime";
  std::optional<double> eps1;
  std::optional<double> zeta;
  std::string policy = "projection";
  std::optional<double> sigma;
  double ridge = 1e-4;
  double gaussian_delta = 1e-4;
  std::vector<double> label_bounds;
  bool no_restrict_prior = false;
  std::optional<std::string> output;
  std::optional<uint64_t> seed;
};

CliResult<int> RunBenchCommand(const BenchArgs& args) {
  CLI_TRY(seed, ResolveSeed(args.seed), ConfigError);
  CLI_TRY(policy, ParsePolicy(args.policy), ConfigError);
  BenchConfig config;
  config.trials = args.trials;
  config.seed = seed;
  config.ridge_lambda = args.ridge;
  config.gaussian_delta = args.gaussian_delta;
  config.preset = args.preset;
  config.epsilon1 = args.eps1;
  config.zeta = args.zeta;
  config.policy = policy;
  config.sigma_policy = SigmaFromFlag(args.sigma);
  config.restrict_prior_to_bounds = !args.no_restrict_prior;
  for (const std::string& text : args.epsilons) {
    CLI_TRY(epsilon, ParseEpsilon(text), ConfigError);
    config.epsilons.push_back(epsilon);
  }

  BenchData data;
  if (!args.synthetic.empty()) {
    if (args.input.has_value()) {
      return ConfigError("give either --synthetic or --input, not both");
    }
    data = MakeSyntheticTask(args.synthetic[0], args.synthetic[1], seed);
    config.label_bounds = {0.0, 1.0};
    if (auto bounds = BoundsFromFlag(args.label_bounds)) {
      config.label_bounds = *bounds;
    }
  } else {
    if (!args.input.has_value() || !args.label_col.has_value()) {
      return ConfigError("bench needs --synthetic N D or --input with --label-col");
    }
    auto loaded = LoadTable(*args.input, *args.label_col);
    if (auto* error = std::get_if<CliError>(&loaded)) return *error;
    const TableInput& input = std::get<TableInput>(loaded);
    CLI_TRY(features, NumericFeaturesFromCsv(input.table, input.label_column),
            IoError);
    CLI_TRY(dataset, DatasetFromCsv(input.table, input.label_column), IoError);
    data.labels = dataset.Labels();
    const size_t cols = features.empty() ? 0 : features.front().size();
    data.features = {features.size(), cols, {}};
    for (const auto& row : features) {
      data.features.data.insert(data.features.data.end(), row.begin(),
                                row.end());
    }
    CLI_TRY(bounds, ResolveBounds(args.label_bounds, data.labels),
            ConfigError);
    config.label_bounds = bounds;
  }

  CLI_TRY(rows, RunBench(data, config), ConfigError);
  const std::string csv = RenderBenchCsv(rows);
  if (args.output.has_value()) {
    CLI_CHECK(WriteTextFile(*args.output, csv), IoError);
  }
  std::cout << absl::StrFormat("%-14s %8s %26s\n", "mechanism", "epsilon",
                               "test MSE (mean +- std)");
  for (const BenchRow& row : rows) {
    std::cout << absl::StrFormat(
        "%-14s %8s %14.6g +- %-9.3g %s\n", BenchMechanismName(row.mechanism),
        std::isinf(row.epsilon) ? "inf" : absl::StrFormat("%g", row.epsilon),
        row.mean_mse, row.std_mse, row.note);
  }
  return 0;
}

int Report(const CliResult<int>& result) {
  if (const auto* error = std::get_if<CliError>(&result)) {
    std::cerr << "error: " << error->message << "\n";
    return error->exit_code;
  }
  return std::get<int>(result);
}

int Main(int argc, char** argv) {
  CLI::App app{"Label differential privacy for regression labels"};
  app.require_subcommand(1);
  std::optional<uint64_t> seed;

  OptimalIntervalArgs oi;
  CLI::App* oi_cmd = app.add_subcommand(
      "optimal-interval", "Best randomization interval for a step prior");
  oi_cmd->add_option("--prior", oi.prior, "Prior JSON")->required();
  oi_cmd->add_option("--zeta", oi.zeta, "Neighborhood radius")->required();
  oi_cmd->add_option("--epsilon", oi.epsilon, "Privacy budget")->required();
  oi_cmd->add_option("--output", oi.output, "Output JSON (default stdout)");

  EstimatePriorArgs ep;
  CLI::App* ep_cmd = app.add_subcommand(
      "estimate-prior", "Histogram prior from Laplace-noised labels");
  ep_cmd->add_option("--input", ep.input, "Input CSV")->required();
  ep_cmd->add_option("--label-col", ep.label_col, "Label column")->required();
  ep_cmd->add_option("--eps1", ep.eps1, "Budget for the prior")->required();
  ep_cmd->add_option("--sigma", ep.sigma, "Fixed bin width");
  ep_cmd->add_option("--label-bounds", ep.label_bounds, "Public LO HI")
      ->expected(2);
  ep_cmd->add_option("--seed", ep.seed, "Seed (default $LABELDP_SEED or 0)");
  ep_cmd->add_option("--output", ep.output, "Prior JSON")->required();
  ep_cmd->add_option("--plan", ep.plan, "Plan JSON (default stdout)");

  PrivatizeArgs pv;
  CLI::App* pv_cmd =
      app.add_subcommand("privatize", "Privatize the label column of a CSV");
  pv_cmd->add_option("--input", pv.input, "Input CSV")->required();
  pv_cmd->add_option("--output", pv.output, "Output CSV")->required();
  pv_cmd->add_option("--label-col", pv.label_col, "Label column")->required();
  pv_cmd->add_option("--epsilon", pv.epsilon, "Total budget")->required();
  pv_cmd->add_option("--eps1", pv.eps1, "Prior budget (default epsilon/2)");
  pv_cmd->add_option("--zeta", pv.zeta, "Neighborhood radius (default 0.1)");
  pv_cmd->add_option("--preset", pv.preset, "crime, criteo or housing");
  pv_cmd->add_option("--policy", pv.policy, "projection or uniform_outside");
  pv_cmd->add_option("--sigma", pv.sigma, "Fixed histogram bin width");
  pv_cmd->add_option("--label-bounds", pv.label_bounds, "Public LO HI")
      ->expected(2);
  pv_cmd->add_flag("--keep-original", pv.keep_original,
                   "Also write the true labels (testing only, not private)");
  pv_cmd->add_flag("--no-restrict-prior", pv.no_restrict_prior,
                   "Search the interval over the unrestricted histogram");
  pv_cmd->add_option("--report", pv.report, "Report JSON");
  pv_cmd->add_option("--seed", pv.seed, "Seed (default $LABELDP_SEED or 0)");

  AuditArgs au;
  CLI::App* au_cmd =
      app.add_subcommand("audit", "Check the label-DP guarantee of a spec");
  au_cmd->add_option("--spec", au.spec, "Randomizer spec JSON")->required();
  au_cmd->add_flag("--empirical", au.empirical, "Also run a sampling audit");
  au_cmd->add_option("--samples", au.samples, "Samples per label");
  au_cmd->add_option("--bins", au.bins, "Histogram bins");
  au_cmd->add_option("--significance", au.significance, "Family-wise level");
  au_cmd->add_option("--pair", au.pairs, "Extra pair Y,Y' (repeatable)");
  au_cmd->add_option("--seed", au.seed, "Seed (default $LABELDP_SEED or 0)");
  au_cmd->add_option("--output", au.output, "Audit report JSON");

  BenchArgs bn;
  CLI::App* bn_cmd = app.add_subcommand(
      "bench", "Ridge-regression comparison of label randomizers");
  bn_cmd->add_option("--input", bn.input, "CSV with numeric features");
  bn_cmd->add_option("--label-col", bn.label_col, "Label column");
  bn_cmd->add_option("--synthetic", bn.synthetic, "Synthetic task N D")
      ->expected(2);
  bn_cmd->add_option("--epsilon", bn.epsilons, "Budgets, 'inf' for none")
      ->delimiter(',');
  bn_cmd->add_option("--trials", bn.trials, "Trials per cell");
  bn_cmd->add_option("--preset", bn.preset, "Preset for rp_with_prior");
  bn_cmd->add_option("--eps1", bn.eps1, "Prior budget override");
  bn_cmd->add_option("--zeta", bn.zeta, "Neighborhood radius override");
  bn_cmd->add_option("--policy", bn.policy, "projection or uniform_outside");
  bn_cmd->add_option("--sigma", bn.sigma, "Fixed histogram bin width");
  bn_cmd->add_option("--ridge", bn.ridge, "Ridge coefficient");
  bn_cmd->add_option("--gaussian-delta", bn.gaussian_delta, "Gaussian delta");
  bn_cmd->add_option("--label-bounds", bn.label_bounds, "Public LO HI")
      ->expected(2);
  bn_cmd->add_flag("--no-restrict-prior", bn.no_restrict_prior,
                   "Search the interval over the unrestricted histogram");
  bn_cmd->add_option("--output", bn.output, "Output CSV");
  bn_cmd->add_option("--seed", bn.seed, "Seed (default $LABELDP_SEED or 0)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (*oi_cmd) return Report(RunOptimalInterval(oi));
  if (*ep_cmd) return Report(RunEstimatePrior(ep));
  if (*pv_cmd) return Report(RunPrivatize(pv));
  if (*au_cmd) return Report(RunAudit(au));
  if (*bn_cmd) return Report(RunBenchCommand(bn));
  return kExitConfig;
}

}  // namespace
}  // namespace labeldp

int main(int argc, char** argv) { return labeldp::Main(argc, argv); }
