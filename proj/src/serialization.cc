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

#include "labeldp/serialization.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "labeldp/status.h"

namespace labeldp {

namespace {

// JSON has no infinity; non-finite values are written as strings.
Json NumberToJson(double value) {
  if (std::isfinite(value)) return value;
  if (std::isnan(value)) return "nan";
  return value > 0 ? "inf" : "-inf";
}

absl::StatusOr<double> RequireNumber(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    return absl::InvalidArgumentError(
        absl::StrCat("missing member '", key, "'"));
  }
  const Json& value = json.at(key);
  if (!value.is_number()) {
    return absl::InvalidArgumentError(
        absl::StrCat("member '", key, "' must be a number"));
  }
  return value.get<double>();
}

absl::StatusOr<std::vector<double>> RequireNumberArray(const Json& json,
                                                       const char* key) {
  if (!json.is_object() || !json.contains(key) || !json.at(key).is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat("member '", key, "' must be an array of numbers"));
  }
  std::vector<double> values;
  for (const Json& item : json.at(key)) {
    if (!item.is_number()) {
      return absl::InvalidArgumentError(
          absl::StrCat("member '", key, "' must contain only numbers"));
    }
    values.push_back(item.get<double>());
  }
  return values;
}

Json IntervalToJson(const Interval& interval) {
  return Json{{"a1", interval.a1}, {"a2", interval.a2}};
}

}  // namespace

Json StepDensityToJson(const StepDensity& density) {
  return Json{{"nodes", std::vector<double>(density.nodes().begin(),
                                            density.nodes().end())},
              {"heights", std::vector<double>(density.heights().begin(),
                                              density.heights().end())}};
}

absl::StatusOr<StepDensity> StepDensityFromJson(const Json& json) {
  LABELDP_ASSIGN_OR_RETURN(std::vector<double> nodes,
                           RequireNumberArray(json, "nodes"));
  LABELDP_ASSIGN_OR_RETURN(std::vector<double> heights,
                           RequireNumberArray(json, "heights"));
  return StepDensity::Create(nodes, heights, StepValues::kHeights);
}

Json RandomizerSpecToJson(const RandomizerSpec& spec) {
  Json json{{"a1", spec.a1()},
            {"a2", spec.a2()},
            {"zeta", spec.zeta()},
            {"epsilon", NumberToJson(spec.epsilon())},
            {"policy", std::string(PolicyName(spec.policy()))},
            {"gamma", spec.gamma()}};
  if (spec.neighborhood_scale() != 1.0) {
    json["test_neighborhood_scale"] = spec.neighborhood_scale();
  }
  return json;
}

absl::StatusOr<RandomizerSpec> RandomizerSpecFromJson(const Json& json) {
  LABELDP_ASSIGN_OR_RETURN(double a1, RequireNumber(json, "a1"));
  LABELDP_ASSIGN_OR_RETURN(double a2, RequireNumber(json, "a2"));
  LABELDP_ASSIGN_OR_RETURN(double zeta, RequireNumber(json, "zeta"));
  LABELDP_ASSIGN_OR_RETURN(double epsilon, RequireNumber(json, "epsilon"));
  PolicyKind policy = PolicyKind::kProjection;
  if (json.contains("policy")) {
    if (!json.at("policy").is_string()) {
      return absl::InvalidArgumentError("member 'policy' must be a string");
    }
    LABELDP_ASSIGN_OR_RETURN(policy,
                             ParsePolicy(json.at("policy").get<std::string>()));
  }
  LABELDP_ASSIGN_OR_RETURN(RandomizerSpec spec,
                           RandomizerSpec::Create(a1, a2, zeta, epsilon, policy));
  if (json.contains("test_neighborhood_scale")) {
    LABELDP_ASSIGN_OR_RETURN(double scale,
                             RequireNumber(json, "test_neighborhood_scale"));
    if (!(scale > 0.0)) {
      return absl::InvalidArgumentError(
          "test_neighborhood_scale must be positive");
    }
    spec = spec.WithNeighborhoodScaleForTesting(scale);
  }
  return spec;
}

Json HistogramPlanToJson(const HistogramPlan& plan) {
  return Json{{"mu", plan.mu},
              {"sigma", plan.sigma},
              {"k0", plan.k0},
              {"k1", plan.k1},
              {"nodes", plan.nodes},
              {"bin_counts", plan.bin_counts},
              {"bin_masses", plan.bin_masses},
              {"degenerate_fallback", plan.degenerate_fallback}};
}

Json OptimizationResultToJson(const OptimizationResult& result) {
  return Json{{"a1", result.interval.a1},
              {"a2", result.interval.a2},
              {"objective", result.objective},
              {"evaluations", result.evaluations}};
}

Json AuditReportToJson(const AuditReport& report) {
  Json json{{"analytic_max_ratio", NumberToJson(report.analytic_max_ratio)},
            {"epsilon_claimed", NumberToJson(report.epsilon_claimed)},
            {"pass_analytic", report.pass_analytic},
            {"policy", std::string(PolicyName(report.policy))},
            {"samples_used", report.samples_used},
            {"pass", report.pass()}};
  if (report.empirical.has_value()) {
    json["empirical"] = Json{
        {"max_log_ratio", NumberToJson(report.empirical->max_log_ratio)},
        {"slack", NumberToJson(report.empirical->slack)},
        {"max_lower_bound", NumberToJson(report.empirical->max_lower_bound)},
        {"pass", report.empirical->pass}};
  }
  return json;
}

Json PipelineReportToJson(const PipelineReport& report) {
  Json json{
      {"split",
       Json{{"epsilon_total", report.split.epsilon_total()},
            {"epsilon1", report.split.epsilon1()},
            {"epsilon2", report.split.epsilon2()}}},
      {"plan", HistogramPlanToJson(report.plan)},
      {"prior", StepDensityToJson(report.prior)},
      {"prior_restricted_to_bounds", report.prior_restricted_to_bounds},
      {"interval", IntervalToJson(report.interval)},
      {"objective", report.objective},
      {"gamma", report.gamma},
      {"zeta", report.zeta},
      {"policy", std::string(PolicyName(report.policy))},
      {"label_bounds",
       Json{{"lo", report.label_bounds.lo}, {"hi", report.label_bounds.hi}}},
      {"seed", report.seed},
      {"prior_stage_draws", report.prior_stage_draws},
      {"mechanism_stage_draws", report.mechanism_stage_draws},
      {"empirical_mse_vs_original", report.empirical_mse_vs_original},
      {"expected_mse", report.expected_mse},
      {"expected_mse_paper_formula", report.expected_mse_paper_formula},
  };
  json["sigma_policy"] = report.fixed_sigma.has_value()
                             ? Json{{"fixed", *report.fixed_sigma}}
                             : Json("std_of_randomized");
  return json;
}

absl::StatusOr<Json> ParseJson(const std::string& text) {
  Json json = Json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (json.is_discarded()) {
    return absl::InvalidArgumentError("malformed JSON");
  }
  return json;
}

absl::StatusOr<Json> ReadJsonFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto json = ParseJson(buffer.str());
  if (!json.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", json.status().message()));
  }
  return json;
}

absl::Status WriteJsonFile(const std::string& path, const Json& json) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path));
  }
  out << json.dump(2) << '\n';
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace labeldp
