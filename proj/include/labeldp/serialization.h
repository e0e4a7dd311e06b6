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

// JSON forms of the library's artifacts. Doubles are written in shortest
// round-trip form, so parse(dump(x)) reproduces every value exactly.

#ifndef LABELDP_SERIALIZATION_H_
#define LABELDP_SERIALIZATION_H_

#include <string>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "labeldp/audit.h"
#include "labeldp/interval_optimizer.h"
#include "labeldp/pipeline.h"
#include "labeldp/prior_estimator.h"
#include "labeldp/rp_mechanism.h"
#include "labeldp/step_density.h"

namespace labeldp {

using Json = nlohmann::json;

// {"nodes": [...], "heights": [...]}
Json StepDensityToJson(const StepDensity& density);
absl::StatusOr<StepDensity> StepDensityFromJson(const Json& json);

// {"a1", "a2", "zeta", "epsilon", "policy"}; "gamma" is written for
// readability and ignored on input. A "test_neighborhood_scale" member, when
// present, applies RandomizerSpec::WithNeighborhoodScaleForTesting.
Json RandomizerSpecToJson(const RandomizerSpec& spec);
absl::StatusOr<RandomizerSpec> RandomizerSpecFromJson(const Json& json);

Json HistogramPlanToJson(const HistogramPlan& plan);
Json OptimizationResultToJson(const OptimizationResult& result);
Json AuditReportToJson(const AuditReport& report);
Json PipelineReportToJson(const PipelineReport& report);

absl::StatusOr<Json> ParseJson(const std::string& text);
absl::StatusOr<Json> ReadJsonFile(const std::string& path);
absl::Status WriteJsonFile(const std::string& path, const Json& json);

}  // namespace labeldp

#endif  // LABELDP_SERIALIZATION_H_
