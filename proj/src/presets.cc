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

#include "labeldp/presets.h"

#include <cmath>
#include <limits>

#include "labeldp/status.h"

namespace labeldp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// {epsilon, divisor, fixed epsilon1, zeta}
const std::vector<PresetRow>& CrimeTable() {
  static const auto* table = new std::vector<PresetRow>{
      {0.05, 2, 0, 0.4}, {0.1, 2, 0, 0.4},   {0.3, 2, 0, 0.4},
      {0.5, 2, 0, 0.4},  {0.8, 2, 0, 0.4},   {1, 2, 0, 0.4},
      {1.5, 2.5, 0, 0.4}, {2, 2.5, 0, 0.4},  {3, 3, 0, 0.4},
      {4, 3.5, 0, 0.4},  {6, 6, 0, 0.4},     {8, 7, 0, 0.4},
      {kInf, 0, kInf, 0.1},
  };
  return *table;
}

const std::vector<PresetRow>& CriteoTable() {
  static const auto* table = new std::vector<PresetRow>{
      {0.05, 0, 0.017, 70}, {0.1, 0, 0.017, 70}, {0.3, 0, 0.017, 70},
      {0.5, 0, 0.017, 70},  {0.8, 0, 0.017, 70}, {1, 0, 0.017, 70},
      {1.5, 0, 0.01, 70},   {2, 0, 0.01, 70},    {3, 0, 0.01, 70},
      {4, 0, 0.005, 70},    {6, 0, 0.003, 70},   {8, 0, 0.002, 70},
      {kInf, 0, kInf, 0.8},
  };
  return *table;
}

const std::vector<PresetRow>& HousingTable() {
  static const auto* table = new std::vector<PresetRow>{
      {0.05, 0, 0.017, 0.7}, {0.1, 0, 0.017, 0.5}, {0.3, 0, 0.017, 1.2},
      {0.5, 0, 0.017, 1},    {0.8, 0, 0.01, 2.2},  {1, 0, 0.008, 1.5},
      {1.5, 0, 0.008, 1.5},  {2, 0, 0.008, 1.5},   {3, 0, 0.007, 1.4},
      {4, 0, 0.007, 1.2},    {6, 0, 0.007, 0.7},   {8, 0, 0.007, 0.1},
      {kInf, 0, kInf, 0.1},
  };
  return *table;
}

}  // namespace

std::vector<absl::string_view> PresetNames() {
  return {"crime", "criteo", "housing"};
}

absl::StatusOr<std::vector<PresetRow>> PresetTable(absl::string_view name) {
  if (name == "crime") return CrimeTable();
  if (name == "criteo") return CriteoTable();
  if (name == "housing") return HousingTable();
  return absl::NotFoundError(absl::StrCat(
      "unknown preset '", name, "'; expected crime, criteo or housing"));
}

absl::StatusOr<PresetChoice> LookupPreset(absl::string_view name,
                                          double epsilon) {
  LABELDP_ASSIGN_OR_RETURN(std::vector<PresetRow> table, PresetTable(name));
  if (!(epsilon > 0.0)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kInvalidBudget, "epsilon = ", epsilon);
  }
  const PresetRow* row = &table.front();
  for (const PresetRow& candidate : table) {
    if (candidate.epsilon <= epsilon) row = &candidate;
  }
  if (std::isinf(epsilon)) return PresetChoice{kInf, table.back().zeta};

  const double epsilon1 =
      row->divisor > 0.0 ? epsilon / row->divisor : row->fixed_epsilon1;
  if (!(epsilon1 < epsilon)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kInvalidBudget, "preset '", name,
                       "' uses epsilon1 = ", epsilon1,
                       ", which does not fit in epsilon = ", epsilon);
  }
  return PresetChoice{epsilon1, row->zeta};
}

}  // namespace labeldp
