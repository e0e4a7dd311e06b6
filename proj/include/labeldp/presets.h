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

// Tuned (epsilon1, zeta) choices for three reference regression datasets:
// "crime" (labels in [0, 1]), "criteo" (sales amounts up to a few hundred)
// and "housing" (house values in units of 100k).

#ifndef LABELDP_PRESETS_H_
#define LABELDP_PRESETS_H_

#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"

namespace labeldp {

struct PresetRow {
  double epsilon;
  // Exactly one of the two is used: epsilon1 = epsilon / divisor when
  // divisor > 0, otherwise epsilon1 = fixed_epsilon1.
  double divisor;
  double fixed_epsilon1;
  double zeta;
};

struct PresetChoice {
  // Infinite for the no-privacy row.
  double epsilon1;
  double zeta;
};

std::vector<absl::string_view> PresetNames();

// Rows ordered by epsilon; the last row is epsilon = +inf.
absl::StatusOr<std::vector<PresetRow>> PresetTable(absl::string_view name);

// Row for `epsilon`: the exact row when tabulated, otherwise the largest
// tabulated epsilon below it (the first row for smaller budgets).
// InvalidBudget when the row's epsilon1 does not fit inside epsilon.
absl::StatusOr<PresetChoice> LookupPreset(absl::string_view name,
                                          double epsilon);

}  // namespace labeldp

#endif  // LABELDP_PRESETS_H_
