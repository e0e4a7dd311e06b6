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

// Choice of the randomization interval [A1, A2] for a step prior.
//
// For a fixed interval the best achievable probability that a prior-drawn
// label is reported inside its own zeta-neighborhood is
//
//   F(A1, A2) = 2 zeta * P(A1 <= Y <= A2) / (2 zeta + exp(-eps) (A2 - A1)).
//
// F is maximized over all intervals by enumerating bin pairs (i, j) with
// A1 in bin i and A2 in bin j, checking the bin endpoints and the stationary
// points of F inside each pair.

#ifndef LABELDP_INTERVAL_OPTIMIZER_H_
#define LABELDP_INTERVAL_OPTIMIZER_H_

#include <cstddef>
#include <cstdint>

#include "absl/status/statusor.h"
#include "labeldp/step_density.h"

namespace labeldp {

struct Interval {
  double a1 = 0.0;
  double a2 = 0.0;

  double length() const { return a2 - a1; }
  bool Contains(double y) const { return y >= a1 && y <= a2; }
};

// Stationary-point algebra for A1 in bin i and A2 in bin j.
struct CriticalPoints {
  size_t i = 0;
  size_t j = 0;
  double h = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;
  // A1 value at which dF/dA2 vanishes.
  double e1 = 0.0;
  // A2 value at which dF/dA1 vanishes.
  double e2 = 0.0;
};

struct OptimizationResult {
  Interval interval;
  double objective = 0.0;
  int64_t evaluations = 0;
};

struct ObjectiveGradient {
  double d_a1 = 0.0;
  double d_a2 = 0.0;
};

// F(a1, a2). Errors: NonPositiveZeta, NegativeEpsilon, ReversedBounds.
absl::StatusOr<double> Objective(const StepDensity& prior, double a1,
                                 double a2, double zeta, double epsilon);

// Requires i <= j < num_bins. Fails with EqualHeights when the two bin
// heights coincide (always the case for i == j), since e1 and e2 are then
// undefined.
absl::StatusOr<CriticalPoints> ComputeCriticalPoints(const StepDensity& prior,
                                                     size_t i, size_t j,
                                                     double zeta,
                                                     double epsilon);

// Closed-form partial derivatives of F for a1 < a2 both strictly inside the
// support and off the bin boundaries.
absl::StatusOr<ObjectiveGradient> ComputeObjectiveGradient(
    const StepDensity& prior, double a1, double a2, double zeta,
    double epsilon);

// Maximizer of F. Among candidates with equal F the longer interval wins,
// then the smaller a1.
absl::StatusOr<OptimizationResult> OptimalInterval(const StepDensity& prior,
                                                   double zeta,
                                                   double epsilon);

}  // namespace labeldp

#endif  // LABELDP_INTERVAL_OPTIMIZER_H_
