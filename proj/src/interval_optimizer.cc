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

#include "labeldp/interval_optimizer.h"

#include <cmath>

#include "labeldp/status.h"

namespace labeldp {

namespace {

absl::Status ValidateParameters(double zeta, double epsilon) {
  if (!(zeta > 0.0) || !std::isfinite(zeta)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kNonPositiveZeta, "zeta = ", zeta);
  }
  if (!(epsilon >= 0.0)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kNegativeEpsilon, "epsilon = ", epsilon);
  }
  return absl::OkStatus();
}

// F without argument checks; a1 <= a2 assumed.
double EvaluateObjective(const StepDensity& prior, double a1, double a2,
                         double zeta, double decay) {
  double mass = prior.MassBetween(a1, a2);
  if (mass <= 0.0) return 0.0;
  return 2.0 * zeta * mass / (2.0 * zeta + decay * (a2 - a1));
}

// alpha_i n_{i+1} + sum_{i<l<j} alpha_l (n_{l+1} - n_l) - alpha_j n_j, which
// makes P(A1 <= Y <= A2) = alpha_j A2 - alpha_i A1 + h for A1 in bin i and
// A2 in bin j > i. Within a single bin the mass is alpha_i (A2 - A1), so the
// same identity holds with h = 0.
double MassOffset(const StepDensity& prior, size_t i, size_t j) {
  if (i == j) return 0.0;
  auto nodes = prior.nodes();
  auto heights = prior.heights();
  return heights[i] * nodes[i + 1] + prior.MassBetween(nodes[i + 1], nodes[j]) -
         heights[j] * nodes[j];
}

// Strict preference order between candidate intervals.
bool Improves(double f, const Interval& candidate, double best_f,
              const Interval& best) {
  if (f != best_f) return f > best_f;
  if (candidate.length() != best.length()) {
    return candidate.length() > best.length();
  }
  return candidate.a1 < best.a1;
}

}  // namespace

absl::StatusOr<double> Objective(const StepDensity& prior, double a1,
                                 double a2, double zeta, double epsilon) {
  LABELDP_RETURN_IF_ERROR(ValidateParameters(zeta, epsilon));
  if (a1 > a2) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kReversedBounds, "a1 = ", a1, " > a2 = ", a2);
  }
  return EvaluateObjective(prior, a1, a2, zeta, std::exp(-epsilon));
}

absl::StatusOr<CriticalPoints> ComputeCriticalPoints(const StepDensity& prior,
                                                     size_t i, size_t j,
                                                     double zeta,
                                                     double epsilon) {
  LABELDP_RETURN_IF_ERROR(ValidateParameters(zeta, epsilon));
  if (i > j || j >= prior.num_bins()) {
    return absl::OutOfRangeError(absl::StrCat(
        "bin pair (", i, ", ", j, ") invalid for ", prior.num_bins(), " bins"));
  }
  auto heights = prior.heights();
  const double alpha_i = heights[i];
  const double alpha_j = heights[j];
  if (alpha_i == alpha_j) {
    return TaggedError(absl::StatusCode::kFailedPrecondition,
                       error_tag::kEqualHeights, "alpha_", i, " == alpha_", j,
                       " = ", alpha_i);
  }
  const double decay = std::exp(-epsilon);
  CriticalPoints points;
  points.i = i;
  points.j = j;
  points.h = MassOffset(prior, i, j);
  points.c1 = 2.0 * zeta * alpha_i - decay * points.h;
  points.c2 = 2.0 * zeta * alpha_j - decay * points.h;
  const double slope = decay * (alpha_j - alpha_i);
  points.e1 = points.c2 / slope;
  points.e2 = points.c1 / slope;
  return points;
}

absl::StatusOr<ObjectiveGradient> ComputeObjectiveGradient(
    const StepDensity& prior, double a1, double a2, double zeta,
    double epsilon) {
  LABELDP_RETURN_IF_ERROR(ValidateParameters(zeta, epsilon));
  if (!(a1 < a2) || a1 < prior.lower() || a2 > prior.upper()) {
    return absl::InvalidArgumentError(
        absl::StrCat("gradient needs lower <= a1 < a2 <= upper, got [", a1,
                     ", ", a2, "]"));
  }
  const size_t i = static_cast<size_t>(prior.BinIndex(a1));
  const size_t j = static_cast<size_t>(prior.BinIndex(a2));
  auto heights = prior.heights();
  const double decay = std::exp(-epsilon);
  const double h = MassOffset(prior, i, j);
  const double c1 = 2.0 * zeta * heights[i] - decay * h;
  const double c2 = 2.0 * zeta * heights[j] - decay * h;
  const double gamma = 2.0 * zeta + decay * (a2 - a1);
  const double scale = 2.0 * zeta / (gamma * gamma);
  const double cross = decay * (heights[i] - heights[j]);
  return ObjectiveGradient{.d_a1 = -scale * (cross * a2 + c1),
                           .d_a2 = scale * (cross * a1 + c2)};
}

absl::StatusOr<OptimizationResult> OptimalInterval(const StepDensity& prior,
                                                   double zeta,
                                                   double epsilon) {
  LABELDP_RETURN_IF_ERROR(ValidateParameters(zeta, epsilon));
  const double decay = std::exp(-epsilon);
  auto nodes = prior.nodes();
  const size_t k = prior.num_bins();

  OptimizationResult best;
  best.interval = {nodes.front(), nodes.front()};
  best.objective = 0.0;

  auto consider = [&](double a1, double a2) {
    if (a1 > a2) return;
    ++best.evaluations;
    const double f = EvaluateObjective(prior, a1, a2, zeta, decay);
    const Interval candidate{a1, a2};
    if (Improves(f, candidate, best.objective, best.interval)) {
      best.objective = f;
      best.interval = candidate;
    }
  };

  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) {
      const double l1 = nodes[i], l2 = nodes[i + 1];
      const double m1 = nodes[j], m2 = nodes[j + 1];
      consider(l1, m1);
      consider(l1, m2);
      consider(l2, m1);
      consider(l2, m2);

      auto points = ComputeCriticalPoints(prior, i, j, zeta, epsilon);
      if (!points.ok()) continue;  // EqualHeights: endpoints only.
      const double e1 = points->e1;
      const double e2 = points->e2;
      const bool e1_inside = l1 < e1 && e1 < l2;
      const bool e2_inside = m1 < e2 && e2 < m2;
      if (e2_inside) {
        consider(l1, e2);
        consider(l2, e2);
      }
      if (e1_inside) {
        consider(e1, m1);
        consider(e1, m2);
      }
      if (e1_inside && e2_inside) consider(e1, e2);
    }
  }
  return best;
}

}  // namespace labeldp
