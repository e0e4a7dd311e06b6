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

// Randomized response with a prior-chosen interval.
//
// Given an interval I = [A1, A2], a neighborhood radius zeta and a budget
// eps, a label y in I is reported as y~ with the two-level density
//
//   1 / gamma          if |y~ - y| <= zeta,
//   exp(-eps) / gamma  if y~ in [A1 - zeta, A2 + zeta] otherwise,
//   0                  elsewhere,
//
// where gamma = 2 zeta + exp(-eps) (A2 - A1). Labels outside I are handled by
// a PolicyKind.

#ifndef LABELDP_RP_MECHANISM_H_
#define LABELDP_RP_MECHANISM_H_

#include <array>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "labeldp/interval_optimizer.h"
#include "labeldp/random.h"

namespace labeldp {

enum class PolicyKind {
  // Randomize clamp(y, A1, A2) instead of y.
  kProjection,
  // Report uniformly on [A1 - zeta, A2 + zeta].
  kUniformOutside,
};

absl::string_view PolicyName(PolicyKind policy);
absl::StatusOr<PolicyKind> ParsePolicy(absl::string_view name);

// One constant-density piece of a conditional density.
struct DensitySegment {
  double lo = 0.0;
  double hi = 0.0;
  double density = 0.0;
};

class RandomizerSpec {
 public:
  // Errors: NonPositiveZeta, NegativeEpsilon, ReversedBounds.
  static absl::StatusOr<RandomizerSpec> Create(double a1, double a2,
                                               double zeta, double epsilon,
                                               PolicyKind policy);

  // Test hook: multiplies the neighborhood weight by `scale` (renormalizing
  // the mechanism), which breaks the privacy guarantee for scale > 1. Used to
  // check that audits catch violations.
  RandomizerSpec WithNeighborhoodScaleForTesting(double scale) const;

  const Interval& interval() const { return interval_; }
  double a1() const { return interval_.a1; }
  double a2() const { return interval_.a2; }
  double zeta() const { return zeta_; }
  double epsilon() const { return epsilon_; }
  double gamma() const { return gamma_; }
  PolicyKind policy() const { return policy_; }
  double neighborhood_scale() const { return neighborhood_scale_; }

  // Support [A1 - zeta, A2 + zeta] shared by every conditional density.
  double support_lo() const { return interval_.a1 - zeta_; }
  double support_hi() const { return interval_.a2 + zeta_; }

  // Density level inside the neighborhood of the (projected) label.
  double inside_density() const { return inside_density_; }
  // Density level on the rest of the support.
  double outside_density() const { return outside_density_; }
  // Density used by kUniformOutside for labels outside the interval.
  double uniform_density() const {
    return 1.0 / (support_hi() - support_lo());
  }

  // f(y~ | y).
  double ConditionalDensity(double y, double y_tilde) const;

  // Pieces of f(. | y) in increasing order; pieces may have zero length.
  std::array<DensitySegment, 3> ConditionalSegments(double y) const;

  // Draws y~ ~ f(. | y) with exactly one uniform variate from `rng`.
  double Sample(double y, RandomStream& rng) const;

  // P(|y~ - y| <= zeta) = 2 zeta / gamma for y in the interval.
  // OutOfInterval otherwise.
  absl::StatusOr<double> NeighborhoodMass(double y) const;

 private:
  RandomizerSpec(Interval interval, double zeta, double epsilon,
                 PolicyKind policy, double neighborhood_scale);

  // Center of the high-density neighborhood, or false when y is outside the
  // interval under kUniformOutside.
  bool CenterFor(double y, double* center) const;

  Interval interval_;
  double zeta_;
  double epsilon_;
  double gamma_;
  PolicyKind policy_;
  double neighborhood_scale_;
  double inside_density_;
  double outside_density_;
};

}  // namespace labeldp

#endif  // LABELDP_RP_MECHANISM_H_
