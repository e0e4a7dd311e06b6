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

#include "labeldp/rp_mechanism.h"

#include <algorithm>
#include <cmath>

#include "labeldp/status.h"

namespace labeldp {

absl::string_view PolicyName(PolicyKind policy) {
  switch (policy) {
    case PolicyKind::kProjection:
      return "projection";
    case PolicyKind::kUniformOutside:
      return "uniform_outside";
  }
  return "unknown";
}

absl::StatusOr<PolicyKind> ParsePolicy(absl::string_view name) {
  if (name == "projection") return PolicyKind::kProjection;
  if (name == "uniform_outside") return PolicyKind::kUniformOutside;
  return absl::InvalidArgumentError(
      absl::StrCat("unknown policy '", name,
                   "'; expected projection or uniform_outside"));
}

absl::StatusOr<RandomizerSpec> RandomizerSpec::Create(double a1, double a2,
                                                      double zeta,
                                                      double epsilon,
                                                      PolicyKind policy) {
  if (!(zeta > 0.0) || !std::isfinite(zeta)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kNonPositiveZeta, "zeta = ", zeta);
  }
  if (!(epsilon >= 0.0)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kNegativeEpsilon, "epsilon = ", epsilon);
  }
  if (!std::isfinite(a1) || !std::isfinite(a2)) {
    return absl::InvalidArgumentError("interval endpoints must be finite");
  }
  if (a1 > a2) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kReversedBounds, "a1 = ", a1, " > a2 = ", a2);
  }
  return RandomizerSpec(Interval{a1, a2}, zeta, epsilon, policy, 1.0);
}

RandomizerSpec::RandomizerSpec(Interval interval, double zeta, double epsilon,
                               PolicyKind policy, double neighborhood_scale)
    : interval_(interval),
      zeta_(zeta),
      epsilon_(epsilon),
      gamma_(2.0 * zeta + std::exp(-epsilon) * interval.length()),
      policy_(policy),
      neighborhood_scale_(neighborhood_scale) {
  const double decay = std::exp(-epsilon_);
  const double normalizer = neighborhood_scale_ == 1.0
                                ? gamma_
                                : 2.0 * zeta_ * neighborhood_scale_ +
                                      decay * interval_.length();
  inside_density_ = neighborhood_scale_ / normalizer;
  outside_density_ = decay / normalizer;
}

RandomizerSpec RandomizerSpec::WithNeighborhoodScaleForTesting(
    double scale) const {
  return RandomizerSpec(interval_, zeta_, epsilon_, policy_, scale);
}

bool RandomizerSpec::CenterFor(double y, double* center) const {
  if (interval_.Contains(y)) {
    *center = y;
    return true;
  }
  if (policy_ == PolicyKind::kUniformOutside) return false;
  *center = std::clamp(y, interval_.a1, interval_.a2);
  return true;
}

double RandomizerSpec::ConditionalDensity(double y, double y_tilde) const {
  if (y_tilde < support_lo() || y_tilde > support_hi()) return 0.0;
  double center;
  if (!CenterFor(y, &center)) return uniform_density();
  return std::abs(y_tilde - center) <= zeta_ ? inside_density_
                                             : outside_density_;
}

std::array<DensitySegment, 3> RandomizerSpec::ConditionalSegments(
    double y) const {
  const double lo = support_lo();
  const double hi = support_hi();
  double center;
  if (!CenterFor(y, &center)) {
    const double u = uniform_density();
    return {DensitySegment{lo, lo, u}, DensitySegment{lo, hi, u},
            DensitySegment{hi, hi, u}};
  }
  return {DensitySegment{lo, center - zeta_, outside_density_},
          DensitySegment{center - zeta_, center + zeta_, inside_density_},
          DensitySegment{center + zeta_, hi, outside_density_}};
}

double RandomizerSpec::Sample(double y, RandomStream& rng) const {
  // Inverse CDF of the piecewise-constant density: the flanking segments
  // are chosen in proportion to their lengths, uniformly within.
  const auto segments = ConditionalSegments(y);
  std::array<double, 3> masses;
  double total = 0.0;
  for (size_t s = 0; s < segments.size(); ++s) {
    masses[s] = segments[s].density * (segments[s].hi - segments[s].lo);
    total += masses[s];
  }
  const double target = rng.Uniform() * total;
  double accumulated = 0.0;
  double base = 0.0;
  size_t chosen = 1;
  for (size_t s = 0; s < segments.size(); ++s) {
    if (masses[s] <= 0.0) continue;
    chosen = s;
    base = accumulated;
    if (target < accumulated + masses[s]) break;
    accumulated += masses[s];
  }
  const DensitySegment& piece = segments[chosen];
  const double fraction =
      masses[chosen] > 0.0
          ? std::clamp((target - base) / masses[chosen], 0.0, 1.0)
          : 0.0;
  const double y_tilde = piece.lo + fraction * (piece.hi - piece.lo);
  return std::clamp(y_tilde, support_lo(), support_hi());
}

absl::StatusOr<double> RandomizerSpec::NeighborhoodMass(double y) const {
  if (!interval_.Contains(y)) {
    return TaggedError(absl::StatusCode::kOutOfRange,
                       error_tag::kOutOfInterval, "y = ", y, " not in [",
                       interval_.a1, ", ", interval_.a2, "]");
  }
  return 2.0 * zeta_ * inside_density_;
}

}  // namespace labeldp
