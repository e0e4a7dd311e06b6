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

#include "labeldp/additive_noise.h"

#include <algorithm>
#include <cmath>

#include "labeldp/status.h"

namespace labeldp {

namespace {

absl::StatusOr<double> ResolveSensitivity(
    const std::optional<ClipBounds>& clip_bounds,
    std::optional<double> sensitivity) {
  if (clip_bounds.has_value() && !(clip_bounds->lo < clip_bounds->hi)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "clip bounds must satisfy lo < hi, got [", clip_bounds->lo, ", ",
        clip_bounds->hi, "]"));
  }
  double value;
  if (sensitivity.has_value()) {
    value = *sensitivity;
  } else if (clip_bounds.has_value()) {
    value = clip_bounds->hi - clip_bounds->lo;
  } else {
    return absl::InvalidArgumentError(
        "sensitivity requires either clip bounds or an explicit value");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sensitivity must be positive and finite, got ", value));
  }
  return value;
}

absl::Status ValidateEpsilon(double epsilon) {
  if (!(epsilon > 0.0)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kNegativeEpsilon,
                       "additive noise needs epsilon > 0, got ", epsilon);
  }
  return absl::OkStatus();
}

double SampleLaplace(double scale, RandomStream& rng) {
  const double u = rng.OpenUniform() - 0.5;
  return -scale * std::copysign(1.0, u) * std::log1p(-2.0 * std::abs(u));
}

}  // namespace

absl::string_view NoiseKindName(NoiseKind kind) {
  return kind == NoiseKind::kLaplace ? "laplace" : "gaussian";
}

absl::StatusOr<AdditiveNoiseSpec> AdditiveNoiseSpec::Laplace(
    double epsilon, std::optional<ClipBounds> clip_bounds,
    std::optional<double> sensitivity) {
  LABELDP_RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  LABELDP_ASSIGN_OR_RETURN(double resolved,
                           ResolveSensitivity(clip_bounds, sensitivity));
  return AdditiveNoiseSpec(NoiseKind::kLaplace, epsilon, 0.0, resolved,
                           clip_bounds);
}

absl::StatusOr<AdditiveNoiseSpec> AdditiveNoiseSpec::Gaussian(
    double epsilon, double delta, std::optional<ClipBounds> clip_bounds,
    std::optional<double> sensitivity) {
  LABELDP_RETURN_IF_ERROR(ValidateEpsilon(epsilon));
  if (!(delta > 0.0 && delta < 1.0)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kInvalidDelta,
                       "delta must lie in (0, 1), got ", delta);
  }
  LABELDP_ASSIGN_OR_RETURN(double resolved,
                           ResolveSensitivity(clip_bounds, sensitivity));
  return AdditiveNoiseSpec(NoiseKind::kGaussian, epsilon, delta, resolved,
                           clip_bounds);
}

double AdditiveNoiseSpec::noise_scale() const {
  if (kind_ == NoiseKind::kLaplace) return sensitivity_ / epsilon_;
  return sensitivity_ * std::sqrt(2.0 * std::log(1.25 / delta_)) / epsilon_;
}

double AdditiveNoiseSpec::Clip(double y) const {
  if (!clip_bounds_.has_value()) return y;
  return std::clamp(y, clip_bounds_->lo, clip_bounds_->hi);
}

absl::StatusOr<double> LaplaceRandomize(double y, const AdditiveNoiseSpec& spec,
                                        RandomStream& rng) {
  if (spec.kind() != NoiseKind::kLaplace) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kWrongKind, "expected a Laplace spec");
  }
  return spec.Clip(y) + SampleLaplace(spec.noise_scale(), rng);
}

absl::StatusOr<double> GaussianRandomize(double y,
                                         const AdditiveNoiseSpec& spec,
                                         RandomStream& rng) {
  if (spec.kind() != NoiseKind::kGaussian) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kWrongKind, "expected a Gaussian spec");
  }
  return spec.Clip(y) + spec.noise_scale() * rng.Normal();
}

double AddNoise(double y, const AdditiveNoiseSpec& spec, RandomStream& rng) {
  if (spec.kind() == NoiseKind::kLaplace) {
    return spec.Clip(y) + SampleLaplace(spec.noise_scale(), rng);
  }
  return spec.Clip(y) + spec.noise_scale() * rng.Normal();
}

}  // namespace labeldp
