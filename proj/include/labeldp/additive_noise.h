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

#ifndef LABELDP_ADDITIVE_NOISE_H_
#define LABELDP_ADDITIVE_NOISE_H_

#include <optional>
#include "absl/strings/string_view.h"

#include "absl/status/statusor.h"
#include "labeldp/random.h"

namespace labeldp {

enum class NoiseKind { kLaplace, kGaussian };

absl::string_view NoiseKindName(NoiseKind kind);

struct ClipBounds {
  double lo = 0.0;
  double hi = 1.0;
};

// Parameters of an additive-noise label randomizer. Labels are clipped to
// `clip_bounds` (when set) before noise is added, so `sensitivity` bounds how
// far two clipped labels can differ.
class AdditiveNoiseSpec {
 public:
  // Laplace noise with scale sensitivity / epsilon. When `sensitivity` is
  // omitted it defaults to the width of `clip_bounds`, which is then
  // required.
  static absl::StatusOr<AdditiveNoiseSpec> Laplace(
      double epsilon, std::optional<ClipBounds> clip_bounds,
      std::optional<double> sensitivity = std::nullopt);

  // Gaussian noise with the classical calibration
  // sigma = sensitivity * sqrt(2 ln(1.25 / delta)) / epsilon.
  // InvalidDelta unless 0 < delta < 1.
  static absl::StatusOr<AdditiveNoiseSpec> Gaussian(
      double epsilon, double delta, std::optional<ClipBounds> clip_bounds,
      std::optional<double> sensitivity = std::nullopt);

  NoiseKind kind() const { return kind_; }
  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  double sensitivity() const { return sensitivity_; }
  const std::optional<ClipBounds>& clip_bounds() const { return clip_bounds_; }

  // Laplace scale b or Gaussian standard deviation sigma.
  double noise_scale() const;

  // The classical Gaussian calibration is only proven for epsilon < 1;
  // larger budgets apply the same formula without that guarantee.
  bool IsHeuristicCalibration() const {
    return kind_ == NoiseKind::kGaussian && epsilon_ >= 1.0;
  }

  double Clip(double y) const;

 private:
  AdditiveNoiseSpec(NoiseKind kind, double epsilon, double delta,
                    double sensitivity, std::optional<ClipBounds> clip_bounds)
      : kind_(kind),
        epsilon_(epsilon),
        delta_(delta),
        sensitivity_(sensitivity),
        clip_bounds_(clip_bounds) {}

  NoiseKind kind_;
  double epsilon_;
  double delta_;
  double sensitivity_;
  std::optional<ClipBounds> clip_bounds_;
};

// clip(y) + Laplace(sensitivity / epsilon), one uniform draw.
// WrongKind for a Gaussian spec.
absl::StatusOr<double> LaplaceRandomize(double y, const AdditiveNoiseSpec& spec,
                                        RandomStream& rng);

// clip(y) + N(0, sigma^2), one normal draw. WrongKind for a Laplace spec.
absl::StatusOr<double> GaussianRandomize(double y,
                                         const AdditiveNoiseSpec& spec,
                                         RandomStream& rng);

// Dispatches on spec.kind().
double AddNoise(double y, const AdditiveNoiseSpec& spec, RandomStream& rng);

}  // namespace labeldp

#endif  // LABELDP_ADDITIVE_NOISE_H_
