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

// Histogram prior from Laplace-randomized labels.
//
// Every label is noised once; the histogram is then pure post-processing of
// the noised values. Bins have width sigma and are anchored at the sample
// mean mu: with integers k0, k1 chosen so that
//
//   mu + k0 sigma <= min < mu + (k0 + 1) sigma,
//   mu + k1 sigma <  max <= mu + (k1 + 1) sigma,
//
// the nodes are min, mu + (k0 + 1) sigma, ..., mu + k1 sigma, max.

#ifndef LABELDP_PRIOR_ESTIMATOR_H_
#define LABELDP_PRIOR_ESTIMATOR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "labeldp/additive_noise.h"
#include "labeldp/random.h"
#include "labeldp/step_density.h"

namespace labeldp {

// Bin width rule. Without a fixed value, sigma is the standard deviation of
// the randomized labels.
struct SigmaPolicy {
  std::optional<double> fixed;

  static SigmaPolicy StdOfRandomized() { return {}; }
  static SigmaPolicy Fixed(double sigma) { return {sigma}; }
};

struct HistogramPlan {
  double mu = 0.0;
  double sigma = 0.0;
  int64_t k0 = 0;
  int64_t k1 = 0;
  std::vector<double> nodes;
  std::vector<int64_t> bin_counts;
  // bin_counts / n: the raw bin masses before width division.
  std::vector<double> bin_masses;
  // Set when every randomized label was equal and the fallback single-bin
  // prior was used instead.
  bool degenerate_fallback = false;
};

struct PriorEstimate {
  StepDensity prior;
  HistogramPlan plan;
};

// Bins already-randomized labels. EmptyDataset for no values;
// DegenerateSpread when min == max (or the spread gives sigma == 0).
absl::StatusOr<PriorEstimate> BuildHistogramPrior(
    std::span<const double> randomized, SigmaPolicy sigma_policy);

// Noises each label once with `noise` (must be Laplace with epsilon ==
// epsilon1) and bins the result with BuildHistogramPrior.
absl::StatusOr<PriorEstimate> EstimatePrior(std::span<const double> labels,
                                            double epsilon1,
                                            const AdditiveNoiseSpec& noise,
                                            SigmaPolicy sigma_policy,
                                            RandomStream& rng);

// Single bin on [c - w, c + w], w = max(|c|, 1) * 1e-6, for a sample whose
// randomized labels all equal c.
PriorEstimate DegenerateFallbackPrior(double c, int64_t count);

}  // namespace labeldp

#endif  // LABELDP_PRIOR_ESTIMATOR_H_
