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

#include "labeldp/prior_estimator.h"

#include <algorithm>
#include <cmath>

#include "labeldp/status.h"

namespace labeldp {

namespace {

// Upper bound on the number of histogram bins.
constexpr int64_t kMaxBins = 10'000'000;

double GridNode(double mu, double sigma, int64_t k) {
  return mu + static_cast<double>(k) * sigma;
}

// mu + k0 sigma <= lo < mu + (k0 + 1) sigma.
int64_t SolveLowerIndex(double mu, double sigma, double lo) {
  auto k = static_cast<int64_t>(std::floor((lo - mu) / sigma));
  while (GridNode(mu, sigma, k) > lo) --k;
  while (lo >= GridNode(mu, sigma, k + 1)) ++k;
  return k;
}

// mu + k1 sigma < hi <= mu + (k1 + 1) sigma.
int64_t SolveUpperIndex(double mu, double sigma, double hi) {
  auto k = static_cast<int64_t>(std::ceil((hi - mu) / sigma)) - 1;
  while (GridNode(mu, sigma, k) >= hi) --k;
  while (hi > GridNode(mu, sigma, k + 1)) ++k;
  return k;
}

}  // namespace

absl::StatusOr<PriorEstimate> BuildHistogramPrior(
    std::span<const double> randomized, SigmaPolicy sigma_policy) {
  if (randomized.empty()) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kEmptyDataset, "no labels to bin");
  }
  const auto n = static_cast<double>(randomized.size());
  double sum = 0.0;
  for (double v : randomized) {
    if (!std::isfinite(v)) {
      return absl::InvalidArgumentError("randomized labels must be finite");
    }
    sum += v;
  }
  const double mu = sum / n;
  const auto [min_it, max_it] =
      std::minmax_element(randomized.begin(), randomized.end());
  const double lo = *min_it;
  const double hi = *max_it;

  double sigma;
  if (sigma_policy.fixed.has_value()) {
    sigma = *sigma_policy.fixed;
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
      return absl::InvalidArgumentError(
          absl::StrCat("sigma must be positive, got ", sigma));
    }
  } else {
    double squares = 0.0;
    for (double v : randomized) squares += (v - mu) * (v - mu);
    sigma = std::sqrt(squares / n);
  }
  if (!(lo < hi) || !(sigma > 0.0)) {
    return TaggedError(absl::StatusCode::kFailedPrecondition,
                       error_tag::kDegenerateSpread,
                       "all randomized labels equal ", lo);
  }

  HistogramPlan plan;
  plan.mu = mu;
  plan.sigma = sigma;
  plan.k0 = SolveLowerIndex(mu, sigma, lo);
  plan.k1 = SolveUpperIndex(mu, sigma, hi);
  const int64_t num_bins = plan.k1 - plan.k0 + 1;
  if (num_bins > kMaxBins) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sigma = ", sigma, " gives ", num_bins, " bins; at most ", kMaxBins,
        " are supported"));
  }

  plan.nodes.reserve(num_bins + 1);
  plan.nodes.push_back(lo);
  for (int64_t i = 1; i < num_bins; ++i) {
    plan.nodes.push_back(GridNode(mu, sigma, i + plan.k0));
  }
  plan.nodes.push_back(hi);

  plan.bin_counts.assign(num_bins, 0);
  for (double v : randomized) {
    auto index = static_cast<int64_t>(std::floor((v - mu) / sigma)) - plan.k0;
    index = std::clamp<int64_t>(index, 0, num_bins - 1);
    // J_k = [n_k, n_{k+1}) with the last bin closed.
    while (index > 0 && v < plan.nodes[index]) --index;
    while (index < num_bins - 1 && v >= plan.nodes[index + 1]) ++index;
    ++plan.bin_counts[index];
  }
  plan.bin_masses.reserve(num_bins);
  for (int64_t count : plan.bin_counts) {
    plan.bin_masses.push_back(static_cast<double>(count) / n);
  }

  LABELDP_ASSIGN_OR_RETURN(
      StepDensity prior,
      StepDensity::Create(plan.nodes, plan.bin_masses, StepValues::kBinMasses));
  return PriorEstimate{std::move(prior), std::move(plan)};
}

absl::StatusOr<PriorEstimate> EstimatePrior(std::span<const double> labels,
                                            double epsilon1,
                                            const AdditiveNoiseSpec& noise,
                                            SigmaPolicy sigma_policy,
                                            RandomStream& rng) {
  if (labels.empty()) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kEmptyDataset, "no labels");
  }
  if (noise.kind() != NoiseKind::kLaplace) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kWrongKind,
                       "prior estimation uses Laplace noise");
  }
  if (noise.epsilon() != epsilon1) {
    return absl::InvalidArgumentError(absl::StrCat(
        "noise epsilon ", noise.epsilon(), " differs from epsilon1 ", epsilon1));
  }
  std::vector<double> randomized;
  randomized.reserve(labels.size());
  for (double y : labels) randomized.push_back(AddNoise(y, noise, rng));
  return BuildHistogramPrior(randomized, sigma_policy);
}

PriorEstimate DegenerateFallbackPrior(double c, int64_t count) {
  const double half_width = std::max(std::abs(c), 1.0) * 1e-6;
  HistogramPlan plan;
  plan.mu = c;
  plan.sigma = half_width;
  plan.k0 = -1;
  plan.k1 = 0;
  plan.nodes = {c - half_width, c + half_width};
  plan.bin_counts = {count};
  plan.bin_masses = {1.0};
  plan.degenerate_fallback = true;
  const double height = 1.0;
  auto prior = StepDensity::Create(plan.nodes, std::span(&height, 1),
                                   StepValues::kBinMasses);
  return PriorEstimate{*std::move(prior), std::move(plan)};
}

}  // namespace labeldp
