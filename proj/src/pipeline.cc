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

#include "labeldp/pipeline.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "labeldp/random.h"
#include "labeldp/status.h"

namespace labeldp {

namespace {

double Pow4(double x) {
  const double sq = x * x;
  return sq * sq;
}

// Integral over y in [u, v] of  integral over t in [a, b] of (y - t)^2 / 2.
double FixedSegmentMoment(double a, double b, double u, double v) {
  return (Pow4(a - v) - Pow4(b - v) - Pow4(a - u) + Pow4(b - u)) / 24.0;
}

// Integral over y in [u, v] of E[(y - y~)^2 / 2 | y] when y lies in the
// interval, so the neighborhood [y - zeta, y + zeta] moves with y. Positions
// are relative to the support midpoint.
double MovingNeighborhoodMoment(double support_lo, double support_hi,
                                double zeta, double inside, double outside,
                                double u, double v) {
  const double zeta3 = zeta * zeta * zeta;
  // inside * zeta^3 / 3 + outside * ((y - L)^3 + (R - y)^3 - 2 zeta^3) / 6.
  const double cubic_terms =
      (Pow4(v - support_lo) - Pow4(u - support_lo) + Pow4(support_hi - u) -
       Pow4(support_hi - v)) /
      4.0;
  return inside * zeta3 / 3.0 * (v - u) +
         outside * (cubic_terms - 2.0 * zeta3 * (v - u)) / 6.0;
}

}  // namespace

absl::StatusOr<PrivacyBudgetSplit> PrivacyBudgetSplit::Create(
    double epsilon_total, double epsilon1) {
  if (!(epsilon_total > 0.0) || !std::isfinite(epsilon_total)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kInvalidBudget,
                       "total epsilon must be positive and finite, got ",
                       epsilon_total);
  }
  if (!(epsilon1 > 0.0 && epsilon1 < epsilon_total)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kInvalidBudget, "epsilon1 = ", epsilon1,
                       " must lie in (0, ", epsilon_total, ")");
  }
  return PrivacyBudgetSplit(epsilon_total, epsilon1, epsilon_total - epsilon1);
}

absl::StatusOr<PrivacyBudgetSplit> PrivacyBudgetSplit::FromParts(
    double epsilon1, double epsilon2) {
  if (!(epsilon1 > 0.0) || !(epsilon2 > 0.0) || !std::isfinite(epsilon1) ||
      !std::isfinite(epsilon2)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kInvalidBudget,
                       "both parts must be positive and finite, got ",
                       epsilon1, " and ", epsilon2);
  }
  return PrivacyBudgetSplit(epsilon1 + epsilon2, epsilon1, epsilon2);
}

std::vector<double> LabeledDataset::Labels() const {
  std::vector<double> labels;
  labels.reserve(rows.size());
  for (const LabeledRow& row : rows) labels.push_back(row.label);
  return labels;
}

absl::StatusOr<PrivatizedDataset> PrivatizeDataset(
    const LabeledDataset& dataset, const PrivacyBudgetSplit& split,
    const PipelineOptions& options) {
  if (dataset.rows.empty()) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kEmptyDataset, "dataset has no rows");
  }
  if (!dataset.label_bounds.has_value()) {
    return absl::InvalidArgumentError(
        "public label bounds are required to calibrate the Laplace stage");
  }
  for (const LabeledRow& row : dataset.rows) {
    if (!std::isfinite(row.label)) {
      return absl::InvalidArgumentError("labels must be finite");
    }
  }
  LABELDP_ASSIGN_OR_RETURN(
      AdditiveNoiseSpec laplace,
      AdditiveNoiseSpec::Laplace(split.epsilon1(), dataset.label_bounds));

  // Stage 1: one Laplace draw per row from its own derived stream.
  const size_t n = dataset.rows.size();
  std::vector<double> randomized(n);
  uint64_t prior_draws = 0;
  for (size_t row = 0; row < n; ++row) {
    RandomStream stream(DeriveSeed(options.seed, kPriorStageTag, row));
    randomized[row] = AddNoise(dataset.rows[row].label, laplace, stream);
    prior_draws += stream.draws();
  }
  auto estimate = BuildHistogramPrior(randomized, options.sigma_policy);
  if (!estimate.ok() &&
      HasErrorTag(estimate.status(), error_tag::kDegenerateSpread)) {
    estimate = DegenerateFallbackPrior(randomized.front(),
                                       static_cast<int64_t>(n));
  }
  if (!estimate.ok()) return estimate.status();
  bool restricted = false;
  if (options.restrict_prior_to_bounds) {
    auto conditioned = estimate->prior.RestrictToRange(
        dataset.label_bounds->lo, dataset.label_bounds->hi);
    if (conditioned.ok()) {
      estimate->prior = *std::move(conditioned);
      restricted = true;
    }
  }

  // Stage 2: interval from the estimated prior, then one draw per row.
  LABELDP_ASSIGN_OR_RETURN(
      OptimizationResult optimum,
      OptimalInterval(estimate->prior, options.zeta, split.epsilon2()));
  LABELDP_ASSIGN_OR_RETURN(
      RandomizerSpec mechanism,
      RandomizerSpec::Create(optimum.interval.a1, optimum.interval.a2,
                             options.zeta, split.epsilon2(), options.policy));

  LabeledDataset output;
  output.label_bounds = dataset.label_bounds;
  output.rows.reserve(n);
  uint64_t mechanism_draws = 0;
  for (size_t row = 0; row < n; ++row) {
    RandomStream stream(DeriveSeed(options.seed, kMechanismStageTag, row));
    output.rows.push_back(LabeledRow{
        dataset.rows[row].features,
        mechanism.Sample(dataset.rows[row].label, stream)});
    mechanism_draws += stream.draws();
  }

  LABELDP_ASSIGN_OR_RETURN(double empirical, EmpiricalMse(dataset, output));
  const MechanismMse expected =
      ExpectedMechanismMse(mechanism, estimate->prior);

  PipelineReport report{
      .split = split,
      .plan = std::move(estimate->plan),
      .prior = std::move(estimate->prior),
      .prior_restricted_to_bounds = restricted,
      .interval = optimum.interval,
      .objective = optimum.objective,
      .gamma = mechanism.gamma(),
      .zeta = options.zeta,
      .policy = options.policy,
      .fixed_sigma = options.sigma_policy.fixed,
      .label_bounds = *dataset.label_bounds,
      .seed = options.seed,
      .prior_stage_draws = prior_draws,
      .mechanism_stage_draws = mechanism_draws,
      .empirical_mse_vs_original = empirical,
      .expected_mse = expected.analytic,
      .expected_mse_paper_formula = expected.paper_formula,
  };
  return PrivatizedDataset{std::move(output), std::move(report)};
}

MechanismMse ExpectedMechanismMse(const RandomizerSpec& spec,
                                  const StepDensity& prior) {
  const double a1 = spec.a1();
  const double a2 = spec.a2();
  const double zeta = spec.zeta();
  // Work relative to the support midpoint to limit cancellation.
  const double shift = 0.5 * (spec.support_lo() + spec.support_hi());
  const double lo = spec.support_lo() - shift;
  const double hi = spec.support_hi() - shift;
  const double inside = spec.inside_density();
  const double outside = spec.outside_density();

  // Moment over y in [u, v] (unshifted) of a label region whose conditional
  // density does not move with y.
  auto fixed_center_moment = [&](double center, double u, double v) {
    u -= shift;
    v -= shift;
    if (spec.policy() == PolicyKind::kUniformOutside) {
      return spec.uniform_density() * FixedSegmentMoment(lo, hi, u, v);
    }
    const double c = center - shift;
    return outside * FixedSegmentMoment(lo, c - zeta, u, v) +
           inside * FixedSegmentMoment(c - zeta, c + zeta, u, v) +
           outside * FixedSegmentMoment(c + zeta, hi, u, v);
  };

  double analytic = 0.0;
  double expected_projection = 0.0;
  auto nodes = prior.nodes();
  auto heights = prior.heights();
  for (size_t b = 0; b < prior.num_bins(); ++b) {
    const double u = nodes[b];
    const double v = nodes[b + 1];
    const double alpha = heights[b];
    if (alpha == 0.0) continue;
    // Below the interval.
    if (u < a1) {
      const double top = std::min(v, a1);
      analytic += alpha * fixed_center_moment(a1, u, top);
      expected_projection += alpha * (top - u) * a1;
    }
    // Inside the interval.
    const double in_lo = std::max(u, a1);
    const double in_hi = std::min(v, a2);
    if (in_lo < in_hi) {
      analytic += alpha * MovingNeighborhoodMoment(lo, hi, zeta, inside,
                                                   outside, in_lo - shift,
                                                   in_hi - shift);
      expected_projection += alpha * 0.5 * (in_hi * in_hi - in_lo * in_lo);
    }
    // Above the interval.
    if (v > a2) {
      const double bottom = std::max(u, a2);
      analytic += alpha * fixed_center_moment(a2, bottom, v);
      expected_projection += alpha * (v - bottom) * a2;
    }
  }

  const double gamma = spec.gamma();
  const double decay = std::exp(-spec.epsilon());
  const double paper_formula =
      2.0 / gamma * zeta * expected_projection +
      decay / (2.0 * gamma) * (a1 + a2) * (a2 - a1 + 2.0 * zeta);
  return MechanismMse{analytic, paper_formula};
}

absl::StatusOr<double> EmpiricalMse(const LabeledDataset& original,
                                    const LabeledDataset& privatized) {
  if (original.rows.size() != privatized.rows.size()) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kLengthMismatch, original.rows.size(),
                       " original rows vs ", privatized.rows.size(),
                       " privatized rows");
  }
  if (original.rows.empty()) return 0.0;
  double total = 0.0;
  for (size_t i = 0; i < original.rows.size(); ++i) {
    const double diff = original.rows[i].label - privatized.rows[i].label;
    total += 0.5 * diff * diff;
  }
  return total / static_cast<double>(original.rows.size());
}

}  // namespace labeldp
