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

#include "labeldp/step_density.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "labeldp/status.h"

namespace labeldp {

absl::StatusOr<StepDensity> StepDensity::Create(std::span<const double> nodes,
                                                std::span<const double> values,
                                                StepValues mode) {
  if (nodes.size() < 2) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kNonMonotoneNodes,
                       "need at least two nodes, got ", nodes.size());
  }
  if (values.size() + 1 != nodes.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("expected ", nodes.size() - 1, " bin values, got ",
                     values.size()));
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (!std::isfinite(nodes[i])) {
      return TaggedError(absl::StatusCode::kInvalidArgument,
                         error_tag::kNonMonotoneNodes, "nodes[", i,
                         "] is not finite");
    }
    if (i > 0 && !(nodes[i] > nodes[i - 1])) {
      return TaggedError(absl::StatusCode::kInvalidArgument,
                         error_tag::kNonMonotoneNodes, "nodes[", i, "] = ",
                         nodes[i], " does not exceed nodes[", i - 1,
                         "] = ", nodes[i - 1]);
    }
  }

  std::vector<double> heights(values.begin(), values.end());
  for (size_t i = 0; i < heights.size(); ++i) {
    if (!(heights[i] >= 0.0) || !std::isfinite(heights[i])) {
      return TaggedError(absl::StatusCode::kInvalidArgument,
                         error_tag::kNegativeMass, "value[", i,
                         "] = ", heights[i]);
    }
    if (mode == StepValues::kBinMasses) {
      heights[i] /= nodes[i + 1] - nodes[i];
    }
  }

  double total = 0.0;
  for (size_t i = 0; i < heights.size(); ++i) {
    total += heights[i] * (nodes[i + 1] - nodes[i]);
  }
  if (!(total > 0.0)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kZeroTotalMass, "all bin values are zero");
  }
  for (double& h : heights) h /= total;

  return StepDensity(std::vector<double>(nodes.begin(), nodes.end()),
                     std::move(heights));
}

StepDensity::StepDensity(std::vector<double> nodes,
                         std::vector<double> heights)
    : nodes_(std::move(nodes)), heights_(std::move(heights)) {
  cumulative_.reserve(heights_.size() + 1);
  cumulative_.push_back(0.0);
  for (size_t i = 0; i < heights_.size(); ++i) {
    cumulative_.push_back(cumulative_.back() + heights_[i] * bin_width(i));
  }
}

std::ptrdiff_t StepDensity::BinIndex(double y) const {
  if (!(y >= nodes_.front() && y <= nodes_.back())) return -1;
  // First node strictly greater than y; the bin starts one before it.
  auto it = std::upper_bound(nodes_.begin(), nodes_.end(), y);
  std::ptrdiff_t index = (it - nodes_.begin()) - 1;
  // y == n_k belongs to the closed last bin.
  return std::min<std::ptrdiff_t>(index, heights_.size() - 1);
}

double StepDensity::PdfAt(double y) const {
  std::ptrdiff_t i = BinIndex(y);
  return i < 0 ? 0.0 : heights_[i];
}

absl::StatusOr<double> StepDensity::Integrate(double a, double b) const {
  if (a > b) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kReversedBounds, "a = ", a, " > b = ", b);
  }
  return MassBetween(a, b);
}

double StepDensity::MassBetween(double a, double b) const {
  a = std::max(a, nodes_.front());
  b = std::min(b, nodes_.back());
  if (!(a < b)) return 0.0;
  size_t i = static_cast<size_t>(BinIndex(a));
  size_t j = static_cast<size_t>(BinIndex(b));
  if (i == j) return heights_[i] * (b - a);
  double mass = heights_[i] * (nodes_[i + 1] - a);
  mass += cumulative_[j] - cumulative_[i + 1];
  mass += heights_[j] * (b - nodes_[j]);
  return mass;
}

double StepDensity::Cdf(double x) const {
  if (x <= nodes_.front()) return 0.0;
  if (x >= nodes_.back()) return 1.0;
  return MassBetween(nodes_.front(), x);
}

absl::StatusOr<StepDensity> StepDensity::RestrictToRange(double lo,
                                                         double hi) const {
  if (!(lo < hi)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kReversedBounds, "range [", lo, ", ", hi,
                       "] is empty");
  }
  const double from = std::max(lo, lower());
  const double to = std::min(hi, upper());
  if (!(from < to)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kZeroTotalMass, "range [", lo, ", ", hi,
                       "] misses the support [", lower(), ", ", upper(), "]");
  }
  std::vector<double> nodes = {from};
  for (double node : nodes_) {
    if (node > from && node < to) nodes.push_back(node);
  }
  nodes.push_back(to);
  std::vector<double> masses;
  masses.reserve(nodes.size() - 1);
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    masses.push_back(MassBetween(nodes[i], nodes[i + 1]));
  }
  return Create(nodes, masses, StepValues::kBinMasses);
}

}  // namespace labeldp
