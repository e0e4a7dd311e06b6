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

#ifndef LABELDP_STEP_DENSITY_H_
#define LABELDP_STEP_DENSITY_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace labeldp {

// How the values passed to StepDensity::Create are interpreted.
enum class StepValues {
  // Probability per label unit on each bin.
  kHeights,
  // Probability mass of each bin; divided by the bin width on construction.
  kBinMasses,
};

// A piecewise-constant probability density on [n_0, n_k].
//
// Bin i covers [n_i, n_{i+1}) for i < k-1; the last bin is closed on both
// ends. The density is zero outside [n_0, n_k]. Instances are always
// normalized and immutable.
class StepDensity {
 public:
  // Fails with NonMonotoneNodes if nodes are not strictly increasing (this
  // includes zero-width bins), NegativeMass for a negative or non-finite
  // value and ZeroTotalMass when every value is zero.
  static absl::StatusOr<StepDensity> Create(std::span<const double> nodes,
                                            std::span<const double> values,
                                            StepValues mode);

  std::span<const double> nodes() const { return nodes_; }
  std::span<const double> heights() const { return heights_; }
  size_t num_bins() const { return heights_.size(); }
  double lower() const { return nodes_.front(); }
  double upper() const { return nodes_.back(); }
  double bin_width(size_t i) const { return nodes_[i + 1] - nodes_[i]; }

  // Index of the bin containing y, or -1 outside the support.
  std::ptrdiff_t BinIndex(double y) const;

  double PdfAt(double y) const;

  // Exact integral of the density over [a, b]. ReversedBounds if a > b.
  absl::StatusOr<double> Integrate(double a, double b) const;

  // Same as Integrate for a <= b; returns 0 when a >= b.
  double MassBetween(double a, double b) const;

  // Cumulative distribution function.
  double Cdf(double x) const;

  // This density conditioned on [lo, hi]: bins clipped to the range and
  // renormalized. ZeroTotalMass when no mass falls inside, ReversedBounds if
  // lo >= hi.
  absl::StatusOr<StepDensity> RestrictToRange(double lo, double hi) const;

 private:
  StepDensity(std::vector<double> nodes, std::vector<double> heights);

  std::vector<double> nodes_;
  std::vector<double> heights_;
  // cumulative_[i] = mass of bins [0, i).
  std::vector<double> cumulative_;
};

}  // namespace labeldp

#endif  // LABELDP_STEP_DENSITY_H_
