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

#ifndef LABELDP_RIDGE_H_
#define LABELDP_RIDGE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "absl/status/statusor.h"

namespace labeldp {

// Dense row-major feature matrix.
struct FeatureMatrix {
  size_t rows = 0;
  size_t cols = 0;
  std::vector<double> data;

  std::span<const double> row(size_t r) const {
    return {data.data() + r * cols, cols};
  }
};

struct RidgeModel {
  std::vector<double> weights;
  double intercept = 0.0;

  double Predict(std::span<const double> x) const;
};

// Minimizes mean((y - x.w - b)^2) + lambda |w|^2 in closed form; the
// intercept is not penalized.
absl::StatusOr<RidgeModel> FitRidge(const FeatureMatrix& x,
                                    std::span<const double> y, double lambda);

}  // namespace labeldp

#endif  // LABELDP_RIDGE_H_
