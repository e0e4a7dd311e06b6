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

#include "labeldp/ridge.h"

#include <Eigen/Dense>

#include "absl/strings/str_cat.h"

namespace labeldp {

double RidgeModel::Predict(std::span<const double> x) const {
  double value = intercept;
  for (size_t c = 0; c < weights.size(); ++c) value += weights[c] * x[c];
  return value;
}

absl::StatusOr<RidgeModel> FitRidge(const FeatureMatrix& x,
                                    std::span<const double> y, double lambda) {
  if (x.rows == 0 || x.rows != y.size() || x.data.size() != x.rows * x.cols) {
    return absl::InvalidArgumentError(absl::StrCat(
        "ridge needs matching non-empty inputs, got ", x.rows, " rows and ",
        y.size(), " labels"));
  }
  if (!(lambda >= 0.0)) {
    return absl::InvalidArgumentError("ridge coefficient must be >= 0");
  }
  using RowMajor =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const RowMajor> features(x.data.data(), x.rows, x.cols);
  Eigen::Map<const Eigen::VectorXd> labels(y.data(), y.size());

  const double n = static_cast<double>(x.rows);
  const Eigen::RowVectorXd feature_mean = features.colwise().mean();
  const double label_mean = labels.mean();
  const Eigen::MatrixXd centered = features.rowwise() - feature_mean;
  const Eigen::VectorXd centered_labels =
      labels.array() - label_mean;

  Eigen::MatrixXd gram = centered.transpose() * centered / n;
  gram.diagonal().array() += lambda;
  const Eigen::VectorXd rhs = centered.transpose() * centered_labels / n;
  Eigen::LDLT<Eigen::MatrixXd> solver(gram);
  if (solver.info() != Eigen::Success) {
    return absl::InternalError("ridge normal equations are singular");
  }
  const Eigen::VectorXd w = solver.solve(rhs);

  RidgeModel model;
  model.weights.assign(w.data(), w.data() + w.size());
  model.intercept = label_mean - feature_mean.dot(w);
  return model;
}

}  // namespace labeldp
