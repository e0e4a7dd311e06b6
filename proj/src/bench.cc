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

#include "labeldp/bench.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "absl/strings/str_cat.h"
#include "labeldp/csv.h"
#include "labeldp/pipeline.h"
#include "labeldp/presets.h"
#include "labeldp/random.h"
#include "labeldp/status.h"

namespace labeldp {

namespace {

constexpr uint64_t kSplitTag = 101;
constexpr uint64_t kSyntheticTag = 102;

constexpr BenchMechanism kMechanisms[] = {
    BenchMechanism::kNone, BenchMechanism::kLaplace, BenchMechanism::kGaussian,
    BenchMechanism::kRpWithPrior};

struct TrialSplit {
  FeatureMatrix train_x;
  std::vector<double> train_y;
  FeatureMatrix test_x;
  std::vector<double> test_y;
};

TrialSplit SplitData(const BenchData& data, double train_fraction,
                     uint64_t seed) {
  const size_t n = data.labels.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  RandomStream stream(seed);
  for (size_t i = n; i > 1; --i) {
    std::swap(order[i - 1], order[stream.NextBits() % i]);
  }
  const auto train_n = static_cast<size_t>(std::llround(train_fraction * n));
  const size_t cols = data.features.cols;

  TrialSplit split;
  split.train_x = {train_n, cols, {}};
  split.test_x = {n - train_n, cols, {}};
  split.train_x.data.reserve(train_n * cols);
  split.test_x.data.reserve((n - train_n) * cols);
  for (size_t k = 0; k < n; ++k) {
    const size_t r = order[k];
    auto row = data.features.row(r);
    if (k < train_n) {
      split.train_x.data.insert(split.train_x.data.end(), row.begin(), row.end());
      split.train_y.push_back(data.labels[r]);
    } else {
      split.test_x.data.insert(split.test_x.data.end(), row.begin(), row.end());
      split.test_y.push_back(data.labels[r]);
    }
  }
  return split;
}

absl::StatusOr<std::vector<double>> PrivatizeTrainingLabels(
    BenchMechanism mechanism, double epsilon, const std::vector<double>& labels,
    const BenchConfig& config, uint64_t seed) {
  if (mechanism == BenchMechanism::kNone || std::isinf(epsilon)) {
    return labels;
  }
  std::vector<double> out;
  out.reserve(labels.size());
  if (mechanism == BenchMechanism::kLaplace ||
      mechanism == BenchMechanism::kGaussian) {
    absl::StatusOr<AdditiveNoiseSpec> spec =
        mechanism == BenchMechanism::kLaplace
            ? AdditiveNoiseSpec::Laplace(epsilon, config.label_bounds)
            : AdditiveNoiseSpec::Gaussian(epsilon, config.gaussian_delta,
                                          config.label_bounds);
    if (!spec.ok()) return spec.status();
    RandomStream stream(seed);
    for (double y : labels) out.push_back(AddNoise(y, *spec, stream));
    return out;
  }

  double epsilon1;
  double zeta;
  if (config.epsilon1.has_value() && config.zeta.has_value()) {
    epsilon1 = *config.epsilon1;
    zeta = *config.zeta;
  } else {
    LABELDP_ASSIGN_OR_RETURN(PresetChoice choice,
                             LookupPreset(config.preset, epsilon));
    epsilon1 = config.epsilon1.value_or(choice.epsilon1);
    zeta = config.zeta.value_or(choice.zeta);
  }
  LABELDP_ASSIGN_OR_RETURN(PrivacyBudgetSplit split,
                           PrivacyBudgetSplit::Create(epsilon, epsilon1));
  LabeledDataset dataset;
  dataset.label_bounds = config.label_bounds;
  dataset.rows.reserve(labels.size());
  for (double y : labels) dataset.rows.push_back({std::string(), y});
  PipelineOptions options{.zeta = zeta,
                          .policy = config.policy,
                          .sigma_policy = config.sigma_policy,
                          .seed = seed,
                          .restrict_prior_to_bounds =
                              config.restrict_prior_to_bounds};
  LABELDP_ASSIGN_OR_RETURN(PrivatizedDataset result,
                           PrivatizeDataset(dataset, split, options));
  return result.dataset.Labels();
}

double TestMse(const RidgeModel& model, const FeatureMatrix& x,
               const std::vector<double>& y) {
  double total = 0.0;
  for (size_t r = 0; r < y.size(); ++r) {
    const double diff = model.Predict(x.row(r)) - y[r];
    total += diff * diff;
  }
  return total / static_cast<double>(y.size());
}

}  // namespace

absl::string_view BenchMechanismName(BenchMechanism mechanism) {
  switch (mechanism) {
    case BenchMechanism::kNone:
      return "none";
    case BenchMechanism::kLaplace:
      return "laplace";
    case BenchMechanism::kGaussian:
      return "gaussian";
    case BenchMechanism::kRpWithPrior:
      return "rp_with_prior";
  }
  return "unknown";
}

BenchData MakeSyntheticTask(size_t n, size_t d, uint64_t seed) {
  RandomStream stream(DeriveSeed(seed, kSyntheticTag, 0));
  std::vector<double> w(d);
  double norm2 = 0.0;
  for (double& v : w) {
    v = stream.Normal();
    norm2 += v * v;
  }
  const double noise_sd = 0.5 * std::sqrt(norm2);

  BenchData data;
  data.features = {n, d, std::vector<double>(n * d)};
  data.labels.resize(n);
  for (size_t r = 0; r < n; ++r) {
    double y = 0.0;
    for (size_t c = 0; c < d; ++c) {
      const double x = stream.Normal();
      data.features.data[r * d + c] = x;
      y += w[c] * x;
    }
    data.labels[r] = y + noise_sd * stream.Normal();
  }
  const auto [lo, hi] =
      std::minmax_element(data.labels.begin(), data.labels.end());
  const double min = *lo;
  const double range = *hi - *lo;
  for (double& y : data.labels) y = range > 0.0 ? (y - min) / range : 0.5;
  return data;
}

absl::StatusOr<std::vector<BenchRow>> RunBench(const BenchData& data,
                                               const BenchConfig& config) {
  if (config.trials < 1) {
    return absl::InvalidArgumentError("need at least one trial");
  }
  if (config.epsilons.empty()) {
    return absl::InvalidArgumentError("need at least one epsilon");
  }
  if (data.labels.size() < 5 || data.features.rows != data.labels.size()) {
    return absl::InvalidArgumentError("bench needs at least 5 labeled rows");
  }
  if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
    return absl::InvalidArgumentError("train fraction must lie in (0, 1)");
  }
  for (double epsilon : config.epsilons) {
    if (!(epsilon > 0.0)) {
      return TaggedError(absl::StatusCode::kInvalidArgument,
                         error_tag::kInvalidBudget, "epsilon = ", epsilon);
    }
  }

  std::vector<BenchRow> rows;
  for (BenchMechanism mechanism : kMechanisms) {
    for (size_t e = 0; e < config.epsilons.size(); ++e) {
      BenchRow row;
      row.mechanism = mechanism;
      row.epsilon = config.epsilons[e];
      if (mechanism == BenchMechanism::kGaussian && row.epsilon >= 1.0 &&
          !std::isinf(row.epsilon)) {
        row.note = "heuristic calibration";
      }
      rows.push_back(std::move(row));
    }
  }

  for (int trial = 0; trial < config.trials; ++trial) {
    const TrialSplit split = SplitData(
        data, config.train_fraction, DeriveSeed(config.seed, kSplitTag, trial));
    for (BenchRow& row : rows) {
      const uint64_t tag =
          1000 + 100 * static_cast<uint64_t>(row.mechanism) +
          static_cast<uint64_t>(&row - rows.data());
      LABELDP_ASSIGN_OR_RETURN(
          std::vector<double> labels,
          PrivatizeTrainingLabels(row.mechanism, row.epsilon, split.train_y,
                                  config,
                                  DeriveSeed(config.seed, tag, trial)));
      LABELDP_ASSIGN_OR_RETURN(
          RidgeModel model,
          FitRidge(split.train_x, labels, config.ridge_lambda));
      row.trial_mse.push_back(TestMse(model, split.test_x, split.test_y));
    }
  }

  for (BenchRow& row : rows) {
    const double count = static_cast<double>(row.trial_mse.size());
    row.mean_mse =
        std::accumulate(row.trial_mse.begin(), row.trial_mse.end(), 0.0) /
        count;
    double squares = 0.0;
    for (double mse : row.trial_mse) {
      squares += (mse - row.mean_mse) * (mse - row.mean_mse);
    }
    row.std_mse = row.trial_mse.size() > 1 ? std::sqrt(squares / (count - 1))
                                           : 0.0;
  }
  return rows;
}

std::string RenderBenchCsv(const std::vector<BenchRow>& rows) {
  std::string out = "mechanism,epsilon,trials,mean_mse,std_mse,note\n";
  for (const BenchRow& row : rows) {
    absl::StrAppend(&out, BenchMechanismName(row.mechanism), ",",
                    std::isinf(row.epsilon) ? "inf" : FormatDouble(row.epsilon),
                    ",", row.trial_mse.size(), ",", FormatDouble(row.mean_mse),
                    ",", FormatDouble(row.std_mse), ",",
                    QuoteCsvField(row.note), "\n");
  }
  return out;
}

}  // namespace labeldp
