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

// Desk-scale comparison of label randomizers: repeated 80/20 splits, training
// labels privatized by each mechanism, closed-form ridge regression, test MSE
// against the true labels.

#ifndef LABELDP_BENCH_H_
#define LABELDP_BENCH_H_

#include <cstdint>
#include <optional>
#include <string>
#include "absl/strings/string_view.h"
#include <vector>

#include "absl/status/statusor.h"
#include "labeldp/additive_noise.h"
#include "labeldp/prior_estimator.h"
#include "labeldp/ridge.h"
#include "labeldp/rp_mechanism.h"

namespace labeldp {

enum class BenchMechanism { kNone, kLaplace, kGaussian, kRpWithPrior };

absl::string_view BenchMechanismName(BenchMechanism mechanism);

struct BenchData {
  FeatureMatrix features;
  std::vector<double> labels;
};

// y = w.x + noise with x ~ N(0, I_d), w ~ N(0, I_d) and noise of standard
// deviation 0.5 |w|, min-max scaled to [0, 1].
BenchData MakeSyntheticTask(size_t n, size_t d, uint64_t seed);

struct BenchConfig {
  // +inf means no privacy: every mechanism passes labels through.
  std::vector<double> epsilons;
  int trials = 10;
  uint64_t seed = 0;
  double train_fraction = 0.8;
  double ridge_lambda = 1e-4;
  // Public label range: clipping bounds and additive-noise sensitivity.
  ClipBounds label_bounds;
  double gaussian_delta = 1e-4;
  // Budget split and zeta for the randomized-response mechanism; explicit
  // values override the preset.
  std::string preset = "crime";
  std::optional<double> epsilon1;
  std::optional<double> zeta;
  PolicyKind policy = PolicyKind::kProjection;
  SigmaPolicy sigma_policy;
  bool restrict_prior_to_bounds = true;
};

struct BenchRow {
  BenchMechanism mechanism = BenchMechanism::kNone;
  double epsilon = 0.0;
  std::vector<double> trial_mse;
  double mean_mse = 0.0;
  // Sample standard deviation over trials; 0 for a single trial.
  double std_mse = 0.0;
  std::string note;
};

// Rows ordered by mechanism, then epsilon in config order.
absl::StatusOr<std::vector<BenchRow>> RunBench(const BenchData& data,
                                               const BenchConfig& config);

// CSV: mechanism,epsilon,trials,mean_mse,std_mse,note
std::string RenderBenchCsv(const std::vector<BenchRow>& rows);

}  // namespace labeldp

#endif  // LABELDP_BENCH_H_
