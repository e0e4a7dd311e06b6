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

// Checks of the epsilon-label-DP condition
//   f(y~ | y) <= exp(eps) f(y~ | y')  for all y, y', y~.

#ifndef LABELDP_AUDIT_H_
#define LABELDP_AUDIT_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "labeldp/random.h"
#include "labeldp/rp_mechanism.h"

namespace labeldp {

struct EmpiricalAuditResult {
  // Largest |log(p(bin | y) / p(bin | y'))| over bins and pairs.
  double max_log_ratio = 0.0;
  // Confidence half-width (in log units) at the bin attaining the maximum.
  double slack = 0.0;
  // Largest lower confidence bound on the log-ratio.
  double max_lower_bound = 0.0;
  bool pass = false;
};

struct AuditReport {
  double analytic_max_ratio = 0.0;
  double epsilon_claimed = 0.0;
  bool pass_analytic = false;
  PolicyKind policy = PolicyKind::kProjection;
  // Total variates drawn; 0 for a purely analytic audit.
  uint64_t samples_used = 0;
  std::optional<EmpiricalAuditResult> empirical;

  bool pass() const {
    return pass_analytic && (!empirical.has_value() || empirical->pass);
  }
};

// Worst-case density ratio over the density levels the mechanism can emit.
AuditReport AnalyticAudit(const RandomizerSpec& spec);

struct EmpiricalAuditOptions {
  // Samples drawn for each side of each pair.
  uint64_t samples_per_label = 1'000'000;
  int bins = 20;
  // Family-wise significance of the per-bin tests.
  double significance = 0.001;
};

// Default worst-case pairs: (A1, A2) and midpoint against each endpoint.
std::vector<std::pair<double, double>> DefaultAuditPairs(
    const RandomizerSpec& spec);

// Histograms samples of f(. | y) and f(. | y') on a partition of the support
// aligned with y +- zeta and y' +- zeta, and fails when some bin's
// log-ratio exceeds epsilon even at its lower Wilson bound. The result also
// carries the analytic audit. InsufficientSamples unless
// samples_per_label >= 1e4 * bins.
absl::StatusOr<AuditReport> EmpiricalAudit(
    const RandomizerSpec& spec,
    const std::vector<std::pair<double, double>>& pairs,
    const EmpiricalAuditOptions& options, RandomStream& rng);

// Bin edges on [support_lo, support_hi] containing every breakpoint in
// `breakpoints` that falls inside, with roughly `bins` bins spread in
// proportion to segment length. Every positive-length segment gets a bin.
std::vector<double> AlignedBinEdges(double support_lo, double support_hi,
                                    std::vector<double> breakpoints, int bins);

}  // namespace labeldp

#endif  // LABELDP_AUDIT_H_
