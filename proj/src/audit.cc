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

#include "labeldp/audit.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/distributions/normal.hpp>

#include "labeldp/status.h"

namespace labeldp {

namespace {

constexpr double kRatioTolerance = 1e-12;

struct WilsonInterval {
  double lower;
  double upper;
};

WilsonInterval Wilson(uint64_t successes, uint64_t trials, double z) {
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (p + z2 / (2.0 * n)) / denom;
  const double half =
      z / denom * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n));
  return {std::max(center - half, 0.0), std::min(center + half, 1.0)};
}

std::vector<uint64_t> SampleHistogram(const RandomizerSpec& spec, double y,
                                      const std::vector<double>& edges,
                                      uint64_t samples, RandomStream& rng) {
  std::vector<uint64_t> counts(edges.size() - 1, 0);
  for (uint64_t s = 0; s < samples; ++s) {
    const double v = spec.Sample(y, rng);
    auto it = std::upper_bound(edges.begin(), edges.end(), v);
    auto bin = static_cast<std::ptrdiff_t>(it - edges.begin()) - 1;
    bin = std::clamp<std::ptrdiff_t>(bin, 0, counts.size() - 1);
    ++counts[bin];
  }
  return counts;
}

}  // namespace

AuditReport AnalyticAudit(const RandomizerSpec& spec) {
  std::vector<double> levels = {spec.inside_density(), spec.outside_density()};
  if (spec.policy() == PolicyKind::kUniformOutside) {
    levels.push_back(spec.uniform_density());
  }
  const auto [min_it, max_it] = std::minmax_element(levels.begin(), levels.end());
  const double ratio = *min_it > 0.0
                           ? *max_it / *min_it
                           : std::numeric_limits<double>::infinity();
  AuditReport report;
  report.analytic_max_ratio = ratio;
  report.epsilon_claimed = spec.epsilon();
  report.pass_analytic =
      ratio <= std::exp(spec.epsilon()) * (1.0 + kRatioTolerance);
  report.policy = spec.policy();
  return report;
}

std::vector<std::pair<double, double>> DefaultAuditPairs(
    const RandomizerSpec& spec) {
  const double mid = 0.5 * (spec.a1() + spec.a2());
  return {{spec.a1(), spec.a2()}, {mid, spec.a1()}, {mid, spec.a2()}};
}

std::vector<double> AlignedBinEdges(double support_lo, double support_hi,
                                    std::vector<double> breakpoints,
                                    int bins) {
  breakpoints.push_back(support_lo);
  breakpoints.push_back(support_hi);
  std::erase_if(breakpoints, [&](double b) {
    return !(b >= support_lo && b <= support_hi);
  });
  std::sort(breakpoints.begin(), breakpoints.end());
  breakpoints.erase(std::unique(breakpoints.begin(), breakpoints.end()),
                    breakpoints.end());

  const double total = support_hi - support_lo;
  std::vector<double> edges = {breakpoints.front()};
  for (size_t s = 0; s + 1 < breakpoints.size(); ++s) {
    const double a = breakpoints[s];
    const double b = breakpoints[s + 1];
    const int pieces = std::max(
        1, static_cast<int>(std::lround(bins * (b - a) / total)));
    for (int p = 1; p < pieces; ++p) {
      edges.push_back(a + (b - a) * p / pieces);
    }
    edges.push_back(b);
  }
  return edges;
}

absl::StatusOr<AuditReport> EmpiricalAudit(
    const RandomizerSpec& spec,
    const std::vector<std::pair<double, double>>& pairs,
    const EmpiricalAuditOptions& options, RandomStream& rng) {
  if (options.bins < 1 ||
      options.samples_per_label < 10'000ULL * static_cast<uint64_t>(options.bins)) {
    return TaggedError(absl::StatusCode::kInvalidArgument,
                       error_tag::kInsufficientSamples,
                       options.samples_per_label, " samples for ",
                       options.bins, " bins; need at least 1e4 per bin");
  }
  if (!(options.significance > 0.0 && options.significance < 1.0)) {
    return absl::InvalidArgumentError("significance must lie in (0, 1)");
  }
  const auto& audit_pairs = pairs.empty() ? DefaultAuditPairs(spec) : pairs;

  struct PairHistograms {
    std::vector<uint64_t> first;
    std::vector<uint64_t> second;
  };
  std::vector<PairHistograms> histograms;
  size_t comparisons = 0;
  for (const auto& [y, y_prime] : audit_pairs) {
    std::vector<double> breakpoints;
    for (double label : {y, y_prime}) {
      for (const DensitySegment& piece : spec.ConditionalSegments(label)) {
        breakpoints.push_back(piece.lo);
        breakpoints.push_back(piece.hi);
      }
    }
    const std::vector<double> edges = AlignedBinEdges(
        spec.support_lo(), spec.support_hi(), breakpoints, options.bins);
    histograms.push_back(
        {SampleHistogram(spec, y, edges, options.samples_per_label, rng),
         SampleHistogram(spec, y_prime, edges, options.samples_per_label,
                         rng)});
    comparisons += 2 * (edges.size() - 1);
  }

  // Bonferroni over every (bin, direction) test.
  const boost::math::normal standard_normal;
  const double z = boost::math::quantile(
      boost::math::complement(standard_normal,
                              options.significance / (2.0 * comparisons)));

  EmpiricalAuditResult result;
  result.max_lower_bound = -std::numeric_limits<double>::infinity();
  const uint64_t n = options.samples_per_label;
  for (const PairHistograms& pair : histograms) {
    for (size_t b = 0; b < pair.first.size(); ++b) {
      for (int direction = 0; direction < 2; ++direction) {
        const uint64_t num = direction == 0 ? pair.first[b] : pair.second[b];
        const uint64_t den = direction == 0 ? pair.second[b] : pair.first[b];
        if (num == 0 && den == 0) continue;
        const double point = std::log((num + 0.5) / (den + 0.5));
        const double lower_num = Wilson(num, n, z).lower;
        const double upper_den = Wilson(den, n, z).upper;
        const double lower =
            lower_num > 0.0 ? std::log(lower_num / upper_den)
                            : -std::numeric_limits<double>::infinity();
        if (point > result.max_log_ratio) {
          result.max_log_ratio = point;
          result.slack = point - lower;
        }
        result.max_lower_bound = std::max(result.max_lower_bound, lower);
      }
    }
  }
  result.pass = result.max_lower_bound <= spec.epsilon();

  AuditReport report = AnalyticAudit(spec);
  report.samples_used = 2 * n * audit_pairs.size();
  report.empirical = result;
  return report;
}

}  // namespace labeldp
