// Copyright 2026 The cssnd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cssnd/analysis.hpp"

#include <algorithm>

namespace cssnd {

PeriodMask WindowMap(const TransformedCommodity& tc, int period_count) {
  PeriodMask mask(static_cast<size_t>(period_count), false);
  const int span = CyclicSpan(tc.release, tc.due, period_count);
  for (int i = 0; i <= span; ++i) mask[CyclicPeriod(tc.release + i, period_count) - 1] = true;
  return mask;
}

bool Beta(const TransformedCommodity& tc, int period, int period_count) {
  return CyclicSpan(tc.release, period, period_count) <
         CyclicSpan(tc.release, tc.due, period_count);
}

PeriodMask BetaMask(const TransformedCommodity& tc, int period_count) {
  PeriodMask mask(static_cast<size_t>(period_count), false);
  for (int t = 1; t <= period_count; ++t) mask[t - 1] = Beta(tc, t, period_count);
  return mask;
}

PeriodMask OccupancyIntersection(const std::vector<TransformedCommodity>& tcs,
                                 int period_count, OccupancyBasis basis) {
  PeriodMask out(static_cast<size_t>(period_count), !tcs.empty());
  for (const TransformedCommodity& tc : tcs) {
    const PeriodMask m = basis == OccupancyBasis::kFullWindow ? WindowMap(tc, period_count)
                                                              : BetaMask(tc, period_count);
    for (int t = 0; t < period_count; ++t) out[t] = out[t] && m[t];
  }
  return out;
}

AnalysisSummary ComputeRequirements(const Instance& instance, OccupancyBasis basis) {
  return ComputeRequirements(instance, ExpandCommodities(instance), basis);
}

AnalysisSummary ComputeRequirements(const Instance& instance,
                                    const std::vector<TransformedCommodity>& tcs,
                                    OccupancyBasis basis) {
  const int t_count = instance.period_count;
  AnalysisSummary out;
  out.period_count = t_count;
  for (const TransformedCommodity& tc : tcs) out.beta.push_back(BetaMask(tc, t_count));
  out.phi.assign(static_cast<size_t>(t_count), 0);
  for (size_t k = 0; k < instance.commodities.size(); ++k) {
    const std::vector<TransformedCommodity> group(tcs.begin() + static_cast<long>(3 * k),
                                                  tcs.begin() + static_cast<long>(3 * k + 3));
    out.occupancy.push_back(OccupancyIntersection(group, t_count, basis));
    for (int t = 0; t < t_count; ++t) out.phi[t] += out.occupancy.back()[t] ? 1 : 0;
  }
  out.gamma = *std::min_element(out.phi.begin(), out.phi.end());
  out.theta = *std::max_element(out.phi.begin(), out.phi.end());
  return out;
}

}  // namespace cssnd
