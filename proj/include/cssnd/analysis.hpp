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

// Resource requirements implied by commodity time windows.

#ifndef CSSND_ANALYSIS_HPP_
#define CSSND_ANALYSIS_HPP_

#include <vector>

#include "cssnd/core.hpp"

namespace cssnd {

// Period sets are boolean masks indexed by period - 1.
using PeriodMask = std::vector<bool>;

// Cyclic inclusive interval [release, due].
PeriodMask WindowMap(const TransformedCommodity& tc, int period_count);
// Cyclic half-open interval [release, due); empty when release == due.
bool Beta(const TransformedCommodity& tc, int period, int period_count);
PeriodMask BetaMask(const TransformedCommodity& tc, int period_count);

// Which per-TC set the occupancy intersection is taken over.
enum class OccupancyBasis { kFullWindow, kInTransit };

// `tcs` are the three variants of one original commodity.
PeriodMask OccupancyIntersection(const std::vector<TransformedCommodity>& tcs,
                                 int period_count,
                                 OccupancyBasis basis = OccupancyBasis::kFullWindow);

struct AnalysisSummary {
  int period_count = 0;
  // beta[tc_id - 1][t - 1]
  std::vector<PeriodMask> beta;
  // occupancy[oc_index][t - 1]
  std::vector<PeriodMask> occupancy;
  std::vector<int> phi;
  int gamma = 0;
  int theta = 0;
};

AnalysisSummary ComputeRequirements(const Instance& instance,
                                    OccupancyBasis basis = OccupancyBasis::kFullWindow);
AnalysisSummary ComputeRequirements(const Instance& instance,
                                    const std::vector<TransformedCommodity>& tcs,
                                    OccupancyBasis basis = OccupancyBasis::kFullWindow);

}  // namespace cssnd

#endif  // CSSND_ANALYSIS_HPP_
