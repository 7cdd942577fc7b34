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

#ifndef CSSND_COST_TABLE_HPP_
#define CSSND_COST_TABLE_HPP_

#include <vector>

#include "cssnd/core.hpp"

namespace cssnd {

// Seeded routing costs: service ~ U[0.6, 1.0],
// outsourced ~ 25 + U[1.2, 2.0], rounded to three decimals.
inline constexpr double kServiceCostLow = 0.6;
inline constexpr double kServiceCostHigh = 1.0;
inline constexpr double kOutsourcedCostBase = 25.0;
inline constexpr double kOutsourcedCostLow = 1.2;
inline constexpr double kOutsourcedCostHigh = 2.0;

// Dense c^k_ij lookup for every (arc, TC). Holding arcs cost the flat
// holding rate for every TC. Drawn values come from
// DeriveSeed(routing_seed, kServiceCosts / kOutsourcedCosts), consumed TC by
// TC in arc id order.
class CostTable {
 public:
  CostTable(const Instance& instance, const TimeSpaceNetwork& network,
            const std::vector<TransformedCommodity>& tcs);

  bool Has(int arc_id, int tc_id) const;
  // Throws DomainError when the entry is missing.
  double Routing(int arc_id, int tc_id) const;
  double Multiplier(TcKind kind) const;
  const CostParams& params() const { return params_; }

 private:
  CostParams params_;
  int arc_count_;
  int tc_count_;
  std::vector<double> table_;
};

}  // namespace cssnd

#endif  // CSSND_COST_TABLE_HPP_
