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

// Commodity paths: one service or outsourced arc plus holding arcs, running
// from a TC's origin node at release to its destination node at due.

#ifndef CSSND_PATHS_HPP_
#define CSSND_PATHS_HPP_

#include <string>
#include <vector>

#include "cssnd/core.hpp"
#include "cssnd/cost_table.hpp"

namespace cssnd {

enum class PathMode { kOffered, kOutsourced };
const char* PathModeName(PathMode mode);

struct CommodityPath {
  int id = 0;  // 1-based within a PathSet; 0 for loose paths
  int tc_id = 0;
  int oc_id = 0;
  TcKind kind = TcKind::kOriginal;
  PathMode mode = PathMode::kOffered;
  // Holding arcs at the origin, the main arc, holding arcs at the destination.
  std::vector<int> arcs;
  int lead = 0;
  int trail = 0;
  int main_arc = 0;
  int origin_physical = 0;
  int dest_physical = 0;
  int depart_period = 0;  // TC release
  int arrive_period = 0;  // TC due
  double volume = 1.0;
  // Without and with the early/tardy multiplier.
  double base_cost = 0.0;
  double routing_cost = 0.0;
  // Cyclic span from departure to arrival.
  int busy = 0;

  std::vector<int> HoldingArcs() const;
};

// Offered paths for lead = 0..slack where slack = window span - d, then the
// outsourced variants in the same lead order. Service arcs whose capacity is
// below the volume are skipped. An empty result is legal.
std::vector<CommodityPath> EnumeratePaths(const TransformedCommodity& tc,
                                          const TimeSpaceNetwork& network,
                                          const CostTable& costs);

// Offered: m * w * (sum of arc costs). Outsourced: m * (c_o + w * holding).
double PathCost(const CommodityPath& path, const CostTable& costs);
double PathBaseCost(const CommodityPath& path, const CostTable& costs);

// Empty when the path is a contiguous single-main-arc chain from the TC's
// origin node to its destination node; otherwise a description.
std::string ValidatePath(const CommodityPath& path, const TransformedCommodity& tc,
                         const TimeSpaceNetwork& network);

class PathSet {
 public:
  PathSet(const TimeSpaceNetwork& network, const std::vector<TransformedCommodity>& tcs,
          const CostTable& costs);

  const std::vector<CommodityPath>& paths() const { return paths_; }
  const CommodityPath& path(int id) const { return paths_[id - 1]; }
  // Path ids of a TC: offered first, then outsourced, each by lead.
  const std::vector<int>& for_tc(int tc_id) const { return by_tc_[tc_id - 1]; }

 private:
  std::vector<CommodityPath> paths_;
  std::vector<std::vector<int>> by_tc_;
};

}  // namespace cssnd

#endif  // CSSND_PATHS_HPP_
