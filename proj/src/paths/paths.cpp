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

#include "cssnd/paths.hpp"

#include <string>

namespace cssnd {

const char* PathModeName(PathMode mode) {
  return mode == PathMode::kOffered ? "offered" : "outsourced";
}

std::vector<int> CommodityPath::HoldingArcs() const {
  std::vector<int> out;
  for (int a : arcs) {
    if (a != main_arc) out.push_back(a);
  }
  return out;
}

double PathBaseCost(const CommodityPath& path, const CostTable& costs) {
  double total = 0.0;
  for (int a : path.arcs) {
    const double c = costs.Routing(a, path.tc_id);
    total += (path.mode == PathMode::kOutsourced && a == path.main_arc) ? c : path.volume * c;
  }
  return total;
}

double PathCost(const CommodityPath& path, const CostTable& costs) {
  return costs.Multiplier(path.kind) * PathBaseCost(path, costs);
}

std::vector<CommodityPath> EnumeratePaths(const TransformedCommodity& tc,
                                          const TimeSpaceNetwork& network,
                                          const CostTable& costs) {
  std::vector<CommodityPath> out;
  const int t_count = network.period_count();
  const int o = tc.origin_physical;
  const int d = tc.dest_physical;
  const int span = CyclicSpan(tc.release, tc.due, t_count);
  const int slack = span - [&] {
    // Duration of any main arc between o and d; all share the distance.
    const int a = network.ServiceArc(o, d, tc.release);
    return a != 0 ? network.arc(a).duration : span + 1;
  }();
  if (slack < 0) return out;
  for (PathMode mode : {PathMode::kOffered, PathMode::kOutsourced}) {
    for (int lead = 0; lead <= slack; ++lead) {
      const int depart = CyclicPeriod(tc.release + lead, t_count);
      const int main = mode == PathMode::kOffered ? network.ServiceArc(o, d, depart)
                                                  : network.OutsourcedArc(o, d, depart);
      if (main == 0) continue;
      const Arc& arc = network.arc(main);
      if (arc.capacity < tc.volume) continue;
      CommodityPath path;
      path.tc_id = tc.id;
      path.oc_id = tc.parent_id;
      path.kind = tc.kind;
      path.mode = mode;
      path.lead = lead;
      path.trail = slack - lead;
      path.main_arc = main;
      path.origin_physical = o;
      path.dest_physical = d;
      path.depart_period = tc.release;
      path.arrive_period = tc.due;
      path.volume = tc.volume;
      path.busy = span;
      for (int i = 0; i < lead; ++i) {
        path.arcs.push_back(network.HoldingArc(o, CyclicPeriod(tc.release + i, t_count)));
      }
      path.arcs.push_back(main);
      for (int i = 0; i < path.trail; ++i) {
        path.arcs.push_back(
            network.HoldingArc(d, CyclicPeriod(arc.arrive_period + i, t_count)));
      }
      path.base_cost = PathBaseCost(path, costs);
      path.routing_cost = costs.Multiplier(tc.kind) * path.base_cost;
      out.push_back(std::move(path));
    }
  }
  return out;
}

std::string ValidatePath(const CommodityPath& path, const TransformedCommodity& tc,
                         const TimeSpaceNetwork& network) {
  if (path.arcs.empty()) return "path has no arcs";
  int node = tc.origin_node;
  int mains = 0;
  for (int a : path.arcs) {
    if (a < 1 || a > network.arc_count()) return "arc id out of range";
    const Arc& arc = network.arc(a);
    if (arc.from_node != node) return "arc chain is not contiguous";
    if (arc.type != ArcType::kHolding) {
      ++mains;
      const ArcType want =
          path.mode == PathMode::kOffered ? ArcType::kService : ArcType::kOutsourced;
      if (arc.type != want || a != path.main_arc) return "main arc has the wrong type";
    }
    node = arc.to_node;
  }
  if (mains != 1) return "path needs exactly one main arc";
  if (node != tc.dest_node) return "path does not end at the TC destination";
  int total = 0;
  for (int a : path.arcs) total += network.arc(a).duration;
  if (total != CyclicSpan(tc.release, tc.due, network.period_count())) {
    return "path duration differs from the window span";
  }
  return "";
}

PathSet::PathSet(const TimeSpaceNetwork& network, const std::vector<TransformedCommodity>& tcs,
                 const CostTable& costs) {
  by_tc_.resize(tcs.size());
  for (const TransformedCommodity& tc : tcs) {
    for (CommodityPath& path : EnumeratePaths(tc, network, costs)) {
      path.id = static_cast<int>(paths_.size()) + 1;
      by_tc_[tc.id - 1].push_back(path.id);
      paths_.push_back(std::move(path));
    }
  }
}

}  // namespace cssnd
