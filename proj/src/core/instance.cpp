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

#include <cmath>
#include <set>
#include <string>

#include "cssnd/core.hpp"

namespace cssnd {

namespace {

bool NonNegative(double v) { return std::isfinite(v) && v >= 0.0; }

}  // namespace

void ValidateInstance(const Instance& instance) {
  std::vector<std::string> problems;
  if (instance.period_count < 2) problems.push_back("periods must be at least 2");
  if (instance.physical.node_count < 2) {
    problems.push_back("n_physical must be at least 2");
  }
  if (problems.empty()) {
    for (const auto& v : ValidateDistances(instance.physical, instance.period_count)) {
      problems.push_back(v.message);
    }
  }
  if (instance.owned_assets < 1) problems.push_back("owned must be at least 1");
  if (instance.leasable_assets < 0) problems.push_back("leasable must be non-negative");
  if (!(instance.service_capacity > 0.0)) {
    problems.push_back("service capacity must be positive");
  }
  const CostParams& c = instance.costs;
  if (!NonNegative(c.fixed_owned) || !NonNegative(c.fixed_leased) ||
      !NonNegative(c.holding)) {
    problems.push_back("costs must be finite and non-negative");
  }
  if (!(c.penalty_early >= 1.0) || !(c.penalty_tardy >= 1.0) ||
      !std::isfinite(c.penalty_early) || !std::isfinite(c.penalty_tardy)) {
    problems.push_back("penalty multipliers must be at least 1");
  }
  for (const RoutingEntry& e : c.routing) {
    if (!NonNegative(e.cost)) problems.push_back("routing costs must be non-negative");
    if (e.type == ArcType::kHolding) {
      problems.push_back("routing entries apply to service or outsourced arcs");
    }
  }
  std::set<int> ids;
  const int n = instance.physical.node_count;
  const int t_count = instance.period_count;
  for (const OriginalCommodity& oc : instance.commodities) {
    const std::string tag = "commodity " + std::to_string(oc.id) + ": ";
    if (!ids.insert(oc.id).second) problems.push_back(tag + "duplicate id");
    if (oc.origin < 1 || oc.origin > n || oc.dest < 1 || oc.dest > n) {
      problems.push_back(tag + "node out of range");
    } else if (oc.origin == oc.dest) {
      problems.push_back(tag + "origin equals destination");
    }
    if (oc.release < 1 || oc.release > t_count || oc.due < 1 || oc.due > t_count) {
      problems.push_back(tag + "period out of range");
    }
    if (!(oc.volume > 0.0) || !std::isfinite(oc.volume)) {
      problems.push_back(tag + "volume must be positive");
    }
  }
  if (!problems.empty()) {
    std::string message = "invalid instance";
    for (const auto& p : problems) message += "\n  " + p;
    throw DomainError(message);
  }
}

TimeSpaceNetwork BuildTimeSpaceNetwork(const Instance& instance) {
  if (!ValidateDistances(instance.physical, instance.period_count).empty()) {
    throw DomainError("physical network fails distance validation");
  }
  return TimeSpaceNetwork(instance.physical, instance.period_count,
                          instance.service_capacity, instance.outsourced_arcs);
}

}  // namespace cssnd
