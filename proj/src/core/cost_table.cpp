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

#include "cssnd/cost_table.hpp"

#include <cmath>
#include <string>

#include "cssnd/random.hpp"

namespace cssnd {

namespace {

double Round3(double v) { return std::round(v * 1000.0) / 1000.0; }

}  // namespace

CostTable::CostTable(const Instance& instance, const TimeSpaceNetwork& network,
                     const std::vector<TransformedCommodity>& tcs)
    : params_(instance.costs),
      arc_count_(network.arc_count()),
      tc_count_(static_cast<int>(tcs.size())) {
  table_.assign(static_cast<size_t>(arc_count_) * static_cast<size_t>(tc_count_), NAN);
  auto at = [&](int arc, int tc) -> double& {
    return table_[static_cast<size_t>(tc - 1) * static_cast<size_t>(arc_count_) +
                  static_cast<size_t>(arc - 1)];
  };
  for (int tc = 1; tc <= tc_count_; ++tc) {
    for (int arc : network.holding_arcs()) at(arc, tc) = params_.holding;
  }
  if (params_.routing_seed.has_value()) {
    Rng service(DeriveSeed(*params_.routing_seed, Stream::kServiceCosts));
    Rng outsourced(DeriveSeed(*params_.routing_seed, Stream::kOutsourcedCosts));
    for (int tc = 1; tc <= tc_count_; ++tc) {
      for (int arc : network.service_arcs()) {
        at(arc, tc) = Round3(service.Uniform(kServiceCostLow, kServiceCostHigh));
      }
      for (int arc : network.outsourced_arcs()) {
        at(arc, tc) = Round3(kOutsourcedCostBase +
                             outsourced.Uniform(kOutsourcedCostLow, kOutsourcedCostHigh));
      }
    }
  }
  for (const RoutingEntry& e : params_.routing) {
    const bool in_range = e.from >= 1 && e.from <= network.physical_count() && e.to >= 1 &&
                          e.to <= network.physical_count() && e.depart >= 1 &&
                          e.depart <= network.period_count();
    const int arc = !in_range                         ? 0
                    : e.type == ArcType::kService     ? network.ServiceArc(e.from, e.to, e.depart)
                    : e.type == ArcType::kOutsourced  ? network.OutsourcedArc(e.from, e.to, e.depart)
                                                      : 0;
    if (arc == 0 || e.tc < 1 || e.tc > tc_count_) {
      throw DomainError("routing entry refers to a missing arc or TC (" +
                        std::string(ArcTypeName(e.type)) + " " + std::to_string(e.from) +
                        "->" + std::to_string(e.to) + " @" + std::to_string(e.depart) +
                        ", tc " + std::to_string(e.tc) + ")");
    }
    at(arc, e.tc) = e.cost;
  }
}

bool CostTable::Has(int arc_id, int tc_id) const {
  if (arc_id < 1 || arc_id > arc_count_ || tc_id < 1 || tc_id > tc_count_) return false;
  return !std::isnan(table_[static_cast<size_t>(tc_id - 1) * static_cast<size_t>(arc_count_) +
                            static_cast<size_t>(arc_id - 1)]);
}

double CostTable::Routing(int arc_id, int tc_id) const {
  if (!Has(arc_id, tc_id)) {
    throw DomainError("missing routing cost for arc " + std::to_string(arc_id) + ", TC " +
                      std::to_string(tc_id));
  }
  return table_[static_cast<size_t>(tc_id - 1) * static_cast<size_t>(arc_count_) +
                static_cast<size_t>(arc_id - 1)];
}

double CostTable::Multiplier(TcKind kind) const {
  switch (kind) {
    case TcKind::kEarly:
      return params_.penalty_early;
    case TcKind::kTardy:
      return params_.penalty_tardy;
    case TcKind::kOriginal:
      return 1.0;
  }
  return 1.0;
}

}  // namespace cssnd
