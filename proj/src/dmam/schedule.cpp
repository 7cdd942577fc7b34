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

#include <cstdio>
#include <string>

#include "cssnd/dmam.hpp"

namespace cssnd {

namespace {

std::string Fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*f", digits, value);
  return buffer;
}

double CpuSeconds(const Solution& solution) {
  double total = 0.0;
  for (const PhaseRecord& record : solution.phase_log) total += record.seconds;
  return total;
}

nlohmann::json CostJson(const CostBreakdown& cost) {
  return {{"fixed_owned", cost.fixed_owned}, {"fixed_leased", cost.fixed_leased},
          {"routing", cost.routing},         {"penalty", cost.penalty},
          {"outsourcing", cost.outsourcing}, {"total", cost.Total()}};
}

}  // namespace

nlohmann::json ScheduleToJson(const Problem& problem, const Solution& solution, bool timing) {
  const SolutionCounts counts = CountDeliveries(problem, solution);
  nlohmann::json out;
  out["instance"] = problem.instance.name;
  out["config"] = SearchConfigName(solution.config);
  out["objective"] = solution.cost.Total();
  out["cost"] = CostJson(solution.cost);
  out["owned_used"] = solution.owned_used;
  out["leased"] = solution.leased;
  out["deliveries"] = {{"on_time", counts.on_time},
                       {"early", counts.early},
                       {"tardy", counts.tardy},
                       {"outsourced", counts.outsourced}};

  nlohmann::json assets = nlohmann::json::array();
  for (const AssetCycle& cycle : solution.cycles) {
    nlohmann::json legs = nlohmann::json::array();
    for (std::size_t i = 0; i < cycle.arcs.size(); ++i) {
      const Arc& arc = problem.network.arc(cycle.arcs[i]);
      nlohmann::json leg = {{"arc", arc.id},
                            {"type", ArcTypeName(arc.type)},
                            {"from", arc.from_physical},
                            {"to", arc.to_physical},
                            {"depart", arc.depart_period},
                            {"arrive", arc.arrive_period}};
      if (cycle.carried[i] != 0) {
        const CommodityPath& path = problem.paths.path(cycle.carried[i]);
        leg["commodity"] = problem.tcs[path.tc_id - 1].parent_id;
      } else {
        leg["commodity"] = nullptr;
      }
      legs.push_back(leg);
    }
    assets.push_back({{"asset", cycle.asset_id},
                      {"kind", cycle.kind == AssetKind::kOwned ? "owned" : "leased"},
                      {"commodities", cycle.segments.size()},
                      {"legs", legs}});
  }
  out["assets"] = assets;

  nlohmann::json commodities = nlohmann::json::array();
  for (int id : solution.selected) {
    if (id == 0) continue;
    const CommodityPath& path = problem.paths.path(id);
    commodities.push_back({{"id", problem.tcs[path.tc_id - 1].parent_id},
                           {"tc", path.tc_id},
                           {"kind", TcKindName(path.kind)},
                           {"mode", PathModeName(path.mode)},
                           {"path", path.id},
                           {"arcs", path.arcs},
                           {"cost", path.routing_cost}});
  }
  out["commodities"] = commodities;

  nlohmann::json phases = nlohmann::json::array();
  for (const PhaseRecord& record : solution.phase_log) {
    phases.push_back({{"phase", record.phase},
                      {"cycles", record.cycles},
                      {"cost", record.cost},
                      {"seconds", timing ? record.seconds : 0.0}});
  }
  out["phases"] = phases;
  const DmamStats& s = solution.stats;
  out["stats"] = {{"regular_merges", s.regular_merges},
                  {"shifted_merges", s.shifted_merges},
                  {"explored_candidates", s.explored_candidates},
                  {"mixes", s.mixes},
                  {"phase5_outsourced", s.phase5_outsourced},
                  {"phase5_leased", s.phase5_leased},
                  {"p2_iterations", s.p2_iterations}};
  return out;
}

std::string ReportCsvHeader() {
  return "instance,config,owned,leased,on_time,early,tardy,outsourced,total,fixed_owned,"
         "fixed_leased,routing,penalty,outsourcing,cpu";
}

std::string ReportCsvRow(const Problem& problem, const Solution& solution, bool timing) {
  const SolutionCounts counts = CountDeliveries(problem, solution);
  const CostBreakdown& c = solution.cost;
  std::string row = problem.instance.name;
  row += ',' + std::string(SearchConfigName(solution.config));
  for (int value : {solution.owned_used, solution.leased, counts.on_time, counts.early,
                    counts.tardy, counts.outsourced}) {
    row += ',' + std::to_string(value);
  }
  for (double value : {c.Total(), c.fixed_owned, c.fixed_leased, c.routing, c.penalty,
                       c.outsourcing}) {
    row += ',' + Fixed(value, 3);
  }
  row += ',' + Fixed(timing ? CpuSeconds(solution) : 0.0, 3);
  return row;
}

}  // namespace cssnd
