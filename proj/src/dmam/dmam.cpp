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

#include "cssnd/dmam.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "cssnd/matching.hpp"

namespace cssnd {

namespace {

double Now() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

const Instance& Validated(const Instance& instance) {
  ValidateInstance(instance);
  return instance;
}

int SegmentBusy(const CommodityPath& path, const Segment& segment) {
  return path.busy - segment.skip_lead - segment.skip_trail;
}

bool Contains(const std::vector<int>& values, int value) {
  return std::find(values.begin(), values.end(), value) != values.end();
}

}  // namespace

const char* SearchConfigName(SearchConfig config) {
  switch (config) {
    case SearchConfig::kR:
      return "R";
    case SearchConfig::kC:
      return "C";
    case SearchConfig::kA:
      return "A";
  }
  return "?";
}

std::optional<SearchConfig> ParseSearchConfig(const std::string& text) {
  if (text == "R" || text == "r") return SearchConfig::kR;
  if (text == "C" || text == "c") return SearchConfig::kC;
  if (text == "A" || text == "a") return SearchConfig::kA;
  return std::nullopt;
}

Problem::Problem(Instance source)
    : instance(Validated(source)),
      network(BuildTimeSpaceNetwork(instance)),
      tcs(ExpandCommodities(instance)),
      costs(instance, network, tcs),
      paths(network, tcs, costs) {}

DmamEngine::DmamEngine(const Problem& problem)
    : problem_(problem),
      selected_(problem.instance.commodities.size(), 0),
      owner_(problem.network.arc_count() + 1, 0),
      outsourced_(problem.instance.commodities.size(), false) {}

int DmamEngine::IndexOf(int cycle_id) const {
  for (std::size_t i = 0; i < cycles_.size(); ++i) {
    if (cycles_[i].id == cycle_id) return static_cast<int>(i);
  }
  return -1;
}

bool DmamEngine::IsSingle(const AssetCycle& cycle) const {
  return cycle.segments.size() == 1 && !cycle.frozen;
}

int DmamEngine::OcIndexOfPath(int path_id) const {
  return (problem_.paths.path(path_id).tc_id - 1) / 3;
}

double DmamEngine::FixedCost(int cycles) const {
  const CostParams& params = problem_.costs.params();
  const int owned = problem_.instance.owned_assets;
  return params.fixed_owned * std::min(cycles, owned) +
         params.fixed_leased * std::max(0, cycles - owned);
}

void DmamEngine::Reserve(const AssetCycle& cycle) {
  for (int arc : cycle.arcs) {
    if (problem_.network.arc(arc).type == ArcType::kService) owner_[arc] = cycle.id;
  }
}

void DmamEngine::Release(const AssetCycle& cycle) {
  for (int arc : cycle.arcs) {
    if (owner_[arc] == cycle.id) owner_[arc] = 0;
  }
}

std::function<bool(int)> DmamEngine::UsableBy(int a, int b) const {
  return [this, a, b](int arc) {
    const int owner = owner_[arc];
    return owner == 0 || owner == a || owner == b;
  };
}

const CommodityPath* DmamEngine::Sibling(const CommodityPath& path, int offset) const {
  if (offset == 0) return &path;
  const int kind = static_cast<int>(path.kind) + offset;
  if (kind < 1 || kind > 3) return nullptr;
  const int tc = TcId((path.tc_id - 1) / 3, static_cast<TcKind>(kind));
  for (int id : problem_.paths.for_tc(tc)) {
    const CommodityPath& other = problem_.paths.path(id);
    if (other.mode == PathMode::kOffered && other.lead == path.lead) return &other;
  }
  return nullptr;
}

std::optional<std::vector<int>> DmamEngine::CoveringCycles(
    const std::vector<int>& holding_arcs, const std::vector<int>& exclude) const {
  std::vector<int> out;
  for (int arc : holding_arcs) {
    int found = 0;
    for (const AssetCycle& cycle : cycles_) {
      if (Contains(exclude, cycle.id)) continue;
      if (Contains(cycle.arcs, arc)) {
        found = cycle.id;
        break;
      }
    }
    if (found == 0) return std::nullopt;
    if (!Contains(out, found)) out.push_back(found);
  }
  return out;
}

void DmamEngine::SetSelected(int oc_index, int path_id) {
  if (selected_[oc_index] != 0) {
    routing_total_ -= problem_.paths.path(selected_[oc_index]).routing_cost;
  }
  selected_[oc_index] = path_id;
  if (path_id != 0) routing_total_ += problem_.paths.path(path_id).routing_cost;
}

void DmamEngine::Refresh() {
  running_total_ = FixedCost(static_cast<int>(cycles_.size())) + routing_total_;
}

void DmamEngine::Log(const std::string& phase) {
  Refresh();
  log_.push_back(
      PhaseRecord{phase, static_cast<int>(cycles_.size()), running_total_, Now() - phase_start_});
}

bool DmamEngine::OutsourceCommodity(int oc_index, int exclude_cycle, double* delta_out,
                                    bool apply) {
  const CommodityPath* best = nullptr;
  std::vector<int> best_cover;
  for (TcKind kind : {TcKind::kEarly, TcKind::kOriginal, TcKind::kTardy}) {
    for (int id : problem_.paths.for_tc(TcId(oc_index, kind))) {
      const CommodityPath& path = problem_.paths.path(id);
      if (path.mode != PathMode::kOutsourced) continue;
      auto cover = CoveringCycles(path.HoldingArcs(), {exclude_cycle});
      if (!cover) continue;
      if (best == nullptr || path.routing_cost < best->routing_cost ||
          (path.routing_cost == best->routing_cost && path.id < best->id)) {
        best = &path;
        best_cover = *cover;
      }
    }
  }
  if (best == nullptr) return false;
  if (delta_out != nullptr) {
    const int current = selected_[oc_index];
    *delta_out =
        best->routing_cost - (current == 0 ? 0.0 : problem_.paths.path(current).routing_cost);
  }
  if (apply) {
    SetSelected(oc_index, best->id);
    outsourced_[oc_index] = true;
    for (int id : best_cover) cycles_[IndexOf(id)].frozen = true;
    Refresh();
  }
  return true;
}

void DmamEngine::Construct() {
  phase_start_ = Now();
  const int period_count = problem_.network.period_count();
  const int oc_count = static_cast<int>(selected_.size());

  auto offered = [&](int oc_index) {
    std::vector<int> ids;
    for (TcKind kind : {TcKind::kEarly, TcKind::kOriginal, TcKind::kTardy}) {
      for (int id : problem_.paths.for_tc(TcId(oc_index, kind))) {
        if (problem_.paths.path(id).mode == PathMode::kOffered) ids.push_back(id);
      }
    }
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
      const double ca = problem_.paths.path(a).routing_cost;
      const double cb = problem_.paths.path(b).routing_cost;
      return ca != cb ? ca < cb : a < b;
    });
    return ids;
  };
  auto dedicable = [&](const CommodityPath& path) {
    return path.busy + problem_.instance.physical.Distance(path.dest_physical,
                                                           path.origin_physical) <=
           period_count;
  };

  std::vector<int> pending;
  for (int i = 0; i < oc_count; ++i) {
    for (int id : offered(i)) {
      const CommodityPath& path = problem_.paths.path(id);
      if (!dedicable(path) || owner_[path.main_arc] != 0) continue;
      AssetCycle cycle;
      cycle.id = next_cycle_id_++;
      cycle.segments = {Segment{id, 0, 0}};
      owner_[path.main_arc] = cycle.id;
      cycles_.push_back(cycle);
      SetSelected(i, id);
      break;
    }
    if (selected_[i] == 0) pending.push_back(i);
  }

  std::vector<int> dropped;
  for (AssetCycle& cycle : cycles_) {
    const int oc = OcIndexOfPath(cycle.segments[0].path_id);
    if (auto built = BuildCycle(problem_, cycle.segments, UsableBy(cycle.id, cycle.id))) {
      built->id = cycle.id;
      cycle = *built;
      Reserve(cycle);
      continue;
    }
    owner_[problem_.paths.path(cycle.segments[0].path_id).main_arc] = 0;
    bool rebuilt = false;
    for (int id : offered(oc)) {
      if (id == cycle.segments[0].path_id) continue;
      const CommodityPath& path = problem_.paths.path(id);
      if (!dedicable(path) || owner_[path.main_arc] != 0) continue;
      if (auto built = BuildCycle(problem_, {Segment{id, 0, 0}}, UsableBy(cycle.id, cycle.id))) {
        built->id = cycle.id;
        cycle = *built;
        Reserve(cycle);
        SetSelected(oc, id);
        rebuilt = true;
        break;
      }
    }
    if (!rebuilt) {
      SetSelected(oc, 0);
      dropped.push_back(cycle.id);
      pending.push_back(oc);
    }
  }
  std::erase_if(cycles_, [&](const AssetCycle& c) { return Contains(dropped, c.id); });

  std::sort(pending.begin(), pending.end());
  for (int oc : pending) {
    if (!OutsourceCommodity(oc, 0, nullptr, true)) {
      throw DomainError("commodity " + std::to_string(problem_.instance.commodities[oc].id) +
                        " has no deliverable path");
    }
  }
  Log("construct");
}

std::optional<MergeCandidate> DmamEngine::EvaluatePair(int cycle_one, int cycle_two) const {
  const int ia = IndexOf(cycle_one);
  const int ib = IndexOf(cycle_two);
  if (ia < 0 || ib < 0 || ia == ib) return std::nullopt;
  const AssetCycle& a = cycles_[ia];
  const AssetCycle& b = cycles_[ib];
  if (!IsSingle(a) || !IsSingle(b)) return std::nullopt;
  const int period_count = problem_.network.period_count();
  const PhysicalNetwork& physical = problem_.instance.physical;
  const auto usable = UsableBy(cycle_one, cycle_two);
  const Segment sa = a.segments[0];
  const Segment sb = b.segments[0];
  const CommodityPath& pa = problem_.paths.path(sa.path_id);
  const CommodityPath& pb = problem_.paths.path(sb.path_id);
  const PathWindow wa = SegmentWindow(pa, sa, period_count);
  const PathWindow wb = SegmentWindow(pb, sb, period_count);

  if (auto type = CheckRegularMerge(wa, wb, physical, period_count)) {
    if (BuildCycle(problem_, {sa, sb}, usable)) {
      MergeCandidate c;
      c.cycle_one = cycle_one;
      c.cycle_two = cycle_two;
      c.type = *type;
      c.one = sa;
      c.two = sb;
      c.cost = pa.routing_cost + pb.routing_cost;
      return c;
    }
  }

  std::optional<MergeCandidate> best;
  for (const ShiftAlternative& alt : FeasibleShifts(wa, wb, physical, period_count)) {
    const CommodityPath* qa = Sibling(pa, alt.a1);
    const CommodityPath* qb = Sibling(pb, alt.a2);
    if (qa == nullptr || qb == nullptr) continue;
    const Segment na{qa->id, 0, 0};
    const Segment nb{qb->id, 0, 0};
    auto type = CheckRegularMerge(SegmentWindow(*qa, na, period_count),
                                  SegmentWindow(*qb, nb, period_count), physical, period_count);
    if (!type || !BuildCycle(problem_, {na, nb}, usable)) continue;
    const double cost = qa->routing_cost + qb->routing_cost;
    if (best && cost >= best->cost) continue;
    MergeCandidate c;
    c.cycle_one = cycle_one;
    c.cycle_two = cycle_two;
    c.type = *type;
    c.shifted = true;
    c.alternative = alt.m;
    c.a1 = alt.a1;
    c.a2 = alt.a2;
    c.one = na;
    c.two = nb;
    c.cost = cost;
    best = c;
  }
  return best;
}

std::vector<MergeCandidate> DmamEngine::Explore(bool first_only) const {
  const int period_count = problem_.network.period_count();
  std::vector<std::pair<int, int>> id_busy;
  std::map<int, int> busy;
  for (const AssetCycle& cycle : cycles_) {
    if (!IsSingle(cycle)) continue;
    const int b = SegmentBusy(problem_.paths.path(cycle.segments[0].path_id), cycle.segments[0]);
    id_busy.emplace_back(cycle.id, b);
    busy[cycle.id] = b;
  }
  const PathPartition part = PartitionByBusy(id_busy, period_count);
  std::vector<std::pair<int, int>> order;
  for (int p : part.primary) {
    for (int s : part.secondary) {
      if (busy[s] <= period_count - busy[p]) order.emplace_back(p, s);
    }
  }
  for (std::size_t i = 0; i < part.secondary.size(); ++i) {
    for (std::size_t j = i + 1; j < part.secondary.size(); ++j) {
      const int u = part.secondary[i];
      const int v = part.secondary[j];
      if (busy[v] <= period_count - busy[u]) order.emplace_back(u, v);
    }
  }
  std::vector<MergeCandidate> out;
  for (const auto& [u, v] : order) {
    if (auto c = EvaluatePair(u, v)) {
      out.push_back(*c);
      if (first_only) break;
    }
  }
  return out;
}

bool DmamEngine::Execute(const MergeCandidate& candidate) {
  const int ia = IndexOf(candidate.cycle_one);
  const int ib = IndexOf(candidate.cycle_two);
  if (ia < 0 || ib < 0 || !IsSingle(cycles_[ia]) || !IsSingle(cycles_[ib])) return false;
  auto built = BuildCycle(problem_, {candidate.one, candidate.two},
                          UsableBy(candidate.cycle_one, candidate.cycle_two));
  if (!built) return false;
  const int oc_one = OcIndexOfPath(candidate.one.path_id);
  const int oc_two = OcIndexOfPath(candidate.two.path_id);
  Release(cycles_[ia]);
  Release(cycles_[ib]);
  built->id = candidate.cycle_one;
  cycles_[ia] = *built;
  Reserve(cycles_[ia]);
  cycles_.erase(cycles_.begin() + ib);
  SetSelected(oc_one, candidate.one.path_id);
  SetSelected(oc_two, candidate.two.path_id);
  if (candidate.shifted) {
    ++stats_.shifted_merges;
  } else {
    ++stats_.regular_merges;
  }
  Refresh();
  return true;
}

void DmamEngine::Merge(SearchConfig config) {
  phase_start_ = Now();
  if (config == SearchConfig::kR) {
    while (true) {
      const auto found = Explore(true);
      if (found.empty()) break;
      ++stats_.explored_candidates;
      if (!Execute(found[0])) break;
    }
  } else {
    while (true) {
      const auto candidates = Explore(false);
      stats_.explored_candidates += static_cast<int>(candidates.size());
      if (candidates.empty()) break;
      std::vector<CandidatePair> pairs;
      for (const MergeCandidate& c : candidates) {
        pairs.push_back(CandidatePair{c.cycle_one, c.cycle_two, c.cost});
      }
      std::vector<int> chosen;
      if (config == SearchConfig::kC) {
        chosen = Scopf(pairs);
      } else {
        const MatchingResult result = SolveP2(pairs);
        stats_.p2_iterations += result.iterations;
        chosen = result.selected;
      }
      int executed = 0;
      for (int index : chosen) {
        const MergeCandidate& c = candidates[index];
        auto fresh = EvaluatePair(c.cycle_one, c.cycle_two);
        if (fresh && Execute(*fresh)) ++executed;
      }
      if (executed == 0) break;
    }
  }
  Log("merge");
}

void DmamEngine::Mix() {
  phase_start_ = Now();
  const int period_count = problem_.network.period_count();
  const PhysicalNetwork& physical = problem_.instance.physical;
  std::vector<int> targets;
  for (const AssetCycle& cycle : cycles_) {
    if (IsSingle(cycle)) targets.push_back(cycle.id);
  }
  for (int target : targets) {
    const int it = IndexOf(target);
    if (it < 0 || !IsSingle(cycles_[it])) continue;
    const int current = cycles_[it].segments[0].path_id;
    const int oc = OcIndexOfPath(current);

    std::vector<int> candidates;
    for (TcKind kind : {TcKind::kEarly, TcKind::kOriginal, TcKind::kTardy}) {
      for (int id : problem_.paths.for_tc(TcId(oc, kind))) {
        if (id != current && problem_.paths.path(id).mode == PathMode::kOffered) {
          candidates.push_back(id);
        }
      }
    }
    std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
      const double ca = problem_.paths.path(a).routing_cost;
      const double cb = problem_.paths.path(b).routing_cost;
      return ca != cb ? ca < cb : a < b;
    });
    candidates.insert(candidates.begin(), current);

    bool mixed = false;
    for (int id : candidates) {
      if (mixed) break;
      const CommodityPath& path = problem_.paths.path(id);
      std::vector<std::pair<int, int>> skips;
      for (int a = 0; a <= path.lead; ++a) {
        for (int b = 0; b <= path.trail; ++b) {
          if (a + b >= 1) skips.emplace_back(a, b);
        }
      }
      std::stable_sort(skips.begin(), skips.end(), [](const auto& x, const auto& y) {
        return x.first + x.second < y.first + y.second;
      });
      for (const auto& [a, b] : skips) {
        if (mixed) break;
        std::vector<int> left(path.arcs.begin(), path.arcs.begin() + a);
        left.insert(left.end(), path.arcs.end() - b, path.arcs.end());
        const Segment segment{id, a, b};
        const PathWindow window = SegmentWindow(path, segment, period_count);
        for (const AssetCycle& partner : cycles_) {
          if (partner.id == target || !IsSingle(partner)) continue;
          auto cover = CoveringCycles(left, {target, partner.id});
          if (!cover) continue;
          const Segment other = partner.segments[0];
          const PathWindow other_window =
              SegmentWindow(problem_.paths.path(other.path_id), other, period_count);
          if (!CheckRegularMerge(window, other_window, physical, period_count)) continue;
          auto built = BuildCycle(problem_, {segment, other}, UsableBy(target, partner.id));
          if (!built) continue;
          const int partner_id = partner.id;
          const int oc_partner = OcIndexOfPath(other.path_id);
          Release(cycles_[IndexOf(target)]);
          Release(cycles_[IndexOf(partner_id)]);
          built->id = target;
          cycles_[IndexOf(target)] = *built;
          Reserve(*built);
          cycles_.erase(cycles_.begin() + IndexOf(partner_id));
          SetSelected(oc, id);
          SetSelected(oc_partner, other.path_id);
          for (int c : *cover) cycles_[IndexOf(c)].frozen = true;
          ++stats_.mixes;
          mixed = true;
          break;
        }
      }
    }
  }
  Log("mix");
}

void DmamEngine::ResolveCapacity() {
  phase_start_ = Now();
  const int owned = problem_.instance.owned_assets;
  const int leasable = problem_.instance.leasable_assets;
  const double lease_cost = problem_.costs.params().fixed_leased;
  while (static_cast<int>(cycles_.size()) > owned + leased_) {
    // Dissolve the unfrozen cycle whose commodities are cheapest to outsource.
    int best_cycle = 0;
    std::vector<int> best_ocs;
    double best_delta = std::numeric_limits<double>::infinity();
    for (const AssetCycle& cycle : cycles_) {
      if (cycle.frozen) continue;
      std::vector<int> ocs;
      double total = 0.0;
      bool ok = true;
      for (const Segment& segment : cycle.segments) {
        const int oc = OcIndexOfPath(segment.path_id);
        double delta = 0.0;
        if (!OutsourceCommodity(oc, cycle.id, &delta, false)) {
          ok = false;
          break;
        }
        ocs.push_back(oc);
        total += delta;
      }
      if (ok && total < best_delta) {
        best_delta = total;
        best_cycle = cycle.id;
        best_ocs = ocs;
      }
    }
    if (!best_ocs.empty() && (best_delta < lease_cost || leased_ >= leasable)) {
      const int index = IndexOf(best_cycle);
      Release(cycles_[index]);
      cycles_.erase(cycles_.begin() + index);
      for (int oc : best_ocs) {
        OutsourceCommodity(oc, best_cycle, nullptr, true);
        ++stats_.phase5_outsourced;
      }
    } else if (leased_ < leasable) {
      ++leased_;
      ++stats_.phase5_leased;
    } else {
      throw DomainError("fleet exhausted: " + std::to_string(cycles_.size()) +
                        " cycles for " + std::to_string(owned + leasable) + " assets");
    }
    Refresh();
  }
  Log("resolve");
}

Solution DmamEngine::Finish(SearchConfig config) {
  Solution solution;
  solution.config = config;
  solution.selected = selected_;
  solution.cycles = cycles_;
  const int owned = problem_.instance.owned_assets;
  for (std::size_t i = 0; i < solution.cycles.size(); ++i) {
    AssetCycle& cycle = solution.cycles[i];
    cycle.asset_id = static_cast<int>(i) + 1;
    cycle.kind = static_cast<int>(i) < owned ? AssetKind::kOwned : AssetKind::kLeased;
  }
  for (std::size_t i = 0; i < selected_.size(); ++i) {
    if (outsourced_[i]) solution.outsourced.push_back(problem_.instance.commodities[i].id);
  }
  const int count = static_cast<int>(cycles_.size());
  solution.owned_used = std::min(count, owned);
  solution.leased = std::max(0, count - owned);
  Refresh();
  solution.running_total = running_total_;
  solution.cost = AuditCost(problem_, solution);
  solution.phase_log = log_;
  solution.stats = stats_;
  return solution;
}

Solution RunDmam(const Problem& problem, SearchConfig config) {
  DmamEngine engine(problem);
  engine.Construct();
  engine.Merge(config);
  engine.Mix();
  engine.ResolveCapacity();
  return engine.Finish(config);
}

CostBreakdown AuditCost(const Problem& problem, const Solution& solution) {
  CostBreakdown cost;
  const CostParams& params = problem.costs.params();
  const int count = static_cast<int>(solution.cycles.size());
  const int owned = problem.instance.owned_assets;
  cost.fixed_owned = params.fixed_owned * std::min(count, owned);
  cost.fixed_leased = params.fixed_leased * std::max(0, count - owned);
  for (int id : solution.selected) {
    if (id == 0) continue;
    const CommodityPath& path = problem.paths.path(id);
    const double full = PathCost(path, problem.costs);
    if (path.mode == PathMode::kOffered) {
      const double base = PathBaseCost(path, problem.costs);
      cost.routing += base;
      cost.penalty += full - base;
    } else {
      cost.outsourcing += full;
    }
  }
  return cost;
}

std::string ValidateSolution(const Problem& problem, const Solution& solution) {
  const auto& commodities = problem.instance.commodities;
  if (solution.selected.size() != commodities.size()) return "selection size mismatch";
  std::set<int> holding_covered;
  std::map<int, int> service_use;
  std::map<int, int> carried;
  for (const AssetCycle& cycle : solution.cycles) {
    if (std::string error = ValidateCycle(problem, cycle); !error.empty()) {
      return "cycle " + std::to_string(cycle.id) + ": " + error;
    }
    for (int arc : cycle.arcs) {
      const ArcType type = problem.network.arc(arc).type;
      if (type == ArcType::kHolding) holding_covered.insert(arc);
      if (type == ArcType::kService && ++service_use[arc] > 1) {
        return "service arc " + std::to_string(arc) + " used by two assets";
      }
    }
    for (const Segment& segment : cycle.segments) ++carried[segment.path_id];
  }
  if (solution.leased > problem.instance.leasable_assets) return "too many leased assets";
  for (std::size_t i = 0; i < commodities.size(); ++i) {
    const int id = solution.selected[i];
    const std::string label = "commodity " + std::to_string(commodities[i].id);
    if (id == 0) return label + " undelivered";
    const CommodityPath& path = problem.paths.path(id);
    if ((path.tc_id - 1) / 3 != static_cast<int>(i)) return label + " has a foreign path";
    if (std::string error = ValidatePath(path, problem.tcs[path.tc_id - 1], problem.network);
        !error.empty()) {
      return label + ": " + error;
    }
    const bool outsourced = Contains(solution.outsourced, commodities[i].id);
    if (outsourced != (path.mode == PathMode::kOutsourced)) return label + " mode mismatch";
    if (path.mode == PathMode::kOffered && carried[id] != 1) {
      return label + " carried " + std::to_string(carried[id]) + " times";
    }
    for (int arc : path.arcs) {
      if (problem.network.arc(arc).type == ArcType::kHolding && !holding_covered.count(arc)) {
        return label + " holding arc " + std::to_string(arc) + " has no asset";
      }
    }
  }
  return "";
}

SolutionAssignment ToAssignment(const Problem& problem, const Solution& solution) {
  SolutionAssignment out;
  for (const AssetCycle& cycle : solution.cycles) {
    out[DName(cycle.asset_id)] = 1.0;
    for (int arc : cycle.arcs) out[YName(cycle.asset_id, arc)] = 1.0;
  }
  for (int id : solution.selected) {
    if (id == 0) continue;
    const CommodityPath& path = problem.paths.path(id);
    out[PName(path.tc_id)] = 1.0;
    for (int arc : path.arcs) out[XName(path.tc_id, arc)] += path.volume;
    if (path.mode == PathMode::kOutsourced) out[SName(path.tc_id, path.main_arc)] = 1.0;
  }
  return out;
}

SolutionCounts CountDeliveries(const Problem& problem, const Solution& solution) {
  SolutionCounts counts;
  for (int id : solution.selected) {
    if (id == 0) continue;
    const CommodityPath& path = problem.paths.path(id);
    if (path.mode == PathMode::kOutsourced) {
      ++counts.outsourced;
    } else if (path.kind == TcKind::kEarly) {
      ++counts.early;
    } else if (path.kind == TcKind::kTardy) {
      ++counts.tardy;
    } else {
      ++counts.on_time;
    }
  }
  return counts;
}

}  // namespace cssnd
