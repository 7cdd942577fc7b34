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

// Dedicate-merge-and-mix heuristic: construction, merging, mixing and
// capacity resolution over asset cycles.

#ifndef CSSND_DMAM_HPP_
#define CSSND_DMAM_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cssnd/core.hpp"
#include "cssnd/cost_table.hpp"
#include "cssnd/merge.hpp"
#include "cssnd/model.hpp"
#include "cssnd/paths.hpp"

namespace cssnd {

enum class SearchConfig { kR, kC, kA };
const char* SearchConfigName(SearchConfig config);  // "R", "C", "A"
std::optional<SearchConfig> ParseSearchConfig(const std::string& text);

// Everything derived from an instance that the heuristic reads.
struct Problem {
  explicit Problem(Instance source);

  Instance instance;
  TimeSpaceNetwork network;
  std::vector<TransformedCommodity> tcs;
  CostTable costs;
  PathSet paths;
};

// A path, possibly with covered leading / trailing holding arcs left to
// another asset.
struct Segment {
  int path_id = 0;
  int skip_lead = 0;
  int skip_trail = 0;
};

PathWindow SegmentWindow(const CommodityPath& path, const Segment& segment, int period_count);
std::vector<int> SegmentArcs(const CommodityPath& path, const Segment& segment);

enum class AssetKind { kOwned, kLeased };

struct AssetCycle {
  int id = 0;
  int asset_id = 0;  // assigned when the run finishes
  AssetKind kind = AssetKind::kOwned;
  std::vector<Segment> segments;  // 1 or 2, in cycle order
  // Closed walk of total duration |T| starting at the first segment's origin.
  std::vector<int> arcs;
  // Parallel to `arcs`: carried path id, 0 for empty moves.
  std::vector<int> carried;
  bool frozen = false;
};

// Holding and empty service moves from (from, from_period) to `to` in exactly
// `length` periods using at most `max_legs` service arcs, fewest first, each
// service arc taken as early as possible. `usable` filters service arcs.
std::optional<std::vector<int>> FillGap(const TimeSpaceNetwork& network, int from,
                                        int from_period, int to, int length, int max_legs,
                                        const std::function<bool(int)>& usable);

// Lays the segments out in order and closes the gaps between them; merge
// gaps allow one empty service arc, the return of a lone segment any number.
std::optional<AssetCycle> BuildCycle(const Problem& problem, const std::vector<Segment>& segments,
                                     const std::function<bool(int)>& usable);

// Empty when the cycle is a contiguous closed walk of |T| periods that
// contains every carried segment arc.
std::string ValidateCycle(const Problem& problem, const AssetCycle& cycle);

struct MergeCandidate {
  int cycle_one = 0;
  int cycle_two = 0;
  MergeType type = MergeType::kNoRep;
  bool shifted = false;
  int alternative = 0;  // 1..6 when shifted
  int a1 = 0;
  int a2 = 0;
  Segment one;
  Segment two;
  double cost = 0.0;  // combined routing cost of the (shifted) paths
};

// Primary iff busy > |T| - busy; both lists by busy descending, then id.
struct PathPartition {
  std::vector<int> primary;
  std::vector<int> secondary;
};
PathPartition PartitionByBusy(const std::vector<std::pair<int, int>>& id_busy, int period_count);

struct CostBreakdown {
  double fixed_owned = 0.0;
  double fixed_leased = 0.0;
  double routing = 0.0;      // paths on offered services, before multipliers
  double penalty = 0.0;      // early / tardy surcharge on offered paths
  double outsourcing = 0.0;  // outsourced paths including multipliers
  double Total() const { return fixed_owned + fixed_leased + routing + penalty + outsourcing; }
};

struct PhaseRecord {
  std::string phase;
  int cycles = 0;
  double cost = 0.0;
  double seconds = 0.0;
};

struct DmamStats {
  int regular_merges = 0;
  int shifted_merges = 0;
  int explored_candidates = 0;
  int mixes = 0;
  int phase5_outsourced = 0;
  int phase5_leased = 0;
  int p2_iterations = 0;
};

struct Solution {
  SearchConfig config = SearchConfig::kA;
  std::vector<int> selected;  // selected path id per commodity, instance order
  std::vector<AssetCycle> cycles;
  std::vector<int> outsourced;  // commodity ids
  int owned_used = 0;
  int leased = 0;
  CostBreakdown cost;
  // Maintained through the phases; audited against `cost`.
  double running_total = 0.0;
  std::vector<PhaseRecord> phase_log;
  DmamStats stats;
};

// Phases as separate steps, for testing; RunDmam chains them.
class DmamEngine {
 public:
  explicit DmamEngine(const Problem& problem);

  void Construct();
  void Merge(SearchConfig config);
  void Mix();
  void ResolveCapacity();
  Solution Finish(SearchConfig config);

  const std::vector<AssetCycle>& cycles() const { return cycles_; }
  const std::vector<int>& selected() const { return selected_; }
  double running_total() const { return running_total_; }
  const DmamStats& stats() const { return stats_; }

  // Candidates of the current single cycles in exploration order.
  std::vector<MergeCandidate> Explore(bool first_only) const;
  std::optional<MergeCandidate> EvaluatePair(int cycle_one, int cycle_two) const;
  bool Execute(const MergeCandidate& candidate);

 private:
  int IndexOf(int cycle_id) const;
  bool IsSingle(const AssetCycle& cycle) const;
  int OcIndexOfPath(int path_id) const;
  double FixedCost(int cycles) const;
  void Reserve(const AssetCycle& cycle);
  void Release(const AssetCycle& cycle);
  std::function<bool(int)> UsableBy(int a, int b) const;
  const CommodityPath* Sibling(const CommodityPath& path, int offset) const;
  // Cycle ids carrying each holding arc, skipping `exclude`; nullopt when
  // some arc is carried by none.
  std::optional<std::vector<int>> CoveringCycles(const std::vector<int>& holding_arcs,
                                                 const std::vector<int>& exclude) const;
  bool OutsourceCommodity(int oc_index, int exclude_cycle, double* delta_out, bool apply);
  void SetSelected(int oc_index, int path_id);
  void Refresh();
  void Log(const std::string& phase);

  const Problem& problem_;
  std::vector<int> selected_;
  std::vector<AssetCycle> cycles_;
  std::vector<int> owner_;  // per arc id: owning cycle id for service arcs
  std::vector<bool> outsourced_;
  int next_cycle_id_ = 1;
  int leased_ = 0;
  double routing_total_ = 0.0;
  double running_total_ = 0.0;
  std::vector<PhaseRecord> log_;
  DmamStats stats_;
  double phase_start_ = 0.0;
};

Solution RunDmam(const Problem& problem, SearchConfig config);

// First-principles cost of a finished solution.
CostBreakdown AuditCost(const Problem& problem, const Solution& solution);
// Empty when every commodity is delivered once, cycles are valid and no
// service arc carries two assets.
std::string ValidateSolution(const Problem& problem, const Solution& solution);
SolutionAssignment ToAssignment(const Problem& problem, const Solution& solution);

struct SolutionCounts {
  int on_time = 0;
  int early = 0;
  int tardy = 0;
  int outsourced = 0;
};
SolutionCounts CountDeliveries(const Problem& problem, const Solution& solution);

nlohmann::json ScheduleToJson(const Problem& problem, const Solution& solution, bool timing);
std::string ReportCsvHeader();
std::string ReportCsvRow(const Problem& problem, const Solution& solution, bool timing);

}  // namespace cssnd

#endif  // CSSND_DMAM_HPP_
