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

#include <algorithm>
#include <limits>
#include <string>

#include "cssnd/dmam.hpp"

namespace cssnd {

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

}  // namespace

PathWindow SegmentWindow(const CommodityPath& path, const Segment& segment, int period_count) {
  return PathWindow{path.origin_physical, path.dest_physical,
                    CyclicPeriod(path.depart_period + segment.skip_lead, period_count),
                    CyclicPeriod(path.arrive_period - segment.skip_trail, period_count)};
}

std::vector<int> SegmentArcs(const CommodityPath& path, const Segment& segment) {
  return std::vector<int>(path.arcs.begin() + segment.skip_lead,
                          path.arcs.end() - segment.skip_trail);
}

std::optional<std::vector<int>> FillGap(const TimeSpaceNetwork& network, int from,
                                        int from_period, int to, int length, int max_legs,
                                        const std::function<bool(int)>& usable) {
  const int n = network.physical_count();
  const int period_count = network.period_count();
  // legs[e][p]: fewest service arcs from (p, e elapsed) to (to, length).
  std::vector<std::vector<int>> legs(length + 1, std::vector<int>(n + 1, kUnreachable));
  legs[length][to] = 0;
  auto service_moves = [&](int p, int e, auto&& visit) {
    const int period = CyclicPeriod(from_period + e, period_count);
    for (int q = 1; q <= n; ++q) {
      if (q == p) continue;
      const int arc = network.ServiceArc(p, q, period);
      if (arc == 0 || !usable(arc)) continue;
      const int d = network.arc(arc).duration;
      if (e + d > length) continue;
      visit(q, arc, e + d);
    }
  };
  for (int e = length - 1; e >= 0; --e) {
    for (int p = 1; p <= n; ++p) {
      int best = legs[e + 1][p];
      service_moves(p, e, [&](int q, int, int next) {
        if (legs[next][q] < kUnreachable) best = std::min(best, legs[next][q] + 1);
      });
      legs[e][p] = best;
    }
  }
  if (legs[0][from] >= kUnreachable || legs[0][from] > max_legs) return std::nullopt;

  std::vector<int> walk;
  int p = from;
  int e = 0;
  while (e < length) {
    const int target = legs[e][p];
    int taken = 0;
    int taken_q = 0;
    int taken_next = 0;
    service_moves(p, e, [&](int q, int arc, int next) {
      if (taken == 0 && legs[next][q] + 1 == target) {
        taken = arc;
        taken_q = q;
        taken_next = next;
      }
    });
    if (taken != 0) {
      walk.push_back(taken);
      p = taken_q;
      e = taken_next;
    } else {
      walk.push_back(network.HoldingArc(p, CyclicPeriod(from_period + e, period_count)));
      ++e;
    }
  }
  return walk;
}

std::optional<AssetCycle> BuildCycle(const Problem& problem, const std::vector<Segment>& segments,
                                     const std::function<bool(int)>& usable) {
  const int period_count = problem.network.period_count();
  const int max_legs = segments.size() == 1 ? kUnreachable : 1;
  AssetCycle cycle;
  cycle.segments = segments;
  int total = 0;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    const CommodityPath& path = problem.paths.path(segments[i].path_id);
    const CommodityPath& next = problem.paths.path(segments[(i + 1) % segments.size()].path_id);
    const PathWindow here = SegmentWindow(path, segments[i], period_count);
    const PathWindow there =
        SegmentWindow(next, segments[(i + 1) % segments.size()], period_count);
    if (path.mode != PathMode::kOffered || !usable(path.main_arc)) return std::nullopt;
    for (int arc : SegmentArcs(path, segments[i])) {
      cycle.arcs.push_back(arc);
      cycle.carried.push_back(path.id);
    }
    const int busy = path.busy - segments[i].skip_lead - segments[i].skip_trail;
    int gap = CyclicSpan(here.arrive, there.depart, period_count);
    if (segments.size() == 1) gap = period_count - busy;
    total += busy + gap;
    auto fill = FillGap(problem.network, here.dest, here.arrive, there.origin, gap, max_legs,
                        usable);
    if (!fill) return std::nullopt;
    for (int arc : *fill) {
      cycle.arcs.push_back(arc);
      cycle.carried.push_back(0);
    }
  }
  if (total != period_count) return std::nullopt;
  return cycle;
}

std::string ValidateCycle(const Problem& problem, const AssetCycle& cycle) {
  const TimeSpaceNetwork& network = problem.network;
  if (cycle.arcs.empty()) return "empty cycle";
  if (cycle.arcs.size() != cycle.carried.size()) return "carried list size mismatch";
  int duration = 0;
  for (std::size_t i = 0; i < cycle.arcs.size(); ++i) {
    const Arc& arc = network.arc(cycle.arcs[i]);
    const Arc& next = network.arc(cycle.arcs[(i + 1) % cycle.arcs.size()]);
    if (arc.type == ArcType::kOutsourced) return "cycle uses an outsourced arc";
    if (arc.to_node != next.from_node) {
      return "cycle breaks after arc " + std::to_string(arc.id);
    }
    duration += arc.duration;
  }
  if (duration != network.period_count()) {
    return "cycle lasts " + std::to_string(duration) + " periods";
  }
  for (const Segment& segment : cycle.segments) {
    const CommodityPath& path = problem.paths.path(segment.path_id);
    for (int arc : SegmentArcs(path, segment)) {
      bool found = false;
      for (std::size_t i = 0; i < cycle.arcs.size(); ++i) {
        found = found || (cycle.arcs[i] == arc && cycle.carried[i] == path.id);
      }
      if (!found) return "path " + std::to_string(path.id) + " arc " + std::to_string(arc) +
                         " not carried";
    }
  }
  return "";
}

PathPartition PartitionByBusy(const std::vector<std::pair<int, int>>& id_busy, int period_count) {
  std::vector<std::pair<int, int>> sorted = id_busy;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  PathPartition out;
  for (const auto& [id, busy] : sorted) {
    (busy > period_count - busy ? out.primary : out.secondary).push_back(id);
  }
  return out;
}

}  // namespace cssnd
