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
#include <set>
#include <string>

#include "cssnd/core.hpp"

namespace cssnd {

int CyclicPeriod(int period, int period_count) {
  int r = (period - 1) % period_count;
  if (r < 0) r += period_count;
  return r + 1;
}

int CyclicSpan(int from, int to, int period_count) {
  int r = (to - from) % period_count;
  if (r < 0) r += period_count;
  return r;
}

int PhysicalNetwork::TotalDistance() const {
  int total = 0;
  for (int i = 1; i <= node_count; ++i) {
    for (int j = 1; j <= node_count; ++j) {
      if (i != j) total += Distance(i, j);
    }
  }
  return total;
}

std::vector<DistanceViolation> ValidateDistances(const PhysicalNetwork& physical,
                                                 int period_count) {
  using Kind = DistanceViolation::Kind;
  std::vector<DistanceViolation> out;
  const int n = physical.node_count;
  if (n < 1 || static_cast<int>(physical.distance.size()) != n) {
    out.push_back({Kind::kShape, 0, 0, 0, "distance matrix is not n x n"});
    return out;
  }
  for (const auto& row : physical.distance) {
    if (static_cast<int>(row.size()) != n) {
      out.push_back({Kind::kShape, 0, 0, 0, "distance matrix is not n x n"});
      return out;
    }
  }
  const int limit = period_count / 2;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const int d = physical.Distance(i, j);
      if (i == j) {
        if (d != 0) {
          out.push_back({Kind::kDiagonal, i, j, 0,
                         "d(" + std::to_string(i) + "," + std::to_string(i) +
                             ") must be 0"});
        }
        continue;
      }
      if (d < 1) {
        out.push_back({Kind::kNonPositive, i, j, 0,
                       "d(" + std::to_string(i) + "," + std::to_string(j) +
                           ") must be at least 1"});
      } else if (d > limit) {
        out.push_back({Kind::kReturnTrip, i, j, 0,
                       "d(" + std::to_string(i) + "," + std::to_string(j) +
                           ")=" + std::to_string(d) + " exceeds floor(|T|/2)=" +
                           std::to_string(limit)});
      }
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (physical.Distance(i, k) > physical.Distance(i, j) + physical.Distance(j, k)) {
          out.push_back({Kind::kTriangle, i, j, k,
                         "d(" + std::to_string(i) + "," + std::to_string(k) +
                             ") > d(" + std::to_string(i) + "," + std::to_string(j) +
                             ") + d(" + std::to_string(j) + "," + std::to_string(k) +
                             ")"});
        }
      }
    }
  }
  return out;
}

int TsNode(int physical, int period, int period_count) {
  if (period_count < 1 || period < 1 || period > period_count || physical < 1) {
    throw DomainError("ts_node: physical " + std::to_string(physical) + ", period " +
                      std::to_string(period) + " out of range");
  }
  return (physical - 1) * period_count + period;
}

std::pair<int, int> DecodeTsNode(int node, int period_count) {
  if (node < 1) throw DomainError("time-space node id must be positive");
  return {(node - 1) / period_count + 1, (node - 1) % period_count + 1};
}

const char* ArcTypeName(ArcType type) {
  switch (type) {
    case ArcType::kHolding:
      return "holding";
    case ArcType::kService:
      return "service";
    case ArcType::kOutsourced:
      return "outsourced";
  }
  return "?";
}

TimeSpaceNetwork::TimeSpaceNetwork(
    const PhysicalNetwork& physical, int period_count, double service_capacity,
    const std::optional<std::vector<OutsourcedArcKey>>& outsourced)
    : physical_count_(physical.node_count), period_count_(period_count) {
  const int n = physical_count_;
  const int t_count = period_count_;
  out_.assign(static_cast<size_t>(n * t_count), {});
  in_.assign(static_cast<size_t>(n * t_count), {});
  service_index_.assign(static_cast<size_t>(n * n * t_count), 0);
  outsourced_index_.assign(static_cast<size_t>(n * n * t_count), 0);

  for (int p = 1; p <= n; ++p) {
    for (int t = 1; t <= t_count; ++t) {
      holding_.push_back(AddArc(ArcType::kHolding, p, p, t, 1, kInfiniteCapacity));
    }
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      for (int t = 1; t <= t_count; ++t) {
        const int id = AddArc(ArcType::kService, i, j, t, physical.Distance(i, j),
                              service_capacity);
        service_.push_back(id);
        service_index_[static_cast<size_t>(((i - 1) * n + (j - 1)) * t_count + t - 1)] = id;
      }
    }
  }
  std::vector<OutsourcedArcKey> keys;
  if (outsourced.has_value()) {
    std::set<OutsourcedArcKey> unique(outsourced->begin(), outsourced->end());
    keys.assign(unique.begin(), unique.end());
  } else {
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        for (int t = 1; t <= t_count; ++t) keys.push_back({i, j, t});
      }
    }
  }
  for (const auto& key : keys) {
    if (key.from < 1 || key.from > n || key.to < 1 || key.to > n || key.from == key.to ||
        key.depart < 1 || key.depart > t_count) {
      throw DomainError("outsourced arc (" + std::to_string(key.from) + "," +
                        std::to_string(key.to) + "," + std::to_string(key.depart) +
                        ") out of range");
    }
    const int id = AddArc(ArcType::kOutsourced, key.from, key.to, key.depart,
                          physical.Distance(key.from, key.to), kInfiniteCapacity);
    outsourced_.push_back(id);
    outsourced_index_[static_cast<size_t>(((key.from - 1) * n + (key.to - 1)) * t_count +
                                          key.depart - 1)] = id;
  }

  std::set<int> origins;
  std::set<int> destinations;
  for (const Arc& a : arcs_) {
    if (a.type == ArcType::kOutsourced || !a.circular) continue;
    origins.insert(a.depart_period);
    destinations.insert(a.arrive_period);
  }
  period_class_.assign(static_cast<size_t>(t_count), PeriodClass::kT1);
  for (int t = 1; t <= t_count; ++t) {
    if (origins.count(t) != 0) {
      t2_.push_back(t);
      period_class_[t - 1] = PeriodClass::kT2;
    } else if (destinations.count(t) != 0) {
      t3_.push_back(t);
      period_class_[t - 1] = PeriodClass::kT3;
    } else {
      t1_.push_back(t);
    }
  }
}

int TimeSpaceNetwork::AddArc(ArcType type, int from, int to, int depart, int duration,
                             double capacity) {
  Arc a;
  a.id = static_cast<int>(arcs_.size()) + 1;
  a.type = type;
  a.from_physical = from;
  a.to_physical = to;
  a.depart_period = depart;
  a.duration = duration;
  a.arrive_period = CyclicPeriod(depart + duration, period_count_);
  a.from_node = TsNode(from, depart, period_count_);
  a.to_node = TsNode(to, a.arrive_period, period_count_);
  a.circular = a.arrive_period < a.depart_period;
  a.capacity = capacity;
  arcs_.push_back(a);
  out_[a.from_node - 1].push_back(a.id);
  in_[a.to_node - 1].push_back(a.id);
  return a.id;
}

int TimeSpaceNetwork::HoldingArc(int physical, int period) const {
  return holding_[static_cast<size_t>((physical - 1) * period_count_ + period - 1)];
}

int TimeSpaceNetwork::ServiceArc(int from, int to, int depart) const {
  if (from == to) return 0;
  return service_index_[static_cast<size_t>(
      ((from - 1) * physical_count_ + (to - 1)) * period_count_ + depart - 1)];
}

int TimeSpaceNetwork::OutsourcedArc(int from, int to, int depart) const {
  if (from == to) return 0;
  return outsourced_index_[static_cast<size_t>(
      ((from - 1) * physical_count_ + (to - 1)) * period_count_ + depart - 1)];
}

bool TimeSpaceNetwork::Spans(const Arc& arc, int period) const {
  return CyclicSpan(arc.depart_period, period, period_count_) < arc.duration;
}

}  // namespace cssnd
