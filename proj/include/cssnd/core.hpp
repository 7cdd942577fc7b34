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

// Domain types of the capacity scaling service network design problem:
// physical network, cyclic time-space network, original and transformed
// commodities, cost parameters and the instance bundle.
//
// Conventions used throughout the library:
//   * physical nodes, periods, time-space nodes, arcs and commodities are
//     1-based;
//   * period arithmetic is cyclic modulo |T| with results in 1..|T|;
//   * time-space node id = (physical - 1) * |T| + period.

#ifndef CSSND_CORE_HPP_
#define CSSND_CORE_HPP_

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cssnd {

inline constexpr double kInfiniteCapacity =
    std::numeric_limits<double>::infinity();

// Raised for invalid inputs and infeasible requests. The command line maps
// it to exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maps any integer onto 1..period_count.
int CyclicPeriod(int period, int period_count);
// Number of periods from `from` forward to `to`, in [0, period_count).
int CyclicSpan(int from, int to, int period_count);

struct PhysicalNetwork {
  int node_count = 0;
  // Row-major, 0-based storage; use Distance() with 1-based indices.
  std::vector<std::vector<int>> distance;

  int Distance(int i, int j) const { return distance[i - 1][j - 1]; }
  int TotalDistance() const;
};

struct DistanceViolation {
  enum class Kind { kShape, kDiagonal, kNonPositive, kReturnTrip, kTriangle };
  Kind kind;
  int i = 0;
  int j = 0;
  int k = 0;
  std::string message;
};

// Reports every pair breaking d_ij <= floor(|T|/2) and every triple
// breaking the triangle inequality. An empty result means valid.
std::vector<DistanceViolation> ValidateDistances(const PhysicalNetwork& physical,
                                                 int period_count);

int TsNode(int physical, int period, int period_count);
// Inverse of TsNode: returns (physical, period).
std::pair<int, int> DecodeTsNode(int node, int period_count);

enum class ArcType { kHolding, kService, kOutsourced };
const char* ArcTypeName(ArcType type);

struct Arc {
  int id = 0;
  ArcType type = ArcType::kHolding;
  int from_physical = 0;
  int to_physical = 0;
  int depart_period = 0;
  int arrive_period = 0;
  int duration = 0;
  int from_node = 0;
  int to_node = 0;
  // Arrival period index smaller than departure period index.
  bool circular = false;
  double capacity = 0.0;
};

struct OutsourcedArcKey {
  int from = 0;
  int to = 0;
  int depart = 0;
  friend bool operator==(const OutsourcedArcKey&, const OutsourcedArcKey&) = default;
  friend auto operator<=>(const OutsourcedArcKey&, const OutsourcedArcKey&) = default;
};

enum class PeriodClass { kT1, kT2, kT3 };

class TimeSpaceNetwork {
 public:
  // Arc ids: holding arcs first (by physical node, then period), then
  // service arcs (by origin, destination, departure), then outsourced arcs
  // in key order.
  TimeSpaceNetwork(const PhysicalNetwork& physical, int period_count,
                   double service_capacity,
                   const std::optional<std::vector<OutsourcedArcKey>>& outsourced);

  int physical_count() const { return physical_count_; }
  int period_count() const { return period_count_; }
  int node_count() const { return physical_count_ * period_count_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  const Arc& arc(int id) const { return arcs_[id - 1]; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  const std::vector<int>& holding_arcs() const { return holding_; }
  const std::vector<int>& service_arcs() const { return service_; }
  const std::vector<int>& outsourced_arcs() const { return outsourced_; }
  // Arcs leaving / entering a time-space node (all three arc types).
  const std::vector<int>& out_arcs(int node) const { return out_[node - 1]; }
  const std::vector<int>& in_arcs(int node) const { return in_[node - 1]; }

  int HoldingArc(int physical, int period) const;
  // 0 when the arc does not exist.
  int ServiceArc(int from, int to, int depart) const;
  int OutsourcedArc(int from, int to, int depart) const;

  const std::vector<int>& t1() const { return t1_; }
  const std::vector<int>& t2() const { return t2_; }
  const std::vector<int>& t3() const { return t3_; }
  PeriodClass ClassOf(int period) const { return period_class_[period - 1]; }

  // Cyclic half-open occupancy [depart, arrive).
  bool Spans(const Arc& arc, int period) const;

 private:
  int AddArc(ArcType type, int from, int to, int depart, int duration,
             double capacity);

  int physical_count_;
  int period_count_;
  std::vector<Arc> arcs_;
  std::vector<int> holding_;
  std::vector<int> service_;
  std::vector<int> outsourced_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<int> service_index_;
  std::vector<int> outsourced_index_;
  std::vector<int> t1_;
  std::vector<int> t2_;
  std::vector<int> t3_;
  std::vector<PeriodClass> period_class_;
};

struct OriginalCommodity {
  int id = 0;
  int origin = 0;
  int dest = 0;
  int release = 0;
  int due = 0;
  double volume = 1.0;
};

// Numeric values double as the q index of the objective.
enum class TcKind { kEarly = 1, kOriginal = 2, kTardy = 3 };
const char* TcKindName(TcKind kind);

struct TransformedCommodity {
  int id = 0;
  int parent_id = 0;
  TcKind kind = TcKind::kOriginal;
  int origin_physical = 0;
  int dest_physical = 0;
  int release = 0;
  int due = 0;
  int origin_node = 0;
  int dest_node = 0;
  double volume = 1.0;
};

// One overriding entry of the routing cost table.
struct RoutingEntry {
  ArcType type = ArcType::kService;
  int from = 0;
  int to = 0;
  int depart = 0;
  int tc = 0;
  double cost = 0.0;
};

struct CostParams {
  double fixed_owned = 25.0;
  double fixed_leased = 50.0;
  double holding = 0.15;
  double penalty_early = 1.2;
  double penalty_tardy = 1.2;
  // Service and outsourced routing costs are drawn from this seed when set;
  // explicit entries override drawn values.
  std::optional<std::uint64_t> routing_seed;
  std::vector<RoutingEntry> routing;
};

struct Instance {
  std::string name;
  PhysicalNetwork physical;
  int period_count = 0;
  std::vector<OriginalCommodity> commodities;
  int owned_assets = 1;
  int leasable_assets = 0;
  double service_capacity = 1.0;
  CostParams costs;
  std::uint64_t seed = 0;
  // Absent means one outsourced arc per ordered pair and departure period.
  std::optional<std::vector<OutsourcedArcKey>> outsourced_arcs;

  int fleet_size() const { return owned_assets + leasable_assets; }
};

// Throws DomainError listing every problem found.
void ValidateInstance(const Instance& instance);

TimeSpaceNetwork BuildTimeSpaceNetwork(const Instance& instance);

// TC ids 3k-2, 3k-1, 3k are the early, original and tardy variants of the
// k-th commodity in instance order.
std::vector<TransformedCommodity> ExpandCommodities(const Instance& instance);
inline int TcId(int oc_index, TcKind kind) {
  return 3 * oc_index + static_cast<int>(kind);
}

}  // namespace cssnd

#endif  // CSSND_CORE_HPP_
