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

#include "cssnd/instgen.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cssnd/random.hpp"

namespace cssnd {

SizeClass SizeClassFor(SizeLabel label) {
  switch (label) {
    case SizeLabel::kSmall:
      return {label, "small", 5, {10, 15, 20}, 7, 5};
    case SizeLabel::kMedium:
      return {label, "medium", 6, {20, 25, 30}, 12, 7};
    case SizeLabel::kLarge:
      return {label, "large", 7, {30, 36, 42}, 15, 10};
    case SizeLabel::kVeryLarge:
      return {label, "very_large", 10, {72, 81, 90}, 35, 15};
  }
  throw DomainError("unknown size class");
}

std::optional<SizeLabel> ParseSizeLabel(const std::string& text) {
  if (text == "small") return SizeLabel::kSmall;
  if (text == "medium") return SizeLabel::kMedium;
  if (text == "large") return SizeLabel::kLarge;
  if (text == "xlarge" || text == "very_large") return SizeLabel::kVeryLarge;
  return std::nullopt;
}

namespace {

PhysicalNetwork DrawDistances(int n, int period_count, Rng& rng) {
  const int cap = std::min(3, period_count / 2);
  PhysicalNetwork net;
  net.node_count = n;
  net.distance.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int d = rng.UniformInt(1, cap);
      net.distance[i][j] = d;
      net.distance[j][i] = d;
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        net.distance[i][j] =
            std::min(net.distance[i][j], net.distance[i][k] + net.distance[k][j]);
      }
    }
  }
  return net;
}

}  // namespace

Instance GenerateInstance(const SizeClass& size, int k, std::uint64_t seed) {
  const int n = size.n_physical;
  if (n < 2) throw DomainError("size class needs at least 2 physical nodes");
  if (k < 1) throw DomainError("commodity count must be positive");
  if (k > n * (n - 1)) {
    throw DomainError("k=" + std::to_string(k) + " exceeds the " + std::to_string(n * (n - 1)) +
                      " ordered O-D pairs of a " + std::to_string(n) + "-node network");
  }
  Instance inst;
  inst.name = size.name + ".n" + std::to_string(n) + ".c" + std::to_string(k) + ".s" +
              std::to_string(seed);
  inst.period_count = kGeneratedPeriods;
  inst.seed = seed;
  inst.owned_assets = size.v1;
  inst.leasable_assets = size.v2;
  inst.service_capacity = 1.0;
  inst.costs = CostParams{};
  inst.costs.routing_seed = DeriveSeed(seed, Stream::kRoutingSeed);

  Rng distance_rng(DeriveSeed(seed, Stream::kDistances));
  inst.physical = DrawDistances(n, inst.period_count, distance_rng);

  Rng rng(DeriveSeed(seed, Stream::kCommodities));
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i != j) pairs.emplace_back(i, j);
    }
  }
  for (int i = static_cast<int>(pairs.size()) - 1; i > 0; --i) {
    std::swap(pairs[i], pairs[rng.UniformInt(0, i)]);
  }
  const int t_count = inst.period_count;
  for (int c = 0; c < k; ++c) {
    const auto [o, d] = pairs[c];
    const int there = inst.physical.Distance(o, d);
    const int back = inst.physical.Distance(d, o);
    const int max_slack = std::max(0, std::min(2, t_count - there - back));
    OriginalCommodity oc;
    oc.id = c + 1;
    oc.origin = o;
    oc.dest = d;
    oc.release = rng.UniformInt(1, t_count);
    oc.due = CyclicPeriod(oc.release + there + rng.UniformInt(0, max_slack), t_count);
    oc.volume = 1.0;
    inst.commodities.push_back(oc);
  }
  return inst;
}

const char* DistanceCategoryCode(DistanceCategory category) {
  switch (category) {
    case DistanceCategory::kCloseRange:
      return "CR";
    case DistanceCategory::kMediumRange:
      return "MR";
    case DistanceCategory::kLongRange:
      return "LR";
  }
  return "?";
}

DistanceIndex ClassifyDistance(int total_distance, int n_physical) {
  const int pairs = n_physical * (n_physical - 1);
  const int min_total = pairs;
  const int max_total = 3 * pairs;
  if (n_physical < 2 || total_distance < min_total || total_distance > max_total) {
    throw DomainError("total distance " + std::to_string(total_distance) + " outside [" +
                      std::to_string(min_total) + ", " + std::to_string(max_total) + "]");
  }
  const int range = max_total - min_total;
  DistanceIndex out;
  out.total_distance = total_distance;
  if (3 * (total_distance - min_total) <= range + 2) {
    // total - min <= ceil(range / 3)
    out.category = DistanceCategory::kCloseRange;
  } else if (3 * (max_total - total_distance) < range) {
    out.category = DistanceCategory::kLongRange;
  } else {
    out.category = DistanceCategory::kMediumRange;
  }
  return out;
}

}  // namespace cssnd
