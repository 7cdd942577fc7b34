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

// Test-side reference implementations, written without reusing the library
// code they check.

#ifndef CSSND_TESTS_SUPPORT_ORACLES_HPP_
#define CSSND_TESTS_SUPPORT_ORACLES_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cssnd/core.hpp"
#include "cssnd/matching.hpp"
#include "cssnd/merge.hpp"
#include "cssnd/random.hpp"

namespace cssnd::oracle {

// The reference sample: five terminals on a line-like metric, ten commodities.
Instance SampleInstance();

// Distances max(1, |x_i - x_j|) over random integer positions in [0, 3].
PhysicalNetwork RandomLineNetwork(Rng& rng, int n);

// Random small instance with unit volumes and seeded routing costs. Slack
// is capped so that every commodity fits a dedicated round trip.
Instance RandomInstance(Rng& rng, int n, int k, int period_count);

// Window of a path between two distinct random terminals with slack 0..2.
PathWindow RandomPathWindow(Rng& rng, const PhysicalNetwork& physical, int period_count);

// Up to 25 candidate pairs over at most `max_ids` distinct path ids, costs
// rounded to three decimals.
std::vector<CandidatePair> RandomConflictSet(Rng& rng, int max_ids);

// Offered (true) / outsourced (false) path as its arc sequence.
using PathKey = std::pair<bool, std::vector<int>>;

// Every walk from the TC's origin node at release to its destination node
// at due that uses holding arcs plus exactly one service or outsourced arc,
// found by depth-first search over out-arcs. Service arcs below `volume`
// capacity are excluded.
std::set<PathKey> DfsPaths(const TimeSpaceNetwork& network, const TransformedCommodity& tc);

// Walks one asset forward in unrolled time: load path one, travel to the
// next occurrence of path two's departure, load it, and return to path one's
// origin within |T| periods of the start.
bool SimulateTwoPathCycle(const PathWindow& p1, const PathWindow& p2,
                          const PhysicalNetwork& physical, int period_count);

struct BruteMatching {
  int cardinality = 0;
  double cost = 0.0;
};
// Exhaustive search over all vertex-disjoint subsets of the pairs.
BruteMatching BruteForceMatching(const std::vector<CandidatePair>& pairs);

// Expected model size from the index sets alone.
struct ModelCounts {
  std::map<std::string, int> variables;  // y, d, p, s, x
  std::map<std::string, int> rows;       // keyed by row-name prefix
  int total_variables = 0;
  int total_rows = 0;
};
ModelCounts CountModel(const Instance& instance);

// Variable and row names in an LP file.
struct LpNames {
  std::set<std::string> variables;
  std::vector<std::string> rows;
  std::map<std::string, double> rhs;
};
LpNames ParseLpNames(const std::string& text);

}  // namespace cssnd::oracle

#endif  // CSSND_TESTS_SUPPORT_ORACLES_HPP_
