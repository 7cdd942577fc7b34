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

// Selection of vertex-disjoint merge pairs: the greedy smallest conflicted
// pairs first rule and the exact maximum-cardinality minimum-cost matching.

#ifndef CSSND_MATCHING_HPP_
#define CSSND_MATCHING_HPP_

#include <cstdint>
#include <vector>

namespace cssnd {

// A candidate pair of paths (any integer ids) with its merge cost.
struct CandidatePair {
  int a = 0;
  int b = 0;
  double cost = 0.0;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  std::int64_t weight = 0;
};

// Maximum-weight matching on a general graph with vertices 0..n-1 (Edmonds'
// blossom algorithm with dual variables). With `max_cardinality` the result
// has maximum cardinality and maximum weight among those. Returns mate[v] or
// -1.
std::vector<int> MaxWeightMatching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                   bool max_cardinality);

struct MatchingResult {
  std::vector<int> selected;  // indices into the candidate list, ascending
  int cardinality = 0;
  double cost = 0.0;
  // Cardinality targets tried, from floor(|M| / 2) down to the feasible one.
  int iterations = 0;
};

// Each id may appear in at most one selected pair; among the largest such
// selections, one of minimum total cost. Duplicate pairs keep the cheaper.
MatchingResult SolveP2(const std::vector<CandidatePair>& pairs);

// Conflict scores: a path's score is its number of candidate pairs, a pair's
// score the sum of its two paths' scores. Pairs are taken by smallest score,
// ties by (min id, max id), and every pair sharing a path is cancelled.
std::vector<int> Scopf(const std::vector<CandidatePair>& pairs);

}  // namespace cssnd

#endif  // CSSND_MATCHING_HPP_
