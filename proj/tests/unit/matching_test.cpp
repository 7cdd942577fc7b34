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
#include <cmath>
#include <functional>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "cssnd/matching.hpp"
#include "oracles.hpp"

namespace cssnd {
namespace {

void ExpectDisjoint(const std::vector<CandidatePair>& pairs, const std::vector<int>& selected) {
  std::set<int> used;
  for (int i : selected) {
    EXPECT_TRUE(used.insert(pairs[i].a).second);
    EXPECT_TRUE(used.insert(pairs[i].b).second);
  }
}

TEST(MatchingTest, SolveP2MatchesBruteForce) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pairs = oracle::RandomConflictSet(rng, 12);
    const MatchingResult result = SolveP2(pairs);
    const oracle::BruteMatching brute = oracle::BruteForceMatching(pairs);
    EXPECT_EQ(result.cardinality, brute.cardinality) << "trial " << trial;
    EXPECT_NEAR(result.cost, brute.cost, 1e-9) << "trial " << trial;
    EXPECT_EQ(static_cast<int>(result.selected.size()), result.cardinality);
    EXPECT_TRUE(std::is_sorted(result.selected.begin(), result.selected.end()));
    ExpectDisjoint(pairs, result.selected);
    double sum = 0.0;
    for (int i : result.selected) sum += pairs[i].cost;
    EXPECT_NEAR(sum, result.cost, 1e-9);
  }
}

TEST(MatchingTest, ScopfIsMaximalAndNeverBeatsP2) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pairs = oracle::RandomConflictSet(rng, 12);
    const std::vector<int> greedy = Scopf(pairs);
    ExpectDisjoint(pairs, greedy);
    EXPECT_LE(greedy.size(), static_cast<std::size_t>(SolveP2(pairs).cardinality));
    std::set<int> used;
    for (int i : greedy) {
      used.insert(pairs[i].a);
      used.insert(pairs[i].b);
    }
    for (const CandidatePair& p : pairs) {
      EXPECT_TRUE(used.count(p.a) || used.count(p.b)) << "pair left uncancelled";
    }
  }
}

TEST(MatchingTest, ScopfPrefersLeastConflictedPair) {
  // The middle pair of the chain conflicts with both ends.
  const std::vector<CandidatePair> chain = {{1, 2, 9.0}, {2, 3, 1.0}, {3, 4, 9.0}};
  EXPECT_EQ(Scopf(chain), (std::vector<int>{0, 2}));
  // Equal scores fall back to the smaller ids.
  const std::vector<CandidatePair> tie = {{5, 6, 1.0}, {3, 4, 1.0}};
  EXPECT_EQ(Scopf(tie), (std::vector<int>{1, 0}));
}

TEST(MatchingTest, EmptyInput) {
  EXPECT_EQ(SolveP2({}).cardinality, 0);
  EXPECT_TRUE(Scopf({}).empty());
}

TEST(BlossomTest, MaximumWeightOnSmallGraphs) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.UniformInt(2, 9);
    std::vector<WeightedEdge> edges;
    std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, -1));
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng.UniformInt(0, 2) == 0) continue;
        w[u][v] = w[v][u] = rng.UniformInt(1, 30);
        edges.push_back({u, v, w[u][v]});
      }
    }
    for (bool max_card : {false, true}) {
      std::int64_t best_w = 0;
      int best_c = 0;
      std::vector<bool> used(n, false);
      std::function<void(int, int, std::int64_t)> go = [&](int from, int c, std::int64_t total) {
        int v = from;
        while (v < n && used[v]) ++v;
        if (v >= n) {
          const bool better = max_card ? (c > best_c || (c == best_c && total > best_w))
                                       : total > best_w;
          if (better) {
            best_c = c;
            best_w = total;
          }
          return;
        }
        used[v] = true;
        go(v + 1, c, total);
        for (int u = v + 1; u < n; ++u) {
          if (used[u] || w[v][u] < 0) continue;
          used[u] = true;
          go(v + 1, c + 1, total + w[v][u]);
          used[u] = false;
        }
        used[v] = false;
      };
      go(0, 0, 0);
      const std::vector<int> mate = MaxWeightMatching(n, edges, max_card);
      std::int64_t total = 0;
      int c = 0;
      for (int v = 0; v < n; ++v) {
        if (mate[v] < 0) continue;
        EXPECT_EQ(mate[mate[v]], v);
        ASSERT_GE(w[v][mate[v]], 0);
        if (v < mate[v]) {
          total += w[v][mate[v]];
          ++c;
        }
      }
      EXPECT_EQ(total, best_w) << "trial " << trial << " max_card " << max_card;
      if (max_card) {
        EXPECT_EQ(c, best_c);
      }
    }
  }
}

}  // namespace
}  // namespace cssnd
