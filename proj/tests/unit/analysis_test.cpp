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
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "cssnd/analysis.hpp"
#include "golden.hpp"
#include "oracles.hpp"

namespace cssnd {
namespace {

std::vector<int> Ones(const PeriodMask& mask) {
  std::vector<int> out;
  for (std::size_t t = 0; t < mask.size(); ++t) {
    if (mask[t]) out.push_back(static_cast<int>(t) + 1);
  }
  return out;
}

TEST(AnalysisTest, SampleWindowMaps) {
  const Instance instance = oracle::SampleInstance();
  const auto tcs = ExpandCommodities(instance);
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(Ones(WindowMap(tcs[3 * k + 1], 7)), golden::kSampleWindows[k]) << "commodity " << k + 1;
  }
  for (int l = 0; l < 9; ++l) {
    EXPECT_EQ(Ones(WindowMap(tcs[l], 7)), golden::kFirstTcWindows[l]) << "tc " << l + 1;
  }
}

TEST(AnalysisTest, SampleOccupancyAndRequirements) {
  const AnalysisSummary summary = ComputeRequirements(oracle::SampleInstance());
  ASSERT_EQ(summary.occupancy.size(), 10u);
  for (int k = 0; k < 10; ++k) {
    EXPECT_EQ(Ones(summary.occupancy[k]), golden::kSampleOccupancy[k]) << "commodity " << k + 1;
  }
  EXPECT_EQ(summary.phi, golden::kSamplePhi);
  EXPECT_EQ(summary.gamma, golden::kSampleGamma);
  EXPECT_EQ(summary.theta, golden::kSampleTheta);
}

TEST(AnalysisTest, BetaIsWindowWithoutDue) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Instance instance = oracle::RandomInstance(rng, 5, 6, 7);
    for (const auto& tc : ExpandCommodities(instance)) {
      const PeriodMask window = WindowMap(tc, 7);
      const PeriodMask beta = BetaMask(tc, 7);
      for (int t = 1; t <= 7; ++t) {
        if (t == tc.due) {
          EXPECT_FALSE(beta[t - 1]);
          EXPECT_TRUE(window[t - 1]);
        } else {
          EXPECT_EQ(beta[t - 1], window[t - 1]) << "period " << t;
        }
      }
    }
  }
}

TEST(AnalysisTest, PhiCountsOccupancyColumns) {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Instance instance = oracle::RandomInstance(rng, 5, 10, 7);
    for (OccupancyBasis basis : {OccupancyBasis::kFullWindow, OccupancyBasis::kInTransit}) {
      const AnalysisSummary s = ComputeRequirements(instance, basis);
      int lo = 1 << 30;
      int hi = 0;
      for (int t = 0; t < 7; ++t) {
        int count = 0;
        for (const auto& row : s.occupancy) count += row[t] ? 1 : 0;
        EXPECT_EQ(s.phi[t], count);
        lo = std::min(lo, count);
        hi = std::max(hi, count);
      }
      EXPECT_EQ(s.gamma, lo);
      EXPECT_EQ(s.theta, hi);
    }
  }
}

TEST(AnalysisTest, InTransitBasisIsTighter) {
  Rng rng(9);
  const Instance instance = oracle::RandomInstance(rng, 5, 12, 7);
  const AnalysisSummary full = ComputeRequirements(instance, OccupancyBasis::kFullWindow);
  const AnalysisSummary transit = ComputeRequirements(instance, OccupancyBasis::kInTransit);
  for (std::size_t k = 0; k < full.occupancy.size(); ++k) {
    for (int t = 0; t < 7; ++t) {
      if (transit.occupancy[k][t]) {
        EXPECT_TRUE(full.occupancy[k][t]);
      }
    }
  }
}

}  // namespace
}  // namespace cssnd
