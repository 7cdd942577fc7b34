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

#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "cssnd/core.hpp"
#include "cssnd/cost_table.hpp"
#include "cssnd/instance_io.hpp"
#include "cssnd/random.hpp"
#include "golden.hpp"
#include "oracles.hpp"

namespace cssnd {
namespace {

TEST(CyclicTest, PeriodWrapsIntoRange) {
  EXPECT_EQ(CyclicPeriod(8, 7), 1);
  EXPECT_EQ(CyclicPeriod(0, 7), 7);
  EXPECT_EQ(CyclicPeriod(-1, 7), 6);
  EXPECT_EQ(CyclicPeriod(7, 7), 7);
  EXPECT_EQ(CyclicSpan(5, 2, 7), 4);
  EXPECT_EQ(CyclicSpan(2, 5, 7), 3);
  EXPECT_EQ(CyclicSpan(3, 3, 7), 0);
}

TEST(CyclicTest, TsNodeRoundTrips) {
  for (int p = 1; p <= 5; ++p) {
    for (int t = 1; t <= 7; ++t) {
      const int node = TsNode(p, t, 7);
      EXPECT_EQ(node, (p - 1) * 7 + t);
      EXPECT_EQ(DecodeTsNode(node, 7), std::make_pair(p, t));
    }
  }
}

class SampleNetworkTest : public ::testing::Test {
 protected:
  Instance instance_ = oracle::SampleInstance();
  TimeSpaceNetwork network_ = BuildTimeSpaceNetwork(instance_);
};

TEST_F(SampleNetworkTest, ArcCountsAndIdBlocks) {
  EXPECT_EQ(network_.holding_arcs().size(), 35u);
  EXPECT_EQ(network_.service_arcs().size(), 140u);
  EXPECT_EQ(network_.outsourced_arcs().size(), 140u);
  EXPECT_EQ(network_.holding_arcs().front(), 1);
  EXPECT_EQ(network_.service_arcs().front(), 36);
  EXPECT_EQ(network_.outsourced_arcs().front(), 176);
  for (const Arc& arc : network_.arcs()) {
    EXPECT_EQ(arc.from_node, TsNode(arc.from_physical, arc.depart_period, 7));
    EXPECT_EQ(arc.to_node, TsNode(arc.to_physical, arc.arrive_period, 7));
    EXPECT_EQ(arc.circular, arc.arrive_period < arc.depart_period);
  }
}

TEST_F(SampleNetworkTest, ServiceArcArrivalWraps) {
  const Arc& arc = network_.arc(network_.ServiceArc(3, 1, 5));
  EXPECT_EQ(arc.duration, 2);
  EXPECT_EQ(arc.arrive_period, 7);
  EXPECT_FALSE(arc.circular);
  const Arc& wrap = network_.arc(network_.ServiceArc(3, 1, 6));
  EXPECT_EQ(wrap.arrive_period, 1);
  EXPECT_TRUE(wrap.circular);
  EXPECT_EQ(network_.ServiceArc(3, 3, 1), 0);
}

TEST_F(SampleNetworkTest, PeriodClassesFollowCircularArcs) {
  EXPECT_EQ(network_.t2(), (std::vector<int>{6, 7}));
  EXPECT_EQ(network_.t3(), (std::vector<int>{1, 2}));
  EXPECT_EQ(network_.t1(), (std::vector<int>{3, 4, 5}));
  EXPECT_EQ(network_.ClassOf(4), PeriodClass::kT1);
  EXPECT_EQ(network_.ClassOf(7), PeriodClass::kT2);
  EXPECT_EQ(network_.ClassOf(1), PeriodClass::kT3);
}

TEST_F(SampleNetworkTest, SpansIsHalfOpenAndCyclic) {
  const Arc& wrap = network_.arc(network_.ServiceArc(3, 1, 6));  // 6 -> 1
  EXPECT_TRUE(network_.Spans(wrap, 6));
  EXPECT_TRUE(network_.Spans(wrap, 7));
  EXPECT_FALSE(network_.Spans(wrap, 1));
  const Arc& hold = network_.arc(network_.HoldingArc(2, 7));
  EXPECT_EQ(hold.arrive_period, 1);
  EXPECT_TRUE(network_.Spans(hold, 7));
  EXPECT_FALSE(network_.Spans(hold, 1));
}

TEST_F(SampleNetworkTest, NodeBalanceOfArcLists) {
  for (int node = 1; node <= network_.node_count(); ++node) {
    // One holding arc plus four service and four outsourced arcs each way.
    EXPECT_EQ(network_.out_arcs(node).size(), 9u);
    EXPECT_EQ(network_.in_arcs(node).size(), 9u);
  }
}

// Transformed commodities of the reference sample: origin node, destination
// node, release, due, and the type column (1 marks the original).
TEST(CommoditiesTest, SampleExpansionMatchesGolden) {
  const Instance instance = oracle::SampleInstance();
  const auto tcs = ExpandCommodities(instance);
  ASSERT_EQ(tcs.size(), 30u);
  for (int l = 1; l <= 30; ++l) {
    const TransformedCommodity& tc = tcs[l - 1];
    const golden::TcRow& row = golden::kSampleTcs[l - 1];
    SCOPED_TRACE("tc " + std::to_string(l));
    EXPECT_EQ(tc.id, l);
    EXPECT_EQ(tc.parent_id, (l - 1) / 3 + 1);
    EXPECT_EQ(tc.origin_node, row.origin_node);
    EXPECT_EQ(tc.dest_node, row.dest_node);
    EXPECT_EQ(tc.release, row.release);
    EXPECT_EQ(tc.due, row.due);
    EXPECT_EQ(tc.kind, static_cast<TcKind>((l - 1) % 3 + 1));
    EXPECT_EQ(row.q == 1, tc.kind == TcKind::kOriginal);
    EXPECT_EQ(TcId((l - 1) / 3, tc.kind), l);
  }
}

TEST(CommoditiesTest, ExpansionPreservesVolumeAndWindowLength) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Instance instance = oracle::RandomInstance(rng, 5, 8, 7);
    for (auto& oc : instance.commodities) oc.volume = 1.0 + rng.UniformInt(0, 3);
    const auto tcs = ExpandCommodities(instance);
    ASSERT_EQ(tcs.size(), 3 * instance.commodities.size());
    for (const auto& tc : tcs) {
      const OriginalCommodity& oc = instance.commodities[(tc.id - 1) / 3];
      EXPECT_EQ(tc.parent_id, oc.id);
      EXPECT_EQ(tc.volume, oc.volume);
      EXPECT_EQ(CyclicSpan(tc.release, tc.due, 7), CyclicSpan(oc.release, oc.due, 7));
      const int shift = static_cast<int>(tc.kind) - 2;
      EXPECT_EQ(tc.release, CyclicPeriod(oc.release + shift, 7));
    }
  }
}

TEST(DistanceTest, DetectsViolations) {
  Instance instance = oracle::SampleInstance();
  EXPECT_TRUE(ValidateDistances(instance.physical, 7).empty());
  PhysicalNetwork bad = instance.physical;
  bad.distance[0][2] = 3;  // 1 -> 3 now exceeds 1 -> 2 -> 3
  auto violations = ValidateDistances(bad, 7);
  ASSERT_FALSE(violations.empty());
  bool triangle = false;
  for (const auto& v : violations) triangle = triangle || v.kind == DistanceViolation::Kind::kTriangle;
  EXPECT_TRUE(triangle);

  PhysicalNetwork far = instance.physical;
  far.distance[0][1] = 4;
  far.distance[1][0] = 4;
  EXPECT_FALSE(ValidateDistances(far, 7).empty());
  PhysicalNetwork zero = instance.physical;
  zero.distance[2][3] = 0;
  EXPECT_FALSE(ValidateDistances(zero, 7).empty());
}

TEST(InstanceTest, ValidationRejectsBadCommodities) {
  Instance instance = oracle::SampleInstance();
  EXPECT_NO_THROW(ValidateInstance(instance));
  Instance same = instance;
  same.commodities[0].dest = same.commodities[0].origin;
  EXPECT_THROW(ValidateInstance(same), DomainError);
  Instance dup = instance;
  dup.commodities[1].id = 1;
  EXPECT_THROW(ValidateInstance(dup), DomainError);
  Instance late = instance;
  late.commodities[2].due = 8;
  EXPECT_THROW(ValidateInstance(late), DomainError);
}

TEST(InstanceIoTest, JsonRoundTripIsCanonical) {
  const Instance instance = oracle::SampleInstance();
  const Instance back = InstanceFromJson(InstanceToJson(instance));
  EXPECT_EQ(CanonicalInstanceText(back), CanonicalInstanceText(instance));
}

TEST(InstanceIoTest, ShippedSampleFileMatches) {
  const Instance file = ReadInstanceFile(std::string(CSSND_SOURCE_DIR) + "/data/sample_instance.json");
  EXPECT_EQ(CanonicalInstanceText(file), CanonicalInstanceText(oracle::SampleInstance()));
  EXPECT_EQ(file.physical.TotalDistance(), 32);
}

TEST(InstanceIoTest, HashUsesFnv1a64) {
  EXPECT_EQ(Fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(Fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
  EXPECT_EQ(HexU64(0xabcULL), "0000000000000abc");
  EXPECT_EQ(InstanceHash(oracle::SampleInstance()),
            HexU64(Fnv1a64(CanonicalInstanceText(oracle::SampleInstance()))));
}

TEST(InstanceIoTest, MissingFieldsAreDomainErrors) {
  EXPECT_THROW(InstanceFromJson(nlohmann::json::array()), DomainError);
  nlohmann::json doc = InstanceToJson(oracle::SampleInstance());
  doc.erase("periods");
  EXPECT_THROW(InstanceFromJson(doc), DomainError);
}

TEST(RandomTest, DerivedSeedsAreStableAndDistinct) {
  EXPECT_EQ(DeriveSeed(1, Stream::kDistances), DeriveSeed(1, Stream::kDistances));
  EXPECT_NE(DeriveSeed(1, Stream::kDistances), DeriveSeed(1, Stream::kCommodities));
  EXPECT_NE(DeriveSeed(1, Stream::kDistances), DeriveSeed(2, Stream::kDistances));
  Rng rng(5);
  std::set<int> seen;
  for (int i = 0; i < 2000; ++i) {
    const int v = rng.UniformInt(-2, 3);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 3);
    seen.insert(v);
    const double u = rng.Unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
  EXPECT_EQ(seen.size(), 6u);
}

TEST(CostTableTest, DrawnCostsStayInRangesAndRound) {
  const Instance instance = oracle::SampleInstance();
  const TimeSpaceNetwork network = BuildTimeSpaceNetwork(instance);
  const auto tcs = ExpandCommodities(instance);
  const CostTable costs(instance, network, tcs);
  for (const auto& tc : tcs) {
    for (const Arc& arc : network.arcs()) {
      const double c = costs.Routing(arc.id, tc.id);
      EXPECT_NEAR(c * 1000.0, std::round(c * 1000.0), 1e-6);
      if (arc.type == ArcType::kHolding) {
        EXPECT_DOUBLE_EQ(c, 0.15);
      } else if (arc.type == ArcType::kService) {
        EXPECT_GE(c, 0.6);
        EXPECT_LE(c, 1.0);
      } else {
        EXPECT_GE(c, 26.2);
        EXPECT_LE(c, 27.0);
      }
    }
  }
  EXPECT_DOUBLE_EQ(costs.Multiplier(TcKind::kOriginal), 1.0);
  EXPECT_DOUBLE_EQ(costs.Multiplier(TcKind::kEarly), 1.2);
  EXPECT_DOUBLE_EQ(costs.Multiplier(TcKind::kTardy), 1.2);
}

TEST(CostTableTest, ExplicitEntryOverridesDraw) {
  Instance instance = oracle::SampleInstance();
  instance.costs.routing.push_back({ArcType::kService, 1, 2, 3, 2, 0.5});
  const TimeSpaceNetwork network = BuildTimeSpaceNetwork(instance);
  const auto tcs = ExpandCommodities(instance);
  const CostTable costs(instance, network, tcs);
  EXPECT_DOUBLE_EQ(costs.Routing(network.ServiceArc(1, 2, 3), 2), 0.5);
}

TEST(CostTableTest, MissingCostsAreDomainErrors) {
  Instance instance = oracle::SampleInstance();
  instance.costs.routing_seed.reset();
  const TimeSpaceNetwork network = BuildTimeSpaceNetwork(instance);
  const auto tcs = ExpandCommodities(instance);
  const CostTable costs(instance, network, tcs);
  EXPECT_FALSE(costs.Has(network.ServiceArc(1, 2, 3), 1));
  EXPECT_THROW(costs.Routing(network.ServiceArc(1, 2, 3), 1), DomainError);
}

}  // namespace
}  // namespace cssnd
