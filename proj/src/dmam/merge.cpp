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

#include "cssnd/merge.hpp"

#include <algorithm>

namespace cssnd {

const char* MergeTypeName(MergeType type) {
  switch (type) {
    case MergeType::kNoRep:
      return "NoRep";
    case MergeType::kOneRepV1:
      return "OneRepV1";
    case MergeType::kOneRepV2:
      return "OneRepV2";
    case MergeType::kTwoRep:
      return "TwoRep";
  }
  return "?";
}

AdjustedTimes AdjustTimes(int o1, int d1, int o2, int d2, int period_count) {
  AdjustedTimes t{o1, d1, o2, d2, 0};
  if (t.o1 >= t.d1) t.d1 += period_count;
  if (t.o2 >= t.d2) t.d2 += period_count;
  if (t.o1 >= t.o2) {
    t.o2 += period_count;
    t.d2 += period_count;
  }
  t.o1_next = t.o1 + period_count;
  return t;
}

AdjustedTimes AdjustTimes(const PathWindow& p1, const PathWindow& p2, int period_count) {
  return AdjustTimes(p1.depart, p1.arrive, p2.depart, p2.arrive, period_count);
}

MergeType SpatialType(const PathWindow& p1, const PathWindow& p2) {
  const bool back = p1.origin == p2.dest;
  const bool forth = p1.dest == p2.origin;
  if (back && forth) return MergeType::kNoRep;
  if (back) return MergeType::kOneRepV1;
  if (forth) return MergeType::kOneRepV2;
  return MergeType::kTwoRep;
}

bool TimeConditionsHold(MergeType type, const AdjustedTimes& t, const PhysicalNetwork& physical,
                        const PathWindow& p1, const PathWindow& p2, int a1, int a2) {
  const int d1 = t.d1 + a1;
  const int o1_next = t.o1_next + a1;
  const int o2 = t.o2 + a2;
  const int d2 = t.d2 + a2;
  switch (type) {
    case MergeType::kNoRep:
      return d1 <= o2 && d2 <= o1_next;
    case MergeType::kOneRepV1:
      return d2 <= o1_next && d1 < o2 && physical.Distance(p1.dest, p2.origin) <= o2 - d1;
    case MergeType::kOneRepV2:
      return d1 <= o2 && d2 < o1_next && physical.Distance(p2.dest, p1.origin) <= o1_next - d2;
    case MergeType::kTwoRep:
      return d1 < o2 && d2 < o1_next && physical.Distance(p2.dest, p1.origin) <= o1_next - d2 &&
             physical.Distance(p1.dest, p2.origin) <= o2 - d1;
  }
  return false;
}

std::optional<MergeType> CheckRegularMerge(const PathWindow& p1, const PathWindow& p2,
                                           const PhysicalNetwork& physical, int period_count) {
  const AdjustedTimes t = AdjustTimes(p1, p2, period_count);
  const MergeType type = SpatialType(p1, p2);
  if (TimeConditionsHold(type, t, physical, p1, p2, 0, 0)) return type;
  return std::nullopt;
}

int MaxShiftSlack(const PathWindow& p1, const PathWindow& p2, const PhysicalNetwork& physical,
                  int period_count) {
  const AdjustedTimes t = AdjustTimes(p1, p2, period_count);
  const int forward = t.d1 - t.o2;      // path one ends before path two starts
  const int backward = t.d2 - t.o1_next;  // path two ends before the cycle closes
  const int rep12 = physical.Distance(p1.dest, p2.origin) - (t.o2 - t.d1);
  const int rep21 = physical.Distance(p2.dest, p1.origin) - (t.o1_next - t.d2);
  switch (SpatialType(p1, p2)) {
    case MergeType::kNoRep:
      return std::max(forward, backward);
    case MergeType::kOneRepV1:
      return std::max({backward, forward + 1, rep12});
    case MergeType::kOneRepV2:
      return std::max({forward, backward + 1, rep21});
    case MergeType::kTwoRep:
      return std::max({forward + 1, backward + 1, rep21, rep12});
  }
  return 0;
}

std::vector<ShiftAlternative> ShiftAlternatives(int s_max) {
  if (s_max == 1) return {{1, 1, 0}, {2, -1, 0}, {3, 0, 1}, {4, 0, -1}};
  if (s_max == 2) return {{5, 1, -1}, {6, -1, 1}};
  return {};
}

std::vector<ShiftAlternative> FeasibleShifts(const PathWindow& p1, const PathWindow& p2,
                                             const PhysicalNetwork& physical, int period_count) {
  std::vector<ShiftAlternative> out;
  const int s_max = MaxShiftSlack(p1, p2, physical, period_count);
  if (s_max <= 0) return out;
  const AdjustedTimes t = AdjustTimes(p1, p2, period_count);
  const MergeType type = SpatialType(p1, p2);
  for (const ShiftAlternative& alt : ShiftAlternatives(s_max)) {
    if (TimeConditionsHold(type, t, physical, p1, p2, alt.a1, alt.a2)) out.push_back(alt);
  }
  return out;
}

}  // namespace cssnd
