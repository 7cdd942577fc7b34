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

// Spatial and time-wise conditions for merging two commodity paths into a
// single asset cycle.

#ifndef CSSND_MERGE_HPP_
#define CSSND_MERGE_HPP_

#include <optional>
#include <vector>

#include "cssnd/core.hpp"

namespace cssnd {

enum class MergeType { kNoRep, kOneRepV1, kOneRepV2, kTwoRep };
const char* MergeTypeName(MergeType type);

// The part of a path an asset must be present for: physical endpoints and
// cyclic departure / arrival periods.
struct PathWindow {
  int origin = 0;
  int dest = 0;
  int depart = 0;
  int arrive = 0;
};

struct AdjustedTimes {
  int o1 = 0;
  int d1 = 0;
  int o2 = 0;
  int d2 = 0;
  int o1_next = 0;  // o1 + |T|
};

// Unrolls the periods so that o1 < d1, o2 < d2 and o1 < o2.
AdjustedTimes AdjustTimes(int o1, int d1, int o2, int d2, int period_count);
AdjustedTimes AdjustTimes(const PathWindow& p1, const PathWindow& p2, int period_count);

// The only type whose spatial conditions can hold for the pair.
MergeType SpatialType(const PathWindow& p1, const PathWindow& p2);

// Time-wise conditions of `type` with path one shifted by a1 periods and
// path two by a2.
bool TimeConditionsHold(MergeType type, const AdjustedTimes& t, const PhysicalNetwork& physical,
                        const PathWindow& p1, const PathWindow& p2, int a1, int a2);

std::optional<MergeType> CheckRegularMerge(const PathWindow& p1, const PathWindow& p2,
                                           const PhysicalNetwork& physical, int period_count);

// Largest violation among the type's slack variables; <= 0 when the regular
// merge holds.
int MaxShiftSlack(const PathWindow& p1, const PathWindow& p2, const PhysicalNetwork& physical,
                  int period_count);

struct ShiftAlternative {
  int m = 0;
  int a1 = 0;
  int a2 = 0;
};

// Alternatives 1-4 for s_max = 1, 5-6 for s_max = 2, none otherwise.
std::vector<ShiftAlternative> ShiftAlternatives(int s_max);

// Alternatives whose shifted time-wise conditions hold, ignoring whether the
// shifted sibling paths exist.
std::vector<ShiftAlternative> FeasibleShifts(const PathWindow& p1, const PathWindow& p2,
                                             const PhysicalNetwork& physical, int period_count);

}  // namespace cssnd

#endif  // CSSND_MERGE_HPP_
