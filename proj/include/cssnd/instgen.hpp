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

#ifndef CSSND_INSTGEN_HPP_
#define CSSND_INSTGEN_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cssnd/core.hpp"

namespace cssnd {

inline constexpr int kGeneratedPeriods = 7;

enum class SizeLabel { kSmall, kMedium, kLarge, kVeryLarge };

struct SizeClass {
  SizeLabel label = SizeLabel::kSmall;
  std::string name;
  int n_physical = 0;
  std::vector<int> k_options;
  int v1 = 0;
  int v2 = 0;
};

SizeClass SizeClassFor(SizeLabel label);
// Accepts small, medium, large, xlarge and very_large.
std::optional<SizeLabel> ParseSizeLabel(const std::string& text);

// Throws DomainError when k exceeds the number of ordered O-D pairs.
//
// Distances: symmetric draws from {1, .., min(3, |T|/2)} closed under
// shortest paths, so the triangle inequality holds by construction.
// Windows: release ~ U{1..|T|}, slack ~ U{0..min(2, |T| - d_ij - d_ji)},
// due = release + d_ij + slack. The slack cap keeps a dedicated asset able
// to deliver and return within one horizon.
Instance GenerateInstance(const SizeClass& size, int k, std::uint64_t seed);

enum class DistanceCategory { kCloseRange, kMediumRange, kLongRange };
const char* DistanceCategoryCode(DistanceCategory category);  // CR, MR, LR

struct DistanceIndex {
  int total_distance = 0;
  DistanceCategory category = DistanceCategory::kMediumRange;
};

// Thirds of [n(n-1), 3n(n-1)]: close range while total - min <=
// ceil(range / 3), long range while max - total < range / 3.
DistanceIndex ClassifyDistance(int total_distance, int n_physical);

}  // namespace cssnd

#endif  // CSSND_INSTGEN_HPP_
