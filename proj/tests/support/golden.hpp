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

// Hand-checked expected values for the reference sample and the reference
// distance-index rows.

#ifndef CSSND_TESTS_SUPPORT_GOLDEN_HPP_
#define CSSND_TESTS_SUPPORT_GOLDEN_HPP_

#include <vector>

#include "cssnd/instgen.hpp"

namespace cssnd::golden {

// q = 1 marks the original variant in the reference layout.
struct TcRow {
  int origin_node, dest_node, q, release, due;
};
inline const TcRow kSampleTcs[30] = {
    {8, 4, 2, 1, 4},    {9, 5, 1, 2, 5},    {10, 6, 2, 3, 6},   {16, 12, 2, 2, 5},
    {17, 13, 1, 3, 6},  {18, 14, 2, 4, 7},  {18, 2, 2, 4, 2},   {19, 3, 1, 5, 3},
    {20, 4, 2, 6, 4},   {10, 27, 2, 3, 6},  {11, 28, 1, 4, 7},  {12, 22, 2, 5, 1},
    {25, 16, 2, 4, 2},  {26, 17, 1, 5, 3},  {27, 18, 2, 6, 4},  {6, 11, 2, 6, 4},
    {7, 12, 1, 7, 5},   {1, 13, 2, 1, 6},   {17, 34, 2, 3, 6},  {18, 35, 1, 4, 7},
    {19, 29, 2, 5, 1},  {6, 24, 2, 6, 3},   {7, 25, 1, 7, 4},   {1, 26, 2, 1, 5},
    {30, 18, 2, 2, 4},  {31, 19, 1, 3, 5},  {32, 20, 2, 4, 6},  {35, 23, 2, 7, 2},
    {29, 24, 1, 1, 3},  {30, 25, 2, 2, 4}};

// Window maps of the ten sample commodities.
inline const std::vector<std::vector<int>> kSampleWindows = {
    {2, 3, 4, 5},       {3, 4, 5, 6},       {1, 2, 3, 5, 6, 7}, {4, 5, 6, 7}, {1, 2, 3, 5, 6, 7},
    {1, 2, 3, 4, 5, 7}, {4, 5, 6, 7},       {1, 2, 3, 4, 7},    {3, 4, 5},    {1, 2, 3}};

// Periods every variant of each sample commodity occupies.
inline const std::vector<std::vector<int>> kSampleOccupancy = {
    {3, 4}, {4, 5}, {1, 2, 6, 7}, {5, 6}, {1, 2, 6, 7}, {1, 2, 3, 4}, {5, 6}, {1, 2, 3}, {4}, {2}};

// Window maps of the first nine transformed commodities.
inline const std::vector<std::vector<int>> kFirstTcWindows = {
    {1, 2, 3, 4}, {2, 3, 4, 5},       {3, 4, 5, 6},       {2, 3, 4, 5},       {3, 4, 5, 6},
    {4, 5, 6, 7}, {1, 2, 4, 5, 6, 7}, {1, 2, 3, 5, 6, 7}, {1, 2, 3, 4, 6, 7}};

inline const std::vector<int> kSamplePhi = {4, 5, 3, 4, 3, 4, 2};
inline constexpr int kSampleGamma = 2;
inline constexpr int kSampleTheta = 5;

struct DistanceRow {
  int n;
  int total;
  DistanceCategory category;
};
inline const DistanceRow kReferenceDistanceRows[20] = {
    {5, 50, DistanceCategory::kLongRange},   {5, 48, DistanceCategory::kLongRange},
    {5, 38, DistanceCategory::kMediumRange}, {5, 36, DistanceCategory::kMediumRange},
    {5, 34, DistanceCategory::kCloseRange},  {5, 56, DistanceCategory::kLongRange},
    {5, 40, DistanceCategory::kMediumRange}, {5, 26, DistanceCategory::kCloseRange},
    {5, 46, DistanceCategory::kMediumRange}, {5, 42, DistanceCategory::kMediumRange},
    {6, 72, DistanceCategory::kLongRange},   {6, 52, DistanceCategory::kMediumRange},
    {6, 62, DistanceCategory::kMediumRange}, {6, 68, DistanceCategory::kMediumRange},
    {6, 54, DistanceCategory::kMediumRange}, {6, 50, DistanceCategory::kCloseRange},
    {6, 66, DistanceCategory::kMediumRange}, {6, 78, DistanceCategory::kLongRange},
    {6, 46, DistanceCategory::kCloseRange},  {6, 74, DistanceCategory::kLongRange}};

}  // namespace cssnd::golden

#endif  // CSSND_TESTS_SUPPORT_GOLDEN_HPP_
