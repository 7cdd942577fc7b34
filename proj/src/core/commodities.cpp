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

#include "cssnd/core.hpp"

namespace cssnd {

const char* TcKindName(TcKind kind) {
  switch (kind) {
    case TcKind::kEarly:
      return "early";
    case TcKind::kOriginal:
      return "original";
    case TcKind::kTardy:
      return "tardy";
  }
  return "?";
}

std::vector<TransformedCommodity> ExpandCommodities(const Instance& instance) {
  const int t_count = instance.period_count;
  std::vector<TransformedCommodity> out;
  out.reserve(instance.commodities.size() * 3);
  int index = 0;
  for (const OriginalCommodity& oc : instance.commodities) {
    for (TcKind kind : {TcKind::kEarly, TcKind::kOriginal, TcKind::kTardy}) {
      const int shift = static_cast<int>(kind) - 2;
      TransformedCommodity tc;
      tc.id = TcId(index, kind);
      tc.parent_id = oc.id;
      tc.kind = kind;
      tc.origin_physical = oc.origin;
      tc.dest_physical = oc.dest;
      tc.release = CyclicPeriod(oc.release + shift, t_count);
      tc.due = CyclicPeriod(oc.due + shift, t_count);
      tc.origin_node = TsNode(tc.origin_physical, tc.release, t_count);
      tc.dest_node = TsNode(tc.dest_physical, tc.due, t_count);
      tc.volume = oc.volume;
      out.push_back(tc);
    }
    ++index;
  }
  return out;
}

}  // namespace cssnd
