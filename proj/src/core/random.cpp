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

#include "cssnd/random.hpp"

#include <stdexcept>

namespace cssnd {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream) {
  return SplitMix64(SplitMix64(master) ^ SplitMix64(stream * 0xd1b54a32d192ed03ULL));
}

int Rng::UniformInt(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("UniformInt: empty range");
  const std::uint64_t range =
      static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return static_cast<int>(lo + static_cast<std::int64_t>(draw % range));
}

double Rng::Unit() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace cssnd
