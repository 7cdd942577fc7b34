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

#ifndef CSSND_RANDOM_HPP_
#define CSSND_RANDOM_HPP_

#include <cstdint>
#include <random>

namespace cssnd {

// Named streams. Each consumer seeds its own engine with
// DeriveSeed(master, stream) so adding draws to one table never shifts
// another.
enum class Stream : std::uint64_t {
  kDistances = 1,
  kCommodities = 2,
  kServiceCosts = 3,
  kOutsourcedCosts = 4,
  kRoutingSeed = 5,
  kBenchSuite = 6,
};

std::uint64_t SplitMix64(std::uint64_t x);
std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);
inline std::uint64_t DeriveSeed(std::uint64_t master, Stream stream) {
  return DeriveSeed(master, static_cast<std::uint64_t>(stream));
}

// std::mt19937_64 has a fully specified output sequence; the distribution
// mappings below are written out so results do not depend on the standard
// library's distribution classes.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Next() { return engine_(); }
  // Uniform integer in [lo, hi], rejection sampled.
  int UniformInt(int lo, int hi);
  // Uniform double in [0, 1) with 53 random bits.
  double Unit();
  double Uniform(double lo, double hi) { return lo + (hi - lo) * Unit(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cssnd

#endif  // CSSND_RANDOM_HPP_
