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

#ifndef CSSND_INSTANCE_IO_HPP_
#define CSSND_INSTANCE_IO_HPP_

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "cssnd/core.hpp"

namespace cssnd {

// Field names: n_physical, periods, distance, commodities[{id, origin, dest,
// release, due, volume}], owned, leasable, costs{f, g, holding, r_e, r_l,
// routing_seed, routing[{type, from, to, depart, tc, cost}]}, seed. Optional:
// name, service_capacity, outsourced_arcs[[from, to, depart]].
nlohmann::json InstanceToJson(const Instance& instance);
// Throws DomainError on missing or mistyped fields. Does not validate
// semantics; call ValidateInstance for that.
Instance InstanceFromJson(const nlohmann::json& doc);

Instance ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const Instance& instance, const std::string& path);

// Stable serialization used for hashing and for byte-identical files.
std::string CanonicalInstanceText(const Instance& instance);
std::uint64_t Fnv1a64(const std::string& bytes);
// 16 lowercase hex digits of Fnv1a64 over the canonical text.
std::string InstanceHash(const Instance& instance);
std::string HexU64(std::uint64_t value);

}  // namespace cssnd

#endif  // CSSND_INSTANCE_IO_HPP_
