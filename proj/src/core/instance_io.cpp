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

#include "cssnd/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cssnd {

using nlohmann::json;

namespace {

ArcType ParseArcType(const std::string& s) {
  if (s == "service") return ArcType::kService;
  if (s == "outsourced") return ArcType::kOutsourced;
  throw DomainError("routing entry type must be service or outsourced, got '" + s + "'");
}

template <typename T>
T Required(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw DomainError(std::string("instance: missing field '") + key + "'");
  }
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("instance: field '") + key + "': " + e.what());
  }
}

template <typename T>
T Optional(const json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw DomainError(std::string("instance: field '") + key + "': " + e.what());
  }
}

}  // namespace

json InstanceToJson(const Instance& instance) {
  json doc;
  if (!instance.name.empty()) doc["name"] = instance.name;
  doc["n_physical"] = instance.physical.node_count;
  doc["periods"] = instance.period_count;
  doc["distance"] = instance.physical.distance;
  json commodities = json::array();
  for (const OriginalCommodity& oc : instance.commodities) {
    commodities.push_back({{"id", oc.id},
                           {"origin", oc.origin},
                           {"dest", oc.dest},
                           {"release", oc.release},
                           {"due", oc.due},
                           {"volume", oc.volume}});
  }
  doc["commodities"] = commodities;
  doc["owned"] = instance.owned_assets;
  doc["leasable"] = instance.leasable_assets;
  doc["service_capacity"] = instance.service_capacity;
  json costs = {{"f", instance.costs.fixed_owned},
                {"g", instance.costs.fixed_leased},
                {"holding", instance.costs.holding},
                {"r_e", instance.costs.penalty_early},
                {"r_l", instance.costs.penalty_tardy}};
  if (instance.costs.routing_seed.has_value()) {
    costs["routing_seed"] = *instance.costs.routing_seed;
  }
  if (!instance.costs.routing.empty()) {
    json routing = json::array();
    for (const RoutingEntry& e : instance.costs.routing) {
      routing.push_back({{"type", ArcTypeName(e.type)},
                         {"from", e.from},
                         {"to", e.to},
                         {"depart", e.depart},
                         {"tc", e.tc},
                         {"cost", e.cost}});
    }
    costs["routing"] = routing;
  }
  doc["costs"] = costs;
  if (instance.outsourced_arcs.has_value()) {
    json arcs = json::array();
    for (const auto& k : *instance.outsourced_arcs) arcs.push_back({k.from, k.to, k.depart});
    doc["outsourced_arcs"] = arcs;
  }
  doc["seed"] = instance.seed;
  return doc;
}

Instance InstanceFromJson(const json& doc) {
  if (!doc.is_object()) throw DomainError("instance: document must be a JSON object");
  Instance inst;
  inst.name = Optional<std::string>(doc, "name", "");
  inst.physical.node_count = Required<int>(doc, "n_physical");
  inst.period_count = Required<int>(doc, "periods");
  inst.physical.distance = Required<std::vector<std::vector<int>>>(doc, "distance");
  if (!doc.contains("commodities") || !doc["commodities"].is_array()) {
    throw DomainError("instance: missing array 'commodities'");
  }
  for (const json& c : doc["commodities"]) {
    OriginalCommodity oc;
    oc.id = Required<int>(c, "id");
    oc.origin = Required<int>(c, "origin");
    oc.dest = Required<int>(c, "dest");
    oc.release = Required<int>(c, "release");
    oc.due = Required<int>(c, "due");
    oc.volume = Optional<double>(c, "volume", 1.0);
    inst.commodities.push_back(oc);
  }
  inst.owned_assets = Required<int>(doc, "owned");
  inst.leasable_assets = Required<int>(doc, "leasable");
  inst.service_capacity = Optional<double>(doc, "service_capacity", 1.0);
  if (!doc.contains("costs") || !doc["costs"].is_object()) {
    throw DomainError("instance: missing object 'costs'");
  }
  const json& costs = doc["costs"];
  inst.costs.fixed_owned = Required<double>(costs, "f");
  inst.costs.fixed_leased = Required<double>(costs, "g");
  inst.costs.holding = Required<double>(costs, "holding");
  inst.costs.penalty_early = Required<double>(costs, "r_e");
  inst.costs.penalty_tardy = Required<double>(costs, "r_l");
  if (costs.contains("routing_seed")) {
    inst.costs.routing_seed = Required<std::uint64_t>(costs, "routing_seed");
  }
  if (costs.contains("routing")) {
    for (const json& e : costs["routing"]) {
      RoutingEntry entry;
      entry.type = ParseArcType(Required<std::string>(e, "type"));
      entry.from = Required<int>(e, "from");
      entry.to = Required<int>(e, "to");
      entry.depart = Required<int>(e, "depart");
      entry.tc = Required<int>(e, "tc");
      entry.cost = Required<double>(e, "cost");
      inst.costs.routing.push_back(entry);
    }
  }
  if (doc.contains("outsourced_arcs")) {
    std::vector<OutsourcedArcKey> keys;
    for (const json& a : doc["outsourced_arcs"]) {
      if (!a.is_array() || a.size() != 3) {
        throw DomainError("instance: outsourced_arcs entries are [from, to, depart]");
      }
      keys.push_back({a[0].get<int>(), a[1].get<int>(), a[2].get<int>()});
    }
    inst.outsourced_arcs = keys;
  }
  inst.seed = Optional<std::uint64_t>(doc, "seed", 0);
  return inst;
}

Instance ReadInstanceFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open instance file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DomainError("instance file '" + path + "': " + e.what());
  }
  return InstanceFromJson(doc);
}

void WriteInstanceFile(const Instance& instance, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << InstanceToJson(instance).dump(2) << "\n";
}

std::string CanonicalInstanceText(const Instance& instance) {
  return InstanceToJson(instance).dump();
}

std::uint64_t Fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string HexU64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

std::string InstanceHash(const Instance& instance) {
  return HexU64(Fnv1a64(CanonicalInstanceText(instance)));
}

}  // namespace cssnd
