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

#include "oracles.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <sstream>

namespace cssnd::oracle {

namespace {

int Mod(int value, int period_count) { return ((value % period_count) + period_count) % period_count; }

bool IsName(const std::string& token) {
  return !token.empty() && (std::isalpha(static_cast<unsigned char>(token[0])) || token[0] == '_');
}

}  // namespace

Instance SampleInstance() {
  Instance inst;
  inst.name = "sample";
  inst.period_count = 7;
  inst.physical.node_count = 5;
  inst.physical.distance.assign(5, std::vector<int>(5, 0));
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      if (i != j) inst.physical.distance[i][j] = std::abs(i - j) == 1 ? 1 : 2;
    }
  }
  // id, origin, dest, release, due
  const int rows[10][5] = {{1, 2, 1, 2, 5}, {2, 3, 2, 3, 6}, {3, 3, 1, 5, 3}, {4, 2, 4, 4, 7},
                           {5, 4, 3, 5, 3}, {6, 1, 2, 7, 5}, {7, 3, 5, 4, 7}, {8, 1, 4, 7, 4},
                           {9, 5, 3, 3, 5}, {10, 5, 4, 1, 3}};
  for (const auto& r : rows) inst.commodities.push_back({r[0], r[1], r[2], r[3], r[4], 1.0});
  inst.owned_assets = 7;
  inst.leasable_assets = 5;
  inst.costs.routing_seed = 1;
  inst.seed = 1;
  return inst;
}

PhysicalNetwork RandomLineNetwork(Rng& rng, int n) {
  std::vector<int> x(n);
  for (int& v : x) v = rng.UniformInt(0, 3);
  PhysicalNetwork physical;
  physical.node_count = n;
  physical.distance.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) physical.distance[i][j] = std::max(1, std::abs(x[i] - x[j]));
    }
  }
  return physical;
}

Instance RandomInstance(Rng& rng, int n, int k, int period_count) {
  Instance inst;
  inst.name = "random";
  inst.period_count = period_count;
  inst.physical = RandomLineNetwork(rng, n);
  for (int id = 1; id <= k; ++id) {
    OriginalCommodity oc;
    oc.id = id;
    oc.origin = rng.UniformInt(1, n);
    do {
      oc.dest = rng.UniformInt(1, n);
    } while (oc.dest == oc.origin);
    const int d = inst.physical.distance[oc.origin - 1][oc.dest - 1];
    const int back = inst.physical.distance[oc.dest - 1][oc.origin - 1];
    const int max_slack = std::max(0, std::min(2, period_count - d - back));
    oc.release = rng.UniformInt(1, period_count);
    oc.due = Mod(oc.release - 1 + d + rng.UniformInt(0, max_slack), period_count) + 1;
    inst.commodities.push_back(oc);
  }
  inst.owned_assets = std::max(1, k / 2);
  inst.leasable_assets = k;
  inst.costs.routing_seed = rng.Next();
  inst.seed = 7;
  return inst;
}

PathWindow RandomPathWindow(Rng& rng, const PhysicalNetwork& physical, int period_count) {
  PathWindow w;
  w.origin = rng.UniformInt(1, physical.node_count);
  do {
    w.dest = rng.UniformInt(1, physical.node_count);
  } while (w.dest == w.origin);
  w.depart = rng.UniformInt(1, period_count);
  w.arrive = Mod(w.depart - 1 + physical.distance[w.origin - 1][w.dest - 1] + rng.UniformInt(0, 2),
                 period_count) +
             1;
  return w;
}

std::vector<CandidatePair> RandomConflictSet(Rng& rng, int max_ids) {
  const int ids = rng.UniformInt(2, max_ids);
  const int count = rng.UniformInt(1, 25);
  std::vector<CandidatePair> pairs;
  for (int i = 0; i < count; ++i) {
    CandidatePair p;
    p.a = 100 + rng.UniformInt(1, ids);
    do {
      p.b = 100 + rng.UniformInt(1, ids);
    } while (p.b == p.a);
    p.cost = std::round(rng.Uniform(0.0, 60.0) * 1000.0) / 1000.0;
    pairs.push_back(p);
  }
  return pairs;
}

std::set<PathKey> DfsPaths(const TimeSpaceNetwork& network, const TransformedCommodity& tc) {
  const int period_count = network.period_count();
  const int span = Mod(tc.due - tc.release, period_count);
  std::set<PathKey> found;
  std::vector<int> walk;
  std::function<void(int, int, int)> visit = [&](int node, int elapsed, int main_type) {
    if (elapsed == span) {
      if (node == tc.dest_node && main_type != 0) found.insert({main_type == 1, walk});
      return;
    }
    for (int id : network.out_arcs(node)) {
      const Arc& arc = network.arc(id);
      if (elapsed + arc.duration > span) continue;
      int next_type = main_type;
      if (arc.type != ArcType::kHolding) {
        if (main_type != 0) continue;
        if (arc.type == ArcType::kService && arc.capacity < tc.volume) continue;
        next_type = arc.type == ArcType::kService ? 1 : 2;
      }
      walk.push_back(id);
      visit(arc.to_node, elapsed + arc.duration, next_type);
      walk.pop_back();
    }
  };
  visit(tc.origin_node, 0, 0);
  return found;
}

bool SimulateTwoPathCycle(const PathWindow& p1, const PathWindow& p2,
                          const PhysicalNetwork& physical, int period_count) {
  auto travel = [&](int from, int to) { return from == to ? 0 : physical.Distance(from, to); };
  auto busy = [&](const PathWindow& p) {
    const int b = Mod(p.arrive - p.depart, period_count);
    return b == 0 ? period_count : b;
  };
  const int start = p1.depart;
  int clock = start + busy(p1);
  int ready = clock + travel(p1.dest, p2.origin);
  int depart2 = p2.depart;
  while (depart2 < ready) depart2 += period_count;
  clock = depart2 + busy(p2);
  return clock + travel(p2.dest, p1.origin) <= start + period_count;
}

BruteMatching BruteForceMatching(const std::vector<CandidatePair>& pairs) {
  std::map<int, int> index;
  for (const CandidatePair& p : pairs) {
    index.emplace(p.a, 0);
    index.emplace(p.b, 0);
  }
  int n = 0;
  for (auto& [id, i] : index) i = n++;
  const double none = std::numeric_limits<double>::infinity();
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, none));
  for (const CandidatePair& p : pairs) {
    const int u = index[p.a];
    const int v = index[p.b];
    if (u == v) continue;
    cost[u][v] = std::min(cost[u][v], p.cost);
    cost[v][u] = cost[u][v];
  }
  BruteMatching best;
  std::vector<bool> used(n, false);
  std::function<void(int, int, double)> search = [&](int from, int size, double total) {
    int v = from;
    while (v < n && used[v]) ++v;
    if (v >= n) {
      if (size > best.cardinality || (size == best.cardinality && total < best.cost)) {
        best.cardinality = size;
        best.cost = total;
      }
      return;
    }
    used[v] = true;
    search(v + 1, size, total);
    for (int u = v + 1; u < n; ++u) {
      if (used[u] || cost[v][u] == none) continue;
      used[u] = true;
      search(v + 1, size + 1, total + cost[v][u]);
      used[u] = false;
    }
    used[v] = false;
  };
  search(0, 0, 0.0);
  return best;
}

ModelCounts CountModel(const Instance& instance) {
  const int n = instance.physical.node_count;
  const int t = instance.period_count;
  const int k = static_cast<int>(instance.commodities.size());
  const int assets = instance.owned_assets + instance.leasable_assets;
  const int holding = n * t;
  const int service = n * (n - 1) * t;
  const int outsourced = instance.outsourced_arcs ? static_cast<int>(instance.outsourced_arcs->size())
                                                  : n * (n - 1) * t;
  const int tcs = 3 * k;
  const int nodes = n * t;
  ModelCounts c;
  c.variables["y"] = assets * (holding + service);
  c.variables["d"] = assets;
  c.variables["p"] = tcs;
  c.variables["s"] = tcs * outsourced;
  c.variables["x"] = tcs * (holding + service + outsourced);
  int idle = 0;
  for (const OriginalCommodity& oc : instance.commodities) idle += t - Mod(oc.due - oc.release, t);
  c.rows["beta"] = 3 * idle;
  c.rows["asset"] = assets * t;
  c.rows["dbal"] = assets * nodes;
  c.rows["svc"] = service;
  c.rows["cover"] = k;
  c.rows["flow"] = tcs * nodes;
  c.rows["wf"] = holding + service;
  c.rows["of"] = tcs * outsourced;
  for (const auto& [name, count] : c.variables) c.total_variables += count;
  for (const auto& [name, count] : c.rows) c.total_rows += count;
  return c;
}

LpNames ParseLpNames(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("  ", 0) == 0 && !lines.empty()) {
      lines.back() += " " + line;
    } else {
      lines.push_back(line);
    }
  }
  LpNames out;
  std::string section;
  for (const std::string& l : lines) {
    if (l.empty() || l[0] == '\\') continue;
    if (l[0] != ' ') {
      section = l;
      continue;
    }
    std::istringstream tokens(l);
    std::vector<std::string> words;
    std::string word;
    while (tokens >> word) words.push_back(word);
    if (words.empty()) continue;
    std::size_t first = 0;
    if (section == "Subject To" || section == "Minimize") {
      if (words[0].back() == ':') {
        const std::string row = words[0].substr(0, words[0].size() - 1);
        if (section == "Subject To") {
          out.rows.push_back(row);
          out.rhs[row] = std::stod(words.back());
        }
        first = 1;
      }
    }
    for (std::size_t i = first; i < words.size(); ++i) {
      if (IsName(words[i]) && words[i] != "inf" && words[i] != "infinity") {
        out.variables.insert(words[i]);
      }
    }
  }
  return out;
}

}  // namespace cssnd::oracle
