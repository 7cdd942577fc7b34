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

#include "cssnd/matching.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <utility>

namespace cssnd {
namespace {

// Port of the O(n^3) primal-dual blossom algorithm in the formulation of
// Galil ("Efficient algorithms for finding maximum matching in graphs").
// Endpoint p of edge k is vertex endpoint_[p]; edges 2k and 2k+1 are the two
// ends of edge k. Blossom ids are n..2n-1.
class Blossom {
 public:
  Blossom(int n, const std::vector<WeightedEdge>& edges, bool max_cardinality)
      : n_(n), edges_(edges), max_cardinality_(max_cardinality) {}

  std::vector<int> Run();

 private:
  std::int64_t Slack(int k) const {
    return dual_[edges_[k].u] + dual_[edges_[k].v] - 2 * edges_[k].weight;
  }
  void Leaves(int b, std::vector<int>& out) const;
  std::vector<int> Leaves(int b) const {
    std::vector<int> out;
    Leaves(b, out);
    return out;
  }
  void AssignLabel(int w, int t, int p);
  int ScanBlossom(int v, int w);
  void AddBlossom(int base, int k);
  void ExpandBlossom(int b, bool endstage);
  void AugmentBlossom(int b, int v);
  void AugmentMatching(int k);
  static int IndexOf(const std::vector<int>& list, int value) {
    return static_cast<int>(std::find(list.begin(), list.end(), value) - list.begin());
  }

  int n_;
  const std::vector<WeightedEdge>& edges_;
  bool max_cardinality_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<int> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<bool> allowedge_;
  std::vector<int> queue_;
};

void Blossom::Leaves(int b, std::vector<int>& out) const {
  if (b < n_) {
    out.push_back(b);
    return;
  }
  for (int t : blossomchilds_[b]) Leaves(t, out);
}

void Blossom::AssignLabel(int w, int t, int p) {
  const int b = inblossom_[w];
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    Leaves(b, queue_);
  } else if (t == 2) {
    const int base = blossombase_[b];
    AssignLabel(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
  }
}

int Blossom::ScanBlossom(int v, int w) {
  std::vector<int> path;
  int base = -1;
  while (v != -1 || w != -1) {
    int b = inblossom_[v];
    if (label_[b] & 4) {
      base = blossombase_[b];
      break;
    }
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint_[labelend_[b]];
      b = inblossom_[v];
      v = endpoint_[labelend_[b]];
    }
    if (w != -1) std::swap(v, w);
  }
  for (int b : path) label_[b] = 1;
  return base;
}

void Blossom::AddBlossom(int base, int k) {
  int v = edges_[k].u;
  int w = edges_[k].v;
  const int bb = inblossom_[base];
  int bv = inblossom_[v];
  int bw = inblossom_[w];
  const int b = unused_.back();
  unused_.pop_back();
  blossombase_[b] = base;
  blossomparent_[b] = -1;
  blossomparent_[bb] = b;
  std::vector<int> path;
  std::vector<int> endps;
  while (bv != bb) {
    blossomparent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = endpoint_[labelend_[bv]];
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    blossomparent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint_[labelend_[bw]];
    bw = inblossom_[w];
  }
  blossomchilds_[b] = path;
  blossomendps_[b] = endps;
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = 0;
  for (int leaf : Leaves(b)) {
    if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }
  std::vector<int> bestedgeto(static_cast<size_t>(2 * n_), -1);
  for (int child : path) {
    std::vector<std::vector<int>> nblists;
    if (!has_bestedges_[child]) {
      for (int leaf : Leaves(child)) {
        std::vector<int> list;
        for (int p : neighbend_[leaf]) list.push_back(p / 2);
        nblists.push_back(std::move(list));
      }
    } else {
      nblists.push_back(blossombestedges_[child]);
    }
    for (const std::vector<int>& list : nblists) {
      for (int e : list) {
        int i = edges_[e].u;
        int j = edges_[e].v;
        if (inblossom_[j] == b) std::swap(i, j);
        const int bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 &&
            (bestedgeto[bj] == -1 || Slack(e) < Slack(bestedgeto[bj]))) {
          bestedgeto[bj] = e;
        }
      }
    }
    blossombestedges_[child].clear();
    has_bestedges_[child] = false;
    bestedge_[child] = -1;
  }
  blossombestedges_[b].clear();
  for (int e : bestedgeto) {
    if (e != -1) blossombestedges_[b].push_back(e);
  }
  has_bestedges_[b] = true;
  bestedge_[b] = -1;
  for (int e : blossombestedges_[b]) {
    if (bestedge_[b] == -1 || Slack(e) < Slack(bestedge_[b])) bestedge_[b] = e;
  }
}

void Blossom::ExpandBlossom(int b, bool endstage) {
  const std::vector<int> children = blossomchilds_[b];
  for (int s : children) {
    blossomparent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      ExpandBlossom(s, endstage);
    } else {
      for (int leaf : Leaves(s)) inblossom_[leaf] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const std::vector<int>& childs = blossomchilds_[b];
    const std::vector<int>& endps = blossomendps_[b];
    const int size = static_cast<int>(childs.size());
    auto at = [size](const std::vector<int>& list, int index) {
      return list[static_cast<size_t>(((index % size) + size) % size)];
    };
    const int entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
    int j = IndexOf(childs, entrychild);
    int jstep;
    int endptrick;
    if (j & 1) {
      j -= size;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    int p = labelend_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = 0;
      label_[endpoint_[at(endps, j - endptrick) ^ endptrick ^ 1]] = 0;
      AssignLabel(endpoint_[p ^ 1], 2, p);
      allowedge_[at(endps, j - endptrick) / 2] = true;
      j += jstep;
      p = at(endps, j - endptrick) ^ endptrick;
      allowedge_[p / 2] = true;
      j += jstep;
    }
    int bv = at(childs, j);
    label_[endpoint_[p ^ 1]] = label_[bv] = 2;
    labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (at(childs, j) != entrychild) {
      bv = at(childs, j);
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      int found = -1;
      for (int leaf : Leaves(bv)) {
        if (label_[leaf] != 0) {
          found = leaf;
          break;
        }
      }
      if (found != -1) {
        label_[found] = 0;
        label_[endpoint_[mate_[blossombase_[bv]]]] = 0;
        AssignLabel(found, 2, labelend_[found]);
      }
      j += jstep;
    }
  }
  label_[b] = labelend_[b] = -1;
  blossomchilds_[b].clear();
  blossomendps_[b].clear();
  blossombase_[b] = -1;
  blossombestedges_[b].clear();
  has_bestedges_[b] = false;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void Blossom::AugmentBlossom(int b, int v) {
  int t = v;
  while (blossomparent_[t] != b) t = blossomparent_[t];
  if (t >= n_) AugmentBlossom(t, v);
  std::vector<int>& childs = blossomchilds_[b];
  std::vector<int>& endps = blossomendps_[b];
  const int size = static_cast<int>(childs.size());
  auto idx = [size](int index) { return static_cast<size_t>(((index % size) + size) % size); };
  const int i = IndexOf(childs, t);
  int j = i;
  int jstep;
  int endptrick;
  if (i & 1) {
    j -= size;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = childs[idx(j)];
    const int p = endps[idx(j - endptrick)] ^ endptrick;
    if (t >= n_) AugmentBlossom(t, endpoint_[p]);
    j += jstep;
    t = childs[idx(j)];
    if (t >= n_) AugmentBlossom(t, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(childs.begin(), childs.begin() + i, childs.end());
  std::rotate(endps.begin(), endps.begin() + i, endps.end());
  blossombase_[b] = blossombase_[childs[0]];
}

void Blossom::AugmentMatching(int k) {
  const int v = edges_[k].u;
  const int w = edges_[k].v;
  for (auto [s, p] : {std::pair<int, int>{v, 2 * k + 1}, std::pair<int, int>{w, 2 * k}}) {
    while (true) {
      const int bs = inblossom_[s];
      if (bs >= n_) AugmentBlossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const int t = endpoint_[labelend_[bs]];
      const int bt = inblossom_[t];
      s = endpoint_[labelend_[bt]];
      const int j = endpoint_[labelend_[bt] ^ 1];
      if (bt >= n_) AugmentBlossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<int> Blossom::Run() {
  const int nedge = static_cast<int>(edges_.size());
  const size_t n2 = static_cast<size_t>(2 * n_);
  std::int64_t maxweight = 0;
  for (const WeightedEdge& e : edges_) maxweight = std::max(maxweight, e.weight);
  endpoint_.resize(static_cast<size_t>(2 * nedge));
  for (int p = 0; p < 2 * nedge; ++p) endpoint_[p] = p % 2 == 0 ? edges_[p / 2].u : edges_[p / 2].v;
  neighbend_.assign(static_cast<size_t>(n_), {});
  for (int k = 0; k < nedge; ++k) {
    neighbend_[edges_[k].u].push_back(2 * k + 1);
    neighbend_[edges_[k].v].push_back(2 * k);
  }
  mate_.assign(static_cast<size_t>(n_), -1);
  label_.assign(n2, 0);
  labelend_.assign(n2, -1);
  inblossom_.resize(static_cast<size_t>(n_));
  for (int i = 0; i < n_; ++i) inblossom_[i] = i;
  blossomparent_.assign(n2, -1);
  blossomchilds_.assign(n2, {});
  blossombase_.assign(n2, -1);
  for (int i = 0; i < n_; ++i) blossombase_[i] = i;
  blossomendps_.assign(n2, {});
  bestedge_.assign(n2, -1);
  blossombestedges_.assign(n2, {});
  has_bestedges_.assign(n2, false);
  unused_.clear();
  for (int i = n_; i < 2 * n_; ++i) unused_.push_back(i);
  dual_.assign(n2, 0);
  for (int i = 0; i < n_; ++i) dual_[i] = maxweight;
  allowedge_.assign(static_cast<size_t>(nedge), false);

  for (int stage = 0; stage < n_; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (int b = n_; b < 2 * n_; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = false;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), false);
    queue_.clear();
    for (int v = 0; v < n_; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) AssignLabel(v, 1, -1);
    }
    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const int v = queue_.back();
        queue_.pop_back();
        for (int p : neighbend_[v]) {
          const int k = p / 2;
          const int w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allowedge_[k]) {
            kslack = Slack(k);
            if (kslack <= 0) allowedge_[k] = true;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == 0) {
              AssignLabel(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const int base = ScanBlossom(v, w);
              if (base >= 0) {
                AddBlossom(base, k);
              } else {
                AugmentMatching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const int b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < Slack(bestedge_[b])) bestedge_[b] = k;
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < Slack(bestedge_[w])) bestedge_[w] = k;
          }
        }
      }
      if (augmented) break;

      int deltatype = -1;
      std::int64_t delta = 0;
      int deltaedge = -1;
      int deltablossom = -1;
      if (!max_cardinality_) {
        deltatype = 1;
        delta = *std::min_element(dual_.begin(), dual_.begin() + n_);
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const std::int64_t d = Slack(bestedge_[v]);
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (int b = 0; b < 2 * n_; ++b) {
        if (blossomparent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const std::int64_t d = Slack(bestedge_[b]) / 2;
          if (deltatype == -1 || d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1 && label_[b] == 2 &&
            (deltatype == -1 || dual_[b] < delta)) {
          delta = dual_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }
      if (deltatype == -1) {
        deltatype = 1;
        delta = std::max<std::int64_t>(0, *std::min_element(dual_.begin(), dual_.begin() + n_));
      }
      for (int v = 0; v < n_; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dual_[v] -= delta;
        } else if (label_[inblossom_[v]] == 2) {
          dual_[v] += delta;
        }
      }
      for (int b = n_; b < 2 * n_; ++b) {
        if (blossombase_[b] >= 0 && blossomparent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }
      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[deltaedge] = true;
        int i = edges_[deltaedge].u;
        if (label_[inblossom_[i]] == 0) i = edges_[deltaedge].v;
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = true;
        queue_.push_back(edges_[deltaedge].u);
      } else {
        ExpandBlossom(deltablossom, false);
      }
    }
    if (!augmented) break;
    for (int b = n_; b < 2 * n_; ++b) {
      if (blossomparent_[b] == -1 && blossombase_[b] >= 0 && label_[b] == 1 && dual_[b] == 0) {
        ExpandBlossom(b, true);
      }
    }
  }
  std::vector<int> out(static_cast<size_t>(n_), -1);
  for (int v = 0; v < n_; ++v) {
    if (mate_[v] >= 0) out[v] = endpoint_[mate_[v]];
  }
  return out;
}

}  // namespace

std::vector<int> MaxWeightMatching(int vertex_count, const std::vector<WeightedEdge>& edges,
                                   bool max_cardinality) {
  if (edges.empty()) return std::vector<int>(static_cast<size_t>(vertex_count), -1);
  return Blossom(vertex_count, edges, max_cardinality).Run();
}

MatchingResult SolveP2(const std::vector<CandidatePair>& pairs) {
  MatchingResult result;
  // Dense vertex ids, and the cheapest candidate per unordered pair.
  std::map<int, int> vertex;
  std::map<std::pair<int, int>, int> best;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const CandidatePair& c = pairs[i];
    if (c.a == c.b) continue;
    vertex.emplace(c.a, 0);
    vertex.emplace(c.b, 0);
    const std::pair<int, int> key{std::min(c.a, c.b), std::max(c.a, c.b)};
    const auto it = best.find(key);
    if (it == best.end() || c.cost < pairs[it->second].cost) best[key] = static_cast<int>(i);
  }
  int n = 0;
  for (auto& [id, index] : vertex) index = n++;
  const int target_start = n / 2;
  if (best.empty()) {
    result.iterations = target_start + 1;
    return result;
  }
  std::vector<WeightedEdge> edges;
  std::vector<int> edge_pair;
  std::int64_t max_cost = 0;
  std::vector<std::int64_t> scaled;
  for (const auto& [key, index] : best) {
    scaled.push_back(std::llround(pairs[index].cost * 1e6));
    max_cost = std::max(max_cost, scaled.back());
  }
  size_t e = 0;
  for (const auto& [key, index] : best) {
    edges.push_back({vertex[key.first], vertex[key.second], max_cost + 1 - scaled[e++]});
    edge_pair.push_back(index);
  }
  const std::vector<int> mate = MaxWeightMatching(n, edges, true);
  for (size_t k = 0; k < edges.size(); ++k) {
    if (mate[edges[k].u] == edges[k].v) result.selected.push_back(edge_pair[k]);
  }
  std::sort(result.selected.begin(), result.selected.end());
  result.cardinality = static_cast<int>(result.selected.size());
  for (int index : result.selected) result.cost += pairs[index].cost;
  // Targets floor(|M|/2), floor(|M|/2) - 1, ... down to the largest feasible.
  result.iterations = target_start - result.cardinality + 1;
  return result;
}

std::vector<int> Scopf(const std::vector<CandidatePair>& pairs) {
  std::map<int, int> degree;
  for (const CandidatePair& c : pairs) {
    if (c.a == c.b) continue;
    ++degree[c.a];
    ++degree[c.b];
  }
  struct Scored {
    int score;
    int lo;
    int hi;
    int index;
  };
  std::vector<Scored> order;
  for (size_t i = 0; i < pairs.size(); ++i) {
    const CandidatePair& c = pairs[i];
    if (c.a == c.b) continue;
    order.push_back({degree[c.a] + degree[c.b], std::min(c.a, c.b), std::max(c.a, c.b),
                     static_cast<int>(i)});
  }
  std::sort(order.begin(), order.end(), [](const Scored& x, const Scored& y) {
    return std::tie(x.score, x.lo, x.hi, x.index) < std::tie(y.score, y.lo, y.hi, y.index);
  });
  std::map<int, bool> cancelled;
  std::vector<int> out;
  for (const Scored& s : order) {
    if (cancelled[s.lo] || cancelled[s.hi]) continue;
    cancelled[s.lo] = cancelled[s.hi] = true;
    out.push_back(s.index);
  }
  return out;
}

}  // namespace cssnd
