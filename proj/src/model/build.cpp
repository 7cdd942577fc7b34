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

#include <algorithm>
#include <string>
#include <utility>

#include "cssnd/model.hpp"

namespace cssnd {

const char* SenseText(Sense sense) {
  switch (sense) {
    case Sense::kLe:
      return "<=";
    case Sense::kEq:
      return "=";
    case Sense::kGe:
      return ">=";
  }
  return "?";
}

const char* FamilyName(Family family) {
  switch (family) {
    case Family::kTransit:
      return "transit";
    case Family::kAssetPeriod:
      return "asset_period";
    case Family::kDesignBalance:
      return "design_balance";
    case Family::kServiceOnce:
      return "service_once";
    case Family::kCover:
      return "cover";
    case Family::kFlow:
      return "flow";
    case Family::kWeakForcing:
      return "weak_forcing";
    case Family::kStrongForcing:
      return "strong_forcing";
    case Family::kOutsourcedForcing:
      return "outsourced_forcing";
    case Family::kViGamma:
      return "vi_gamma";
    case Family::kViPhi:
      return "vi_phi";
    case Family::kNearGe:
      return "near_ge";
    case Family::kNearLe:
      return "near_le";
    case Family::kNearOutsourced:
      return "near_os";
    case Family::kShiftCap:
      return "shift_cap";
  }
  return "?";
}

int ModelIR::AddVariable(std::string name, VarKind kind, double lower, double upper) {
  const int id = static_cast<int>(variables.size());
  if (!index_.emplace(name, id).second) throw DomainError("duplicate variable " + name);
  variables.push_back(Variable{std::move(name), kind, lower, upper});
  return id;
}

int ModelIR::Find(const std::string& name) const {
  const auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int ModelIR::CountFamily(Family family) const {
  return static_cast<int>(std::count_if(constraints.begin(), constraints.end(),
                                        [&](const Constraint& c) { return c.family == family; }));
}

std::string YName(int asset, int arc) {
  return "y_v" + std::to_string(asset) + "_a" + std::to_string(arc);
}
std::string XName(int tc, int arc) {
  return "x_k" + std::to_string(tc) + "_a" + std::to_string(arc);
}
std::string SName(int tc, int arc) {
  return "s_k" + std::to_string(tc) + "_a" + std::to_string(arc);
}
std::string PName(int tc) { return "p_k" + std::to_string(tc); }
std::string DName(int asset) { return "d_v" + std::to_string(asset); }

bool SpansByPeriodClass(const TimeSpaceNetwork& network, const Arc& arc, int period) {
  const int ti = arc.depart_period;
  const int tj = arc.arrive_period;
  if (!arc.circular) return ti <= period && period < tj;
  switch (network.ClassOf(period)) {
    case PeriodClass::kT1:
      return false;
    case PeriodClass::kT2:
      return ti <= period;  // period < tj + |T| always holds
    case PeriodClass::kT3:
      return period < tj;  // ti <= period + |T| always holds
  }
  return false;
}

namespace {

// Variable index layout, in creation order: y, d, p, s, x.
struct Layout {
  int assets = 0;
  int tcs = 0;
  int designed = 0;  // |A_h| + |A_s|; these arcs carry ids 1..designed
  int outsourced = 0;
  int arcs = 0;
  int y_base = 0;
  int d_base = 0;
  int p_base = 0;
  int s_base = 0;
  int x_base = 0;

  int Y(int v, int a) const { return y_base + (v - 1) * designed + (a - 1); }
  int D(int v) const { return d_base + v - 1; }
  int P(int l) const { return p_base + l - 1; }
  int S(int l, int a) const { return s_base + (l - 1) * outsourced + (a - designed - 1); }
  int X(int l, int a) const { return x_base + (l - 1) * arcs + (a - 1); }
};

void AddRow(ModelIR& model, std::string name, Family family, std::vector<Term> terms,
            Sense sense, double rhs) {
  model.constraints.push_back(Constraint{std::move(name), family, std::move(terms), sense, rhs});
}

}  // namespace

ModelIR BuildMip(const Instance& instance, const TimeSpaceNetwork& network,
                 const std::vector<TransformedCommodity>& tcs, const CostTable& costs,
                 const AnalysisSummary* analysis, const ModelOptions& options) {
  if (options.shift_lambda && (*options.shift_lambda < 0.0 || *options.shift_lambda > 1.0)) {
    throw DomainError("lambda must lie in [0, 1]");
  }
  const int t_count = network.period_count();
  Layout lay;
  lay.assets = instance.fleet_size();
  lay.tcs = static_cast<int>(tcs.size());
  lay.designed = static_cast<int>(network.holding_arcs().size() + network.service_arcs().size());
  lay.outsourced = static_cast<int>(network.outsourced_arcs().size());
  lay.arcs = network.arc_count();

  ModelIR model;
  if (options.near_ge && options.near_le) {
    model.warnings.push_back("near_ge and near_le together fix the asset count to theta");
  }

  lay.y_base = 0;
  for (int v = 1; v <= lay.assets; ++v) {
    for (int a = 1; a <= lay.designed; ++a) model.AddVariable(YName(v, a), VarKind::kBinary, 0, 1);
  }
  lay.d_base = static_cast<int>(model.variables.size());
  for (int v = 1; v <= lay.assets; ++v) model.AddVariable(DName(v), VarKind::kBinary, 0, 1);
  lay.p_base = static_cast<int>(model.variables.size());
  for (const TransformedCommodity& tc : tcs) model.AddVariable(PName(tc.id), VarKind::kBinary, 0, 1);
  lay.s_base = static_cast<int>(model.variables.size());
  for (const TransformedCommodity& tc : tcs) {
    for (int a : network.outsourced_arcs()) {
      model.AddVariable(SName(tc.id, a), VarKind::kBinary, 0, 1);
    }
  }
  lay.x_base = static_cast<int>(model.variables.size());
  for (const TransformedCommodity& tc : tcs) {
    for (const Arc& arc : network.arcs()) {
      model.AddVariable(XName(tc.id, arc.id), VarKind::kContinuous, 0, kInfiniteCapacity);
    }
  }

  // Objective.
  for (int v = 1; v <= lay.assets; ++v) {
    const double f = v <= instance.owned_assets ? costs.params().fixed_owned
                                                : costs.params().fixed_leased;
    if (f != 0.0) model.objective.push_back({lay.D(v), f});
  }
  for (const TransformedCommodity& tc : tcs) {
    const double m = costs.Multiplier(tc.kind);
    for (int a = 1; a <= lay.designed; ++a) {
      const double c = costs.Routing(a, tc.id) * m;
      if (c != 0.0) model.objective.push_back({lay.X(tc.id, a), c});
    }
  }
  for (const TransformedCommodity& tc : tcs) {
    const double m = costs.Multiplier(tc.kind);
    for (int a : network.outsourced_arcs()) {
      const double c = costs.Routing(a, tc.id) * m;
      if (c != 0.0) model.objective.push_back({lay.S(tc.id, a), c});
    }
  }

  // Designed arcs spanning each period, cyclically and by period class.
  std::vector<std::vector<int>> cyclic_span(static_cast<size_t>(t_count));
  std::vector<std::vector<int>> class_span(static_cast<size_t>(t_count));
  std::vector<std::vector<int>> outsourced_span(static_cast<size_t>(t_count));
  for (int t = 1; t <= t_count; ++t) {
    for (const Arc& arc : network.arcs()) {
      if (arc.type == ArcType::kOutsourced) {
        if (SpansByPeriodClass(network, arc, t)) outsourced_span[t - 1].push_back(arc.id);
        continue;
      }
      if (network.Spans(arc, t)) cyclic_span[t - 1].push_back(arc.id);
      if (SpansByPeriodClass(network, arc, t)) class_span[t - 1].push_back(arc.id);
    }
  }

  // No flow outside the in-transit window.
  const AnalysisSummary local =
      analysis != nullptr ? AnalysisSummary{} : ComputeRequirements(instance, tcs);
  const AnalysisSummary& info = analysis != nullptr ? *analysis : local;
  for (const TransformedCommodity& tc : tcs) {
    for (int t = 1; t <= t_count; ++t) {
      if (info.beta[tc.id - 1][t - 1]) continue;
      std::vector<Term> terms;
      for (int a : cyclic_span[t - 1]) terms.push_back({lay.X(tc.id, a), 1.0});
      AddRow(model, "beta_k" + std::to_string(tc.id) + "_t" + std::to_string(t),
             Family::kTransit, std::move(terms), Sense::kLe, 0.0);
    }
  }

  // One activity per asset and period.
  for (int v = 1; v <= lay.assets; ++v) {
    for (int t = 1; t <= t_count; ++t) {
      std::vector<Term> terms;
      for (int a : class_span[t - 1]) terms.push_back({lay.Y(v, a), 1.0});
      terms.push_back({lay.D(v), -1.0});
      AddRow(model, "asset_v" + std::to_string(v) + "_t" + std::to_string(t),
             Family::kAssetPeriod, std::move(terms), Sense::kEq, 0.0);
    }
  }

  // Design balance.
  for (int v = 1; v <= lay.assets; ++v) {
    for (int node = 1; node <= network.node_count(); ++node) {
      std::vector<Term> terms;
      for (int a : network.out_arcs(node)) {
        if (a <= lay.designed) terms.push_back({lay.Y(v, a), 1.0});
      }
      for (int a : network.in_arcs(node)) {
        if (a <= lay.designed) terms.push_back({lay.Y(v, a), -1.0});
      }
      AddRow(model, "dbal_v" + std::to_string(v) + "_n" + std::to_string(node),
             Family::kDesignBalance, std::move(terms), Sense::kEq, 0.0);
    }
  }

  for (int a : network.service_arcs()) {
    std::vector<Term> terms;
    for (int v = 1; v <= lay.assets; ++v) terms.push_back({lay.Y(v, a), 1.0});
    AddRow(model, "svc_a" + std::to_string(a), Family::kServiceOnce, std::move(terms), Sense::kLe,
           1.0);
  }

  for (const OriginalCommodity& oc : instance.commodities) {
    std::vector<Term> terms;
    for (const TransformedCommodity& tc : tcs) {
      if (tc.parent_id == oc.id) terms.push_back({lay.P(tc.id), 1.0});
    }
    AddRow(model, "cover_o" + std::to_string(oc.id), Family::kCover, std::move(terms), Sense::kGe,
           1.0);
  }

  for (const TransformedCommodity& tc : tcs) {
    for (int node = 1; node <= network.node_count(); ++node) {
      std::vector<Term> terms;
      for (int a : network.out_arcs(node)) terms.push_back({lay.X(tc.id, a), 1.0});
      for (int a : network.in_arcs(node)) terms.push_back({lay.X(tc.id, a), -1.0});
      if (node == tc.origin_node) terms.push_back({lay.P(tc.id), -tc.volume});
      if (node == tc.dest_node) terms.push_back({lay.P(tc.id), tc.volume});
      AddRow(model, "flow_k" + std::to_string(tc.id) + "_n" + std::to_string(node),
             Family::kFlow, std::move(terms), Sense::kEq, 0.0);
    }
  }

  double big_m = 0.0;
  for (const TransformedCommodity& tc : tcs) big_m += tc.volume;
  for (int a = 1; a <= lay.designed; ++a) {
    const Arc& arc = network.arc(a);
    const double u = arc.type == ArcType::kHolding ? big_m : arc.capacity;
    std::vector<Term> terms;
    for (const TransformedCommodity& tc : tcs) terms.push_back({lay.X(tc.id, a), 1.0});
    for (int v = 1; v <= lay.assets; ++v) terms.push_back({lay.Y(v, a), -u});
    AddRow(model, "wf_a" + std::to_string(a), Family::kWeakForcing, std::move(terms), Sense::kLe,
           0.0);
  }

  if (options.strong_forcing) {
    for (const TransformedCommodity& tc : tcs) {
      for (int a = 1; a <= lay.designed; ++a) {
        const double b = std::min(tc.volume, network.arc(a).capacity);
        std::vector<Term> terms{{lay.X(tc.id, a), 1.0}};
        for (int v = 1; v <= lay.assets; ++v) terms.push_back({lay.Y(v, a), -b});
        AddRow(model, "sf_k" + std::to_string(tc.id) + "_a" + std::to_string(a),
               Family::kStrongForcing, std::move(terms), Sense::kLe, 0.0);
      }
    }
  }

  // Outsourced arcs have unbounded capacity, so min(w, u) = w.
  for (const TransformedCommodity& tc : tcs) {
    for (int a : network.outsourced_arcs()) {
      AddRow(model, "of_k" + std::to_string(tc.id) + "_a" + std::to_string(a),
             Family::kOutsourcedForcing, {{lay.X(tc.id, a), 1.0}, {lay.S(tc.id, a), -tc.volume}},
             Sense::kLe, 0.0);
    }
  }

  auto asset_terms = [&] {
    std::vector<Term> terms;
    for (int v = 1; v <= lay.assets; ++v) terms.push_back({lay.D(v), 1.0});
    return terms;
  };
  if (options.vi_gamma) {
    AddRow(model, "vi_gamma", Family::kViGamma, asset_terms(), Sense::kGe, info.gamma);
  }
  if (options.vi_phi) {
    for (int t = 1; t <= t_count; ++t) {
      std::vector<Term> terms;
      for (int v = 1; v <= lay.assets; ++v) {
        for (int a : class_span[t - 1]) terms.push_back({lay.Y(v, a), 1.0});
      }
      for (const TransformedCommodity& tc : tcs) {
        for (int a : outsourced_span[t - 1]) terms.push_back({lay.S(tc.id, a), 1.0});
      }
      AddRow(model, "vi_phi_t" + std::to_string(t), Family::kViPhi, std::move(terms), Sense::kGe,
             info.phi[t - 1]);
    }
  }
  if (options.near_ge) {
    AddRow(model, "near_ge", Family::kNearGe, asset_terms(), Sense::kGe, info.theta);
  }
  if (options.near_le) {
    AddRow(model, "near_le", Family::kNearLe, asset_terms(), Sense::kLe, info.theta);
  }
  if (options.near_outsourced) {
    std::vector<Term> terms = asset_terms();
    for (const TransformedCommodity& tc : tcs) {
      for (int a : network.outsourced_arcs()) terms.push_back({lay.S(tc.id, a), 1.0});
    }
    AddRow(model, "near_os", Family::kNearOutsourced, std::move(terms), Sense::kGe, info.theta);
  }
  if (options.shift_lambda) {
    std::vector<Term> terms;
    for (const TransformedCommodity& tc : tcs) {
      const bool counted = options.shift_literal
                               ? static_cast<int>(tc.kind) != 1
                               : tc.kind != TcKind::kOriginal;
      if (counted) terms.push_back({lay.P(tc.id), 1.0});
    }
    const double basis = options.shift_literal ? static_cast<double>(tcs.size())
                                               : static_cast<double>(instance.commodities.size());
    AddRow(model, "shift_cap", Family::kShiftCap, std::move(terms), Sense::kLe,
           *options.shift_lambda * basis);
  }
  return model;
}

}  // namespace cssnd
