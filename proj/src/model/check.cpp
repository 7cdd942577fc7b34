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

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "cssnd/model.hpp"

namespace cssnd {

SolutionAssignment ParseAssignment(const std::string& text) {
  SolutionAssignment out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string name;
    std::string value_text;
    std::string extra;
    if (!(fields >> name) || name[0] == '#') continue;
    const std::string where = "assignment line " + std::to_string(line_no);
    if (!(fields >> value_text) || (fields >> extra)) {
      throw DomainError(where + ": expected 'name value'");
    }
    double value = 0.0;
    const char* end = value_text.data() + value_text.size();
    const auto res = std::from_chars(value_text.data(), end, value);
    if (res.ec != std::errc() || res.ptr != end) {
      throw DomainError(where + ": bad number '" + value_text + "'");
    }
    if (!out.emplace(name, value).second) throw DomainError(where + ": duplicate " + name);
  }
  return out;
}

SolutionAssignment ReadAssignmentFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseAssignment(buf.str());
}

std::string FormatAssignment(const SolutionAssignment& assignment) {
  std::string out;
  for (const auto& [name, value] : assignment) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    out += name + " " + std::string(buf.data(), res.ptr) + "\n";
  }
  return out;
}

CheckResult CheckSolution(const Instance& instance, const TimeSpaceNetwork& network,
                          const std::vector<TransformedCommodity>& tcs,
                          const CostTable& costs, const ModelIR& model,
                          const SolutionAssignment& assignment) {
  CheckResult result;
  auto value_of = [&](const std::string& name) {
    const auto it = assignment.find(name);
    return it == assignment.end() ? 0.0 : it->second;
  };

  for (const auto& [name, value] : assignment) {
    if (model.Find(name) < 0) result.violations.push_back({name, "unknown variable", value, 0.0});
  }
  std::vector<double> values(model.variables.size(), 0.0);
  for (size_t i = 0; i < model.variables.size(); ++i) {
    const Variable& var = model.variables[i];
    const double v = value_of(var.name);
    values[i] = v;
    if (v < var.lower - kCheckTolerance) {
      result.violations.push_back({var.name, "below lower bound", v, var.lower});
    }
    if (v > var.upper + kCheckTolerance) {
      result.violations.push_back({var.name, "above upper bound", v, var.upper});
    }
    if (var.kind == VarKind::kBinary && std::fabs(v - std::round(v)) > kCheckTolerance) {
      result.violations.push_back({var.name, "not integral", v, std::round(v)});
    }
  }
  for (const Constraint& row : model.constraints) {
    double lhs = 0.0;
    for (const Term& term : row.terms) lhs += term.coef * values[term.var];
    const bool ok = row.sense == Sense::kLe   ? lhs <= row.rhs + kCheckTolerance
                    : row.sense == Sense::kGe ? lhs >= row.rhs - kCheckTolerance
                                              : std::fabs(lhs - row.rhs) <= kCheckTolerance;
    if (!ok) {
      result.violations.push_back(
          {row.name, std::string(FamilyName(row.family)) + " " + SenseText(row.sense), lhs,
           row.rhs});
    }
  }
  result.feasible = result.violations.empty();

  // Objective from the cost data.
  const CostParams& params = costs.params();
  double objective = 0.0;
  for (int v = 1; v <= instance.fleet_size(); ++v) {
    const double d = value_of(DName(v));
    objective += (v <= instance.owned_assets ? params.fixed_owned : params.fixed_leased) * d;
    if (d >= 0.5) ++(v <= instance.owned_assets ? result.summary.owned_used : result.summary.leased);
  }
  for (const TransformedCommodity& tc : tcs) {
    const double m = costs.Multiplier(tc.kind);
    for (const Arc& arc : network.arcs()) {
      if (arc.type == ArcType::kOutsourced) {
        const double s = value_of(SName(tc.id, arc.id));
        if (s != 0.0) objective += m * costs.Routing(arc.id, tc.id) * s;
      } else {
        const double x = value_of(XName(tc.id, arc.id));
        if (x != 0.0) objective += m * costs.Routing(arc.id, tc.id) * x;
      }
    }
  }
  result.objective = objective;

  for (const OriginalCommodity& oc : instance.commodities) {
    int selected = 0;
    const TransformedCommodity* first = nullptr;
    for (const TransformedCommodity& tc : tcs) {
      if (tc.parent_id != oc.id || value_of(PName(tc.id)) < 0.5) continue;
      if (++selected == 1) first = &tc;
    }
    if (selected == 0) {
      ++result.summary.undelivered;
      continue;
    }
    if (selected > 1) ++result.summary.multi_selected;
    bool outsourced = false;
    for (int a : network.outsourced_arcs()) outsourced = outsourced || value_of(SName(first->id, a)) >= 0.5;
    if (outsourced) {
      ++result.summary.outsourced;
    } else if (first->kind == TcKind::kEarly) {
      ++result.summary.early;
    } else if (first->kind == TcKind::kTardy) {
      ++result.summary.tardy;
    } else {
      ++result.summary.on_time;
    }
  }
  return result;
}

}  // namespace cssnd
