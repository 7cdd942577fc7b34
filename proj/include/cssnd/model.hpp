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

// Solver-agnostic arc-based MILP: builder, LP/MPS writers and an
// independent solution checker.

#ifndef CSSND_MODEL_HPP_
#define CSSND_MODEL_HPP_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cssnd/analysis.hpp"
#include "cssnd/core.hpp"
#include "cssnd/cost_table.hpp"

namespace cssnd {

inline constexpr double kCheckTolerance = 1e-6;

enum class VarKind { kBinary, kContinuous };
enum class Sense { kLe, kEq, kGe };
const char* SenseText(Sense sense);  // "<=", "=", ">="

struct Variable {
  std::string name;
  VarKind kind = VarKind::kContinuous;
  double lower = 0.0;
  double upper = kInfiniteCapacity;
};

struct Term {
  int var = 0;  // index into ModelIR::variables
  double coef = 0.0;
};

// Row families, used for counting and for grouping violations.
enum class Family {
  kTransit,            // beta_k{tc}_t{t}: no flow outside the TC window
  kAssetPeriod,        // asset_v{v}_t{t}: one arc per asset and period
  kDesignBalance,      // dbal_v{v}_n{node}
  kServiceOnce,        // svc_a{arc}: at most one asset per service arc
  kCover,              // cover_o{oc}: some TC of every commodity is served
  kFlow,               // flow_k{tc}_n{node}
  kWeakForcing,        // wf_a{arc}
  kStrongForcing,      // sf_k{tc}_a{arc}
  kOutsourcedForcing,  // of_k{tc}_a{arc}
  kViGamma,            // vi_gamma
  kViPhi,              // vi_phi_t{t}
  kNearGe,             // near_ge: sum of assets >= theta
  kNearLe,             // near_le: sum of assets <= theta
  kNearOutsourced,     // near_os: assets plus outsourced selections >= theta
  kShiftCap,           // shift_cap
};
const char* FamilyName(Family family);

struct Constraint {
  std::string name;
  Family family = Family::kCover;
  std::vector<Term> terms;
  Sense sense = Sense::kLe;
  double rhs = 0.0;
};

struct ModelIR {
  std::vector<Variable> variables;
  std::vector<Constraint> constraints;
  std::vector<Term> objective;
  std::vector<std::string> warnings;

  int AddVariable(std::string name, VarKind kind, double lower, double upper);
  // -1 when absent.
  int Find(const std::string& name) const;
  int CountFamily(Family family) const;

 private:
  std::unordered_map<std::string, int> index_;
};

struct ModelOptions {
  bool vi_gamma = false;
  bool vi_phi = false;
  bool near_ge = false;
  bool near_le = false;
  bool near_outsourced = false;
  bool strong_forcing = false;
  // Cap on selected shifted TCs; absent means no cap.
  std::optional<double> shift_lambda;
  // Count q != 1 over |K u L| instead of early/tardy over |K|.
  bool shift_literal = false;
};

// Weak forcing on holding arcs uses the total TC volume as the big-M for
// their unbounded capacity. The window analysis is computed when `analysis`
// is null.
ModelIR BuildMip(const Instance& instance, const TimeSpaceNetwork& network,
                 const std::vector<TransformedCommodity>& tcs, const CostTable& costs,
                 const AnalysisSummary* analysis, const ModelOptions& options);

// Period membership as used by the asset-per-period rows: regular arcs by
// t_i <= t < t_j, circular arcs through the +|T| shifted spans of the T2
// and T3 classes.
bool SpansByPeriodClass(const TimeSpaceNetwork& network, const Arc& arc, int period);

std::string YName(int asset, int arc);
std::string XName(int tc, int arc);
std::string SName(int tc, int arc);
std::string PName(int tc);
std::string DName(int asset);

struct ExportResult {
  std::string text;
  // "short long" lines; empty unless names had to be shortened.
  std::string sidecar;
};

ExportResult ExportLp(const ModelIR& model);
// Fixed-field MPS. Names are always mapped to 8-character codes.
ExportResult ExportMps(const ModelIR& model);

using SolutionAssignment = std::map<std::string, double>;

// Parses "name value" lines; blank lines and lines starting with '#' are
// skipped. Throws DomainError on malformed lines.
SolutionAssignment ParseAssignment(const std::string& text);
SolutionAssignment ReadAssignmentFile(const std::string& path);
std::string FormatAssignment(const SolutionAssignment& assignment);

struct Violation {
  std::string row;
  std::string message;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct CheckSummary {
  int owned_used = 0;
  int leased = 0;
  int on_time = 0;
  int early = 0;
  int tardy = 0;
  int outsourced = 0;
  // Commodities with more than one selected TC, and with none.
  int multi_selected = 0;
  int undelivered = 0;
};

struct CheckResult {
  bool feasible = false;
  std::vector<Violation> violations;
  double objective = 0.0;
  CheckSummary summary;
};

// Evaluates every row of `model` plus bounds and integrality at tolerance
// 1e-6. The objective is recomputed from the instance cost data, not from
// the model's objective row.
CheckResult CheckSolution(const Instance& instance, const TimeSpaceNetwork& network,
                          const std::vector<TransformedCommodity>& tcs,
                          const CostTable& costs, const ModelIR& model,
                          const SolutionAssignment& assignment);

}  // namespace cssnd

#endif  // CSSND_MODEL_HPP_
