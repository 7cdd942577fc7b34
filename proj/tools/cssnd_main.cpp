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

// cssnd: generate, analyze, export, solve, check and benchmark instances.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cssnd/analysis.hpp"
#include "cssnd/dmam.hpp"
#include "cssnd/instance_io.hpp"
#include "cssnd/instgen.hpp"
#include "cssnd/model.hpp"
#include "cssnd/random.hpp"

namespace {

constexpr const char* kVersion = "cssnd 1.0.0";

struct Manifest {
  std::string command;
  std::string instance_hash;
  std::uint64_t seed = 0;
  nlohmann::json flags = nlohmann::json::array();
  nlohmann::json phases = nlohmann::json::array();
  double wall_seconds = 0.0;
};

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw cssnd::DomainError("cannot write " + path);
  out << text;
}

// Writes to `path`, or to standard output when it is empty.
void Emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    WriteText(path, text);
  }
}

std::string Number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.3f", value);
  return buffer;
}

void AddPhases(Manifest& manifest, const cssnd::Solution& solution, bool timing) {
  for (const cssnd::PhaseRecord& record : solution.phase_log) {
    manifest.phases.push_back({{"config", cssnd::SearchConfigName(solution.config)},
                               {"phase", record.phase},
                               {"seconds", timing ? record.seconds : 0.0}});
  }
}

cssnd::ModelOptions ParseModelOptions(const std::vector<std::string>& vi,
                                      const std::vector<int>& nearopt, double lambda,
                                      bool literal, bool strong) {
  cssnd::ModelOptions options;
  for (const std::string& name : vi) {
    if (name == "gamma") {
      options.vi_gamma = true;
    } else if (name == "phi") {
      options.vi_phi = true;
    } else {
      throw CLI::ValidationError("--vi", "unknown inequality " + name);
    }
  }
  for (int code : nearopt) {
    if (code == 21) {
      options.near_ge = true;
    } else if (code == 22) {
      options.near_le = true;
    } else if (code == 23) {
      options.near_outsourced = true;
    } else {
      throw CLI::ValidationError("--nearopt", "expected 21, 22 or 23");
    }
  }
  if (lambda >= 0.0) options.shift_lambda = lambda;
  options.shift_literal = literal;
  options.strong_forcing = strong;
  return options;
}

std::string AnalysisCsv(const cssnd::Instance& instance) {
  const cssnd::AnalysisSummary summary = cssnd::ComputeRequirements(instance);
  const int periods = summary.period_count;
  std::ostringstream out;
  out << "label";
  for (int t = 1; t <= periods; ++t) out << ",t" << t;
  out << ",count\n";
  for (std::size_t k = 0; k < summary.occupancy.size(); ++k) {
    out << "k" << instance.commodities[k].id;
    int count = 0;
    for (int t = 0; t < periods; ++t) {
      out << ',' << (summary.occupancy[k][t] ? 1 : 0);
      count += summary.occupancy[k][t] ? 1 : 0;
    }
    out << ',' << count << '\n';
  }
  out << "phi";
  for (int value : summary.phi) out << ',' << value;
  out << ',' << summary.theta << '\n';
  out << "gamma";
  for (int t = 0; t < periods; ++t) out << ',';
  out << ',' << summary.gamma << '\n';
  out << "theta";
  for (int t = 0; t < periods; ++t) out << ',';
  out << ',' << summary.theta << '\n';
  return out.str();
}

std::string BenchCsv(const std::vector<std::string>& sizes, int count, std::uint64_t seed,
                     bool timing, Manifest& manifest) {
  std::ostringstream out;
  out << "id,instance,n_physical,k,v1,v2,distance_total,distance_index,obj_P,obj_R,obj_C,"
         "obj_A,best_bound,gap_P,gap_R,gap_C,gap_A,cpu_P,cpu_R,cpu_C,cpu_A\n";
  const std::uint64_t suite = cssnd::DeriveSeed(seed, cssnd::Stream::kBenchSuite);
  int id = 0;
  for (const std::string& size_text : sizes) {
    const auto label = cssnd::ParseSizeLabel(size_text);
    if (!label) throw CLI::ValidationError("--sizes", "unknown size " + size_text);
    const cssnd::SizeClass size = cssnd::SizeClassFor(*label);
    for (int i = 0; i < count; ++i) {
      ++id;
      const int k = size.k_options[i % size.k_options.size()];
      const cssnd::Instance instance =
          cssnd::GenerateInstance(size, k, cssnd::DeriveSeed(suite, id));
      const cssnd::Problem problem(instance);
      const int total = instance.physical.TotalDistance();
      const auto index = cssnd::ClassifyDistance(total, size.n_physical);
      std::string objectives;
      std::string cpus;
      for (cssnd::SearchConfig config :
           {cssnd::SearchConfig::kR, cssnd::SearchConfig::kC, cssnd::SearchConfig::kA}) {
        const auto start = std::chrono::steady_clock::now();
        try {
          const cssnd::Solution solution = cssnd::RunDmam(problem, config);
          objectives += ',' + Number(solution.cost.Total());
        } catch (const cssnd::DomainError&) {
          objectives += ",NA";
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        cpus += ',' + Number(timing ? seconds : 0.0);
      }
      out << id << ',' << instance.name << ',' << size.n_physical << ',' << k << ','
          << instance.owned_assets << ',' << instance.leasable_assets << ',' << total << ','
          << cssnd::DistanceCategoryCode(index.category) << ",NA" << objectives
          << ",NA,NA,NA,NA,NA,NA" << cpus << '\n';
      manifest.phases.push_back({{"instance", instance.name},
                                 {"hash", cssnd::InstanceHash(instance)}});
    }
  }
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Capacity-scaling service network design toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  std::string manifest_path;
  bool no_timing = false;
  app.add_option("--manifest", manifest_path, "Write the run manifest here instead of stderr");
  app.add_flag("--no-timing", no_timing, "Report zero for all timings");

  std::string in_path;
  std::string out_path;

  CLI::App* gen = app.add_subcommand("gen", "Generate a random instance");
  std::string size_text;
  int k = 0;
  std::uint64_t seed = 0;
  gen->add_option("--size", size_text, "small|medium|large|xlarge")->required();
  gen->add_option("--k", k, "Number of commodities")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Master seed")->required();
  gen->add_option("--out", out_path, "Instance file")->required();

  CLI::App* analyze = app.add_subcommand("analyze", "Occupancy and asset requirement table");
  analyze->add_option("--in", in_path, "Instance file")->required()->check(CLI::ExistingFile);
  analyze->add_option("--out", out_path, "CSV report (default stdout)");

  CLI::App* exp = app.add_subcommand("export", "Write the MILP as LP or MPS");
  std::string format = "lp";
  std::vector<std::string> vi;
  std::vector<int> nearopt;
  double lambda = -1.0;
  bool literal = false;
  bool strong = false;
  exp->add_option("--in", in_path, "Instance file")->required()->check(CLI::ExistingFile);
  exp->add_option("--format", format, "lp|mps")->check(CLI::IsMember({"lp", "mps"}));
  exp->add_option("--vi", vi, "Valid inequalities: gamma,phi")->delimiter(',');
  exp->add_option("--nearopt", nearopt, "Near-optimal rows: 21,22,23")->delimiter(',');
  exp->add_option("--lambda", lambda, "Cap on the share of shifted deliveries")
      ->check(CLI::Range(0.0, 1.0));
  exp->add_flag("--literal-shift", literal, "Count every non-early TC in the shift cap");
  exp->add_flag("--strong-forcing", strong, "Add per-commodity forcing rows");
  exp->add_option("--out", out_path, "Model file (default stdout)");

  CLI::App* solve = app.add_subcommand("solve", "Run the heuristic");
  std::string config_text = "a";
  std::string report_path;
  std::string assignment_path;
  solve->add_option("--in", in_path, "Instance file")->required()->check(CLI::ExistingFile);
  solve->add_option("--config", config_text, "r|c|a")
      ->check(CLI::IsMember({"r", "c", "a", "R", "C", "A"}));
  solve->add_option("--out", out_path, "Schedule JSON (default stdout)");
  solve->add_option("--report", report_path, "Report CSV");
  solve->add_option("--assignment", assignment_path, "Variable assignment file");

  CLI::App* check = app.add_subcommand("check", "Check a solution against the MILP");
  std::string sol_path;
  check->add_option("--in", in_path, "Instance file")->required()->check(CLI::ExistingFile);
  check->add_option("--sol", sol_path, "Solution file")->required()->check(CLI::ExistingFile);
  check->add_option("--vi", vi, "Valid inequalities: gamma,phi")->delimiter(',');
  check->add_option("--nearopt", nearopt, "Near-optimal rows: 21,22,23")->delimiter(',');
  check->add_option("--lambda", lambda, "Cap on the share of shifted deliveries")
      ->check(CLI::Range(0.0, 1.0));
  check->add_flag("--literal-shift", literal, "Count every non-early TC in the shift cap");
  check->add_flag("--strong-forcing", strong, "Add per-commodity forcing rows");

  CLI::App* bench = app.add_subcommand("bench", "Run all configurations over a generated suite");
  std::vector<std::string> sizes = {"small", "medium", "large"};
  int count = 5;
  bench->add_option("--sizes", sizes, "Size classes")->delimiter(',');
  bench->add_option("--count", count, "Instances per size class")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "Master seed");
  bench->add_option("--out", out_path, "CSV (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool timing = !no_timing;
  const auto start = std::chrono::steady_clock::now();
  Manifest manifest;
  for (int i = 1; i < argc; ++i) manifest.flags.push_back(argv[i]);
  try {
    if (gen->parsed()) {
      manifest.command = "gen";
      const auto label = cssnd::ParseSizeLabel(size_text);
      if (!label) throw CLI::ValidationError("--size", "unknown size " + size_text);
      const cssnd::Instance instance =
          cssnd::GenerateInstance(cssnd::SizeClassFor(*label), k, seed);
      cssnd::WriteInstanceFile(instance, out_path);
      manifest.seed = seed;
      manifest.instance_hash = cssnd::InstanceHash(instance);
    } else if (analyze->parsed()) {
      manifest.command = "analyze";
      const cssnd::Instance instance = cssnd::ReadInstanceFile(in_path);
      manifest.instance_hash = cssnd::InstanceHash(instance);
      manifest.seed = instance.seed;
      Emit(out_path, AnalysisCsv(instance));
    } else if (exp->parsed()) {
      manifest.command = "export";
      const cssnd::Problem problem(cssnd::ReadInstanceFile(in_path));
      manifest.instance_hash = cssnd::InstanceHash(problem.instance);
      manifest.seed = problem.instance.seed;
      const cssnd::ModelOptions options = ParseModelOptions(vi, nearopt, lambda, literal, strong);
      const cssnd::ModelIR model = cssnd::BuildMip(problem.instance, problem.network, problem.tcs,
                                                   problem.costs, nullptr, options);
      for (const std::string& warning : model.warnings) std::cerr << "warning: " << warning << '\n';
      const cssnd::ExportResult result =
          format == "mps" ? cssnd::ExportMps(model) : cssnd::ExportLp(model);
      Emit(out_path, result.text);
      if (!result.sidecar.empty()) {
        if (out_path.empty()) throw cssnd::DomainError("renamed model needs --out for the names");
        WriteText(out_path + ".names", result.sidecar);
      }
    } else if (solve->parsed()) {
      manifest.command = "solve";
      const cssnd::Problem problem(cssnd::ReadInstanceFile(in_path));
      manifest.instance_hash = cssnd::InstanceHash(problem.instance);
      manifest.seed = problem.instance.seed;
      const cssnd::SearchConfig config = *cssnd::ParseSearchConfig(config_text);
      const cssnd::Solution solution = cssnd::RunDmam(problem, config);
      if (std::string error = cssnd::ValidateSolution(problem, solution); !error.empty()) {
        throw cssnd::DomainError("internal schedule check failed: " + error);
      }
      Emit(out_path, cssnd::ScheduleToJson(problem, solution, timing).dump(2) + "\n");
      const std::string report = cssnd::ReportCsvHeader() + "\n" +
                                 cssnd::ReportCsvRow(problem, solution, timing) + "\n";
      if (report_path.empty()) {
        std::cerr << report;
      } else {
        WriteText(report_path, report);
      }
      if (!assignment_path.empty()) {
        WriteText(assignment_path,
                  cssnd::FormatAssignment(cssnd::ToAssignment(problem, solution)));
      }
      AddPhases(manifest, solution, timing);
    } else if (check->parsed()) {
      manifest.command = "check";
      const cssnd::Problem problem(cssnd::ReadInstanceFile(in_path));
      manifest.instance_hash = cssnd::InstanceHash(problem.instance);
      manifest.seed = problem.instance.seed;
      const cssnd::ModelOptions options = ParseModelOptions(vi, nearopt, lambda, literal, strong);
      const cssnd::ModelIR model = cssnd::BuildMip(problem.instance, problem.network, problem.tcs,
                                                   problem.costs, nullptr, options);
      const cssnd::CheckResult result =
          cssnd::CheckSolution(problem.instance, problem.network, problem.tcs, problem.costs,
                               model, cssnd::ReadAssignmentFile(sol_path));
      std::cout << (result.feasible ? "feasible" : "infeasible")
                << " objective=" << Number(result.objective)
                << " violations=" << result.violations.size() << '\n';
      const cssnd::CheckSummary& s = result.summary;
      std::cout << "owned=" << s.owned_used << " leased=" << s.leased << " on_time=" << s.on_time
                << " early=" << s.early << " tardy=" << s.tardy << " outsourced=" << s.outsourced
                << '\n';
      for (const cssnd::Violation& v : result.violations) {
        std::cout << v.row << ": " << v.message << '\n';
      }
    } else if (bench->parsed()) {
      manifest.command = "bench";
      manifest.seed = seed;
      Emit(out_path, BenchCsv(sizes, count, seed, timing, manifest));
    }
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }

  manifest.wall_seconds =
      timing ? std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()
             : 0.0;
  const nlohmann::json doc = {{"command", manifest.command},
                              {"instance_hash", manifest.instance_hash},
                              {"seed", manifest.seed},
                              {"flags", manifest.flags},
                              {"version", kVersion},
                              {"phases", manifest.phases},
                              {"wall_seconds", manifest.wall_seconds}};
  try {
    if (manifest_path.empty()) {
      std::cerr << doc.dump() << '\n';
    } else {
      WriteText(manifest_path, doc.dump(2) + "\n");
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
