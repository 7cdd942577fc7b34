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

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

const std::string kBinary = CSSND_BINARY;
const std::string kSample = std::string(CSSND_SOURCE_DIR) + "/data/sample_instance.json";

std::string Temp(const std::string& name) { return testing::TempDir() + "cssnd_cli_" + name; }

int RunCli(const std::string& args) {
  const std::string command = kBinary + " " + args + " >/dev/null 2>/dev/null";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

TEST(CliTest, GenerateSolveCheck) {
  const std::string inst = Temp("gen.json");
  const std::string sol = Temp("gen.sol");
  const std::string schedule = Temp("gen.schedule.json");
  const std::string report = Temp("gen.csv");
  const std::string manifest = Temp("gen.manifest.json");
  ASSERT_EQ(RunCli("gen --size small --k 10 --seed 3 --out " + inst), 0);
  ASSERT_EQ(RunCli("--no-timing --manifest " + manifest + " solve --in " + inst +
                " --config a --out " + schedule + " --report " + report +
                " --assignment " + sol),
            0);
  const auto j = nlohmann::json::parse(Slurp(schedule));
  EXPECT_EQ(j["config"], "A");
  EXPECT_EQ(j["commodities"].size(), 10u);
  const auto m = nlohmann::json::parse(Slurp(manifest));
  EXPECT_EQ(m["command"], "solve");
  EXPECT_EQ(m["wall_seconds"].get<double>(), 0.0);
  EXPECT_EQ(Slurp(report).rfind("instance,config,", 0), 0u);

  const std::string out = Temp("gen.check.txt");
  ASSERT_EQ(std::system((kBinary + " check --in " + inst + " --sol " + sol +
                         " --vi gamma,phi > " + out + " 2>/dev/null")
                            .c_str()),
            0);
  EXPECT_EQ(Slurp(out).rfind("feasible objective=", 0), 0u);
}

TEST(CliTest, SameSeedSameInstance) {
  ASSERT_EQ(RunCli("gen --size medium --k 20 --seed 9 --out " + Temp("a.json")), 0);
  ASSERT_EQ(RunCli("gen --size medium --k 20 --seed 9 --out " + Temp("b.json")), 0);
  EXPECT_EQ(Slurp(Temp("a.json")), Slurp(Temp("b.json")));
}

TEST(CliTest, ExportAndAnalyze) {
  ASSERT_EQ(RunCli("export --in " + kSample + " --format lp --vi gamma --out " + Temp("s.lp")), 0);
  EXPECT_NE(Slurp(Temp("s.lp")).find("vi_gamma:"), std::string::npos);
  ASSERT_EQ(RunCli("export --in " + kSample + " --format mps --out " + Temp("s.mps")), 0);
  EXPECT_FALSE(Slurp(Temp("s.mps.names")).empty());
  ASSERT_EQ(RunCli("analyze --in " + kSample + " --out " + Temp("s.csv")), 0);
  EXPECT_NE(Slurp(Temp("s.csv")).find("phi,4,5,3,4,3,4,2"), std::string::npos);
}

TEST(CliTest, Bench) {
  ASSERT_EQ(RunCli("--no-timing bench --sizes small --count 2 --seed 1 --out " + Temp("bench.csv")),
            0);
  std::istringstream lines(Slurp(Temp("bench.csv")));
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) ++count;
  EXPECT_EQ(count, 3);
}

TEST(CliTest, ErrorsExitNonZero) {
  EXPECT_EQ(RunCli("solve"), 2);
  EXPECT_EQ(RunCli("gen --size huge --k 5 --seed 1 --out " + Temp("x.json")), 2);
  EXPECT_EQ(RunCli("gen --size small --k 50 --seed 1 --out " + Temp("x.json")), 1);
  std::ofstream(Temp("bad.json")) << "{\"name\": 3}";
  EXPECT_EQ(RunCli("solve --in " + Temp("bad.json")), 1);
}

}  // namespace
