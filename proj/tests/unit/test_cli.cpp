// Copyright 2026 The profitshare Authors
//
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "profitshare/cli.hpp"
#include "profitshare/serialization.hpp"

using namespace profitshare;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "profitshare");
  std::ostringstream out, err;
  int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string source(const char* relative) {
  return (std::filesystem::path(PROFITSHARE_SOURCE_DIR) / relative).string();
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

std::vector<Json> json_lines(const std::string& text) {
  std::vector<Json> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(Json::parse(line));
  return lines;
}

}  // namespace

TEST_CASE("prices command") {
  Result r = cli({"prices", source("data/prop6_n3.json"), "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["command"][1] == "prices");
  CHECK(j["report"]["poa"] == "3/2");
  CHECK(j["report"]["pos"] == "1");
  CHECK_FALSE(j.contains("banner"));
  Result text = cli({"prices", source("data/prop6_n3.json")});
  CHECK(text.code == 0);
  CHECK(text.out.find("3/2") != std::string::npos);
}

TEST_CASE("dynamics command on the all-unaffiliated Labor Union file") {
  Result r = cli({"dynamics", source("data/lu_unaffiliated.json"), "--selector", "roundrobin",
                  "--json"});
  REQUIRE(r.code == 0);
  std::vector<Json> lines = json_lines(r.out);
  REQUIRE(lines.size() == 5);
  for (int k = 0; k < 4; ++k) CHECK(lines[k]["step"] == k + 1);
  CHECK(lines.back()["report"]["nash_equilibrium"] == true);
  CHECK(lines.back()["report"]["steps"] == 4);
}

TEST_CASE("dynamics trace file in CSV") {
  std::filesystem::path out = std::filesystem::temp_directory_path() / "profitshare_trace.csv";
  Result r = cli({"dynamics", source("data/prop6_n3.json"), "--out", out.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(out);
  std::string header, row, extra;
  std::getline(in, header);
  std::getline(in, row);
  CHECK(row.rfind("1,1,1,2,", 0) == 0);
  CHECK_FALSE(std::getline(in, extra));
  std::filesystem::remove(out);
}

TEST_CASE("validate command exit codes") {
  CHECK(cli({"validate", source("data/prop6_n3.json")}).code == kExitOk);
  auto squares = temp_file("profitshare_squares.json",
                           R"({"n":2,"m":1,"scheme":"shapley","valuations":[{"kind":"table","n":2,"values":["0","1","1","4"]}]})");
  Result bad = cli({"validate", squares.string(), "--json"});
  CHECK(bad.code == kExitVerification);
  Json j = Json::parse(bad.out);
  CHECK(j["report"].dump().find("submodular") != std::string::npos);
  Result skipped = cli({"prices", squares.string(), "--skip-validate", "--json"});
  CHECK(skipped.code == kExitOk);
  CHECK(Json::parse(skipped.out)["banner"] == "valuation-unverified");
  std::filesystem::remove(squares);
}

TEST_CASE("usage and parse errors") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"prices"}).code == kExitUsage);
  CHECK(cli({"prices", "/nonexistent/game.json"}).code == kExitUsage);
  auto broken = temp_file("profitshare_broken.json", "{\"n\": 2,\n");
  Result r = cli({"prices", broken.string()});
  CHECK(r.code == kExitUsage);
  CHECK(r.err.find("2:") != std::string::npos);
  std::filesystem::remove(broken);
  CHECK(cli({"dynamics", source("data/prop6_n3.json"), "--selector", "fastest"}).code ==
        kExitUsage);
}

TEST_CASE("bounds command") {
  Result r = cli({"bounds", "--n", "10", "--beta", "2", "--epsilon", "1/10", "--opt", "1",
                  "--json"});
  REQUIRE(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["report"]["nash"]["steps"] == 12);
  CHECK(j["report"]["nash"]["guaranteed_value"] == "9/20");
  CHECK(cli({"bounds", "--n", "10", "--beta", "2", "--epsilon", "1", "--opt", "1"}).code ==
        kExitUsage);
}

TEST_CASE("equilibria, niceness and graph-check commands") {
  Result eq = cli({"equilibria", source("data/prop6_n3.json"), "--strong", "--json"});
  CHECK(eq.code == 0);
  Result nice = cli({"niceness", source("data/lu_unaffiliated.json"), "--json"});
  CHECK(nice.code == 0);
  CHECK(Json::parse(nice.out)["report"]["perfect_holds"] == true);
  Result graph = cli({"graph-check", source("data/triangle_graph.json"), "--json"});
  CHECK(graph.code == 0);
  CHECK(graph.out.find("labor_union") != std::string::npos);
}

TEST_CASE("global flags may follow the subcommand or precede it") {
  Result after = cli({"prices", source("data/prop6_n3.json"), "--threads", "2", "--json"});
  Result before = cli({"--json", "--threads", "2", "prices", source("data/prop6_n3.json")});
  REQUIRE(after.code == 0);
  REQUIRE(before.code == 0);
  CHECK(Json::parse(after.out)["report"] == Json::parse(before.out)["report"]);
}

TEST_CASE("reproduce runs a single case") {
  Result r = cli({"reproduce", "--case", "prop6"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
  CHECK(cli({"reproduce", "--case", "nope"}).code == kExitUsage);
}
