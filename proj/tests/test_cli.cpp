// Copyright 2026 The plotgarden Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plotgarden/cli.hpp"
#include "support.hpp"

using namespace pg;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ref(const std::string& name) { return test::fixture_path() + "#" + name; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::filesystem::path scratch(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("plotgarden_cli_" + name);
}

}  // namespace

TEST_CASE("validate") {
  Run r = cli({"validate", test::fixture_path()});
  CHECK(r.code == kExitPass);
  CHECK(cli({"validate", "/nonexistent/file.ws"}).code == kExitInvalid);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli({}).code == kExitInvalid);
  CHECK(cli({"transmogrify"}).code == kExitInvalid);
  CHECK(cli({"lift"}).code == kExitInvalid);
  CHECK(cli({"unit", ref("sierp")}).code == kExitInvalid);
  CHECK(cli({"lift", "no-hash.ws"}).code == kExitInvalid);
  CHECK(cli({"lift", ref("missing")}).code == kExitInvalid);
  CHECK(cli({"fuzz", "--seed", "1", "--count", "1", "--profile", "nodes=1,points=3"}).code == kExitInvalid);
  CHECK(cli({"oracle", "no.such.law", ref("sierp")}).code == kExitInvalid);
  CHECK(cli({"--help"}).code == kExitPass);
}

TEST_CASE("lift prints both tables") {
  Run r = cli({"lift", ref("sierp")});
  REQUIRE(r.code == kExitPass);
  CHECK(r.out.find("box") != std::string::npos);
  CHECK(r.out.find("diamond") != std::string::npos);
  CHECK(r.out.find("all laws pass") != std::string::npos);
}

TEST_CASE("harvest counts flowers") {
  Run r = cli({"harvest", ref("sierp_garden")});
  REQUIRE(r.code == kExitPass);
  nlohmann::json j;
  auto path = scratch("harvest.json");
  REQUIRE(cli({"--report", path.string(), "harvest", ref("sierp_garden")}).code == kExitPass);
  j = nlohmann::json::parse(slurp(path));
  CHECK(j["command"] == "harvest");
  CHECK(j["pass"] == true);
  CHECK(j["observations"]["candidate_flowers"] == 9);
  CHECK(j["observations"]["survivors"].size() == 3);
  std::filesystem::remove(path);
}

TEST_CASE("check-map reports the classification") {
  auto path = scratch("homeo.json");
  REQUIRE(cli({"--report", path.string(), "check-map", ref("homeo")}).code == kExitPass);
  nlohmann::json j = nlohmann::json::parse(slurp(path));
  CHECK(j["observations"]["homeomorphism"] == true);
  CHECK(j["observations"]["minus_condition"] == false);

  REQUIRE(cli({"--report", path.string(), "check-map", ref("tight")}).code == kExitPass);
  j = nlohmann::json::parse(slurp(path));
  CHECK(j["observations"]["up_condition"] == true);
  CHECK(j["observations"]["minus_condition"] == true);
  CHECK(j["observations"]["is_lentile"] == true);
  CHECK(j["observations"]["is_simulation"] == false);
  std::filesystem::remove(path);
}

TEST_CASE("units") {
  CHECK(cli({"unit", "--algebraic", ref("sierp_garden")}).code == kExitPass);
  Run g = cli({"unit", "--geometric", ref("sierp")});
  CHECK(g.code == kExitPass);
  CHECK(cli({"unit", "--algebraic", "--geometric", ref("sierp")}).code == kExitInvalid);
}

TEST_CASE("verify passes on every fixture object") {
  for (const char* name : {"sierp", "sierp_garden", "tight", "homeo", "tight_target", "homeo_source"}) {
    Run r = cli({"verify", ref(name)});
    CHECK_MESSAGE(r.code == kExitPass, name << "\n" << r.out << r.err);
  }
}

TEST_CASE("oracle recomputes and replays") {
  CHECK(cli({"oracle", "oracle.harvest", ref("sierp_garden")}).code == kExitPass);
  CHECK(cli({"oracle", "oracle.lift", ref("sierp")}).code == kExitPass);
  Run replay = cli({"oracle", "plot/lift.mixed", ref("sierp")});
  CHECK(replay.code == kExitPass);
  CHECK(replay.out.find("plot/lift.mixed") != std::string::npos);
}

TEST_CASE("fuzz reports are byte-identical across runs") {
  auto a = scratch("fuzz_a.json");
  auto b = scratch("fuzz_b.json");
  REQUIRE(cli({"--report", a.string(), "fuzz", "--seed", "3", "--count", "8", "--threads", "1"}).code == kExitPass);
  REQUIRE(cli({"fuzz", "--seed", "3", "--count", "8", "--threads", "3", "--report", b.string()}).code == kExitPass);
  CHECK(slurp(a) == slurp(b));
  nlohmann::json j = nlohmann::json::parse(slurp(a));
  CHECK(j["command"] == "fuzz");
  CHECK(j["format_version"] == 1);
  CHECK(j["observations"]["seeds"] == 8);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}
