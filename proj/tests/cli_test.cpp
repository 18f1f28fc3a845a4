// Copyright 2026 The boxlab Authors
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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "boxlab/cli.hpp"
#include "boxlab/operators.hpp"

using namespace boxlab;
using cli::dispatch;
using cli::Status;

namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("boxlab_cli_test_" + name)).string();
}

}  // namespace

TEST_CASE("box commands") {
  auto r = dispatch({"box", "chsh", "--pr", "--valuation", "signed", "--json"});
  REQUIRE(r.status == Status::Ok);
  CHECK(r.payload["value"] == 4.0);
  CHECK(Json::parse(r.out)["value"] == 4.0);

  CHECK(dispatch({"box", "chsh", "--pr", "--valuation", "raw"}).payload["value"] == 1.5);
  CHECK(dispatch({"box", "check", "--pr"}).exit_code() == 0);
  auto copy = dispatch({"box", "check", "--copy"});
  CHECK(copy.exit_code() == 2);
  CHECK(copy.payload["violations"].size() == 4);

  const std::string path = temp_path("box.json");
  auto made = dispatch({"--out", path, "box", "new", "--table",
                        "0.5,0,0,0.5,0.5,0,0,0.5,0.5,0,0,0.5,0,0.5,0.5,0"});
  REQUIRE(made.status == Status::Ok);
  CHECK(dispatch({"box", "chsh", "--in", path}).payload["value"] == 4.0);
  CHECK(dispatch({"box", "marginals", "--in", path}).payload["alice"][0]["average"] == 0.5);
  std::remove(path.c_str());

  auto bad_table = dispatch({"box", "new", "--table", "1,0,0,0,1,0,0,0,1,0,0,0,0.5,0,0,0"});
  CHECK(bad_table.exit_code() == 1);
  CHECK(bad_table.err.find("error") != std::string::npos);
}

TEST_CASE("usage errors") {
  CHECK(dispatch({}).exit_code() == 1);
  CHECK(dispatch({"box"}).exit_code() == 1);
  CHECK(dispatch({"box", "chsh", "--pr", "--bogus"}).exit_code() == 1);
  CHECK(dispatch({"box", "chsh", "--pr", "--uniform"}).exit_code() == 1);
  CHECK(dispatch({"box", "chsh", "--in", "/nonexistent/box.json"}).exit_code() == 1);
  CHECK(dispatch({"frobnicate"}).exit_code() == 1);
  auto help = dispatch({"--help"});
  CHECK(help.exit_code() == 0);
  CHECK(help.out.find("box") != std::string::npos);
}

TEST_CASE("op commands") {
  auto landau = dispatch({"op", "landau"});
  CHECK(landau.status == Status::Ok);
  CHECK(landau.payload["identity_residual"].get<double>() <= 1e-10);
  auto ts = dispatch({"op", "tsirelson"});
  CHECK(std::abs(ts.payload["value"].get<double>() - kTsirelsonBound) < 1e-9);
  auto born = dispatch({"op", "born"});
  CHECK(std::abs(born.payload["chsh"].get<double>() - kTsirelsonBound) < 1e-9);

  // Operators given in 0/1 form: the four projectors of the optimal setup.
  QuantumSetup s = optimal_qubit_setup();
  Json file{{"form", "zero_one"},
            {"A0", matrix_to_json(s.alice[0].to_zero_one().matrix())},
            {"A1", matrix_to_json(s.alice[1].to_zero_one().matrix())},
            {"B0", matrix_to_json(s.bob[0].to_zero_one().matrix())},
            {"B1", matrix_to_json(s.bob[1].to_zero_one().matrix())},
            {"state", state_to_json(s.state)}};
  const std::string path = temp_path("ops.json");
  std::ofstream(path) << file.dump();
  CHECK(std::abs(dispatch({"op", "tsirelson", "--file", path}).payload["value"].get<double>() - kTsirelsonBound) <
        1e-9);

  // Spectrum outside [-1, 1] is an input error.
  Json big = file;
  big["form"] = "signed";
  big["A0"] = Json{{"re", {{2, 0}, {0, -2}}}};
  std::ofstream(path) << big.dump();
  CHECK(dispatch({"op", "landau", "--file", path}).exit_code() == 1);
  std::remove(path.c_str());
}

TEST_CASE("opt commands") {
  CHECK(dispatch({"opt", "classical"}).payload["value"] == 2.0);
  auto q = dispatch({"opt", "quantum", "--dim", "2", "--restarts", "5", "--seed", "7"});
  CHECK(std::abs(q.payload["value"].get<double>() - 2.8284271) < 1e-6);
  auto ns = dispatch({"opt", "ns"});
  CHECK(ns.payload["value"] == 4.0);
  CHECK(ns.payload["witness"]["kind"] == "box");
  CHECK(dispatch({"opt", "ns", "--cut", "2"}).payload["value"] == 2.0);
  CHECK(dispatch({"opt", "ns", "--functional", "all-plus"}).payload["value"] == 4.0);
}

TEST_CASE("game commands") {
  const std::string path = temp_path("t.jsonl");
  REQUIRE(dispatch({"game", "play", "--copy", "--rounds", "10000", "--seed", "3", "--out", path}).exit_code() == 0);
  auto a = dispatch({"game", "analyze", "--in", path, "--tests", "signaling,correlators"});
  CHECK(a.exit_code() == 2);
  CHECK(a.payload["signaling"]["reject"] == true);
  CHECK_FALSE(a.payload.contains("independence"));

  REQUIRE(dispatch({"game", "play", "--pr", "--rounds", "20000", "--seed", "3", "--out", path}).exit_code() == 0);
  auto pr = dispatch({"game", "analyze", "--in", path});
  CHECK(pr.payload["correlators"]["chsh"] == 4.0);
  CHECK(dispatch({"game", "analyze", "--in", path, "--tests", "nope"}).exit_code() == 1);
  std::remove(path.c_str());

  // Without --out the transcript goes to stdout.
  auto inline_play = dispatch({"game", "play", "--pr", "--rounds", "3", "--seed", "1"});
  CHECK(std::count(inline_play.out.begin(), inline_play.out.end(), '\n') == 4);
}

TEST_CASE("toy and logic commands") {
  auto report = dispatch({"toy", "report", "--json"});
  CHECK(report.exit_code() == 0);
  CHECK(report.payload["verdict"] == "infeasible");
  CHECK(report.payload["targets"] == Json({1.0, 1.0, 1.0, -1.0}));
  CHECK(dispatch({"toy", "feasibility", "--targets", "0.5,0.5,0.5,0.5"}).payload["verdict"] == "feasible");
  CHECK(dispatch({"toy", "feasibility", "--targets", "1,1,1,-1"}).exit_code() == 2);
  CHECK(dispatch({"toy", "feasibility", "--targets", "1,1,1"}).exit_code() == 1);

  auto demo = dispatch({"logic", "demo", "--pr"});
  CHECK(demo.payload["p_phi"]["value"] == 0.5);
  CHECK(demo.payload["p_phi_prime"]["defined"] == false);
  auto ev = dispatch({"logic", "eval", "--pr", "--expr", "and(A:0=0@1, or(A:1=0@1, A:1=1@1))"});
  CHECK(ev.payload["value"] == 0.5);
  CHECK(dispatch({"logic", "eval", "--pr", "--expr", "and(A:0=0@1"}).exit_code() == 1);
}

TEST_CASE("determinism") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"opt", "quantum", "--seed", "11", "--json"},
           {"game", "play", "--pr", "--rounds", "1000", "--seed", "5"},
           {"op", "born", "--json"}}) {
    CHECK(dispatch(args).out == dispatch(args).out);
  }
}
