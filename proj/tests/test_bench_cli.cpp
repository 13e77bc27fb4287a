// Copyright 2026 The bosynth Authors
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


#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "bosynth/bench.hpp"
#include "bosynth/registry.hpp"

using namespace bosynth;
namespace fs = std::filesystem;

namespace {

nlohmann::json small_config() {
  return nlohmann::json::parse(R"({
    "name": "unit",
    "application": "conditional-rotation",
    "params": {"cutoff": 4},
    "orders": {"bch": 1, "trotter": 2},
    "grid": {"min": 0.001, "max": 0.1, "points": 12, "log": true},
    "slices": 1,
    "seed": 3
  })");
}

fs::path scratch_dir(const std::string& tag) {
  const auto d = fs::temp_directory_path() / ("bosynth_test_" + tag);
  fs::remove_all(d);
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::size_t line_count(const std::string& s) {
  std::size_t n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

int cli(const std::string& args) {
  const std::string cmd = std::string(BOSYNTH_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

}  // namespace

TEST_SUITE("bench_cli") {
  TEST_CASE("config parsing") {
    const auto cfg = ExperimentConfig::from_json(small_config());
    CHECK(cfg.cutoff == 4);
    CHECK(cfg.grid.points == 12);
    CHECK(cfg.seed == 3);
    auto bad = small_config();
    bad["grid"]["points"] = 0;
    CHECK_THROWS_AS(ExperimentConfig::from_json(bad), UsageError);
    bad = small_config();
    bad.erase("application");
    CHECK_THROWS_AS(ExperimentConfig::from_json(bad), UsageError);
    bad = small_config();
    bad["orders"]["trotter"] = 3;
    CHECK_THROWS_AS(ExperimentConfig::from_json(bad), UsageError);
    bad = small_config();
    bad["application"] = "no-such-app";
    const auto d = scratch_dir("unknown");
    RunOptions opt;
    opt.out_dir = d;
    CHECK_THROWS_AS(run(ExperimentConfig::from_json(bad), opt), UsageError);
    CHECK_THROWS_AS(ExperimentConfig::from_file(d / "missing.json"), UsageError);
  }

  TEST_CASE("dimension cap") {
    RunOptions opt;
    opt.out_dir = scratch_dir("cap");
    opt.dim_cap = 4;
    CHECK_THROWS_AS(run(ExperimentConfig::from_json(small_config()), opt), ResourceError);
  }

  TEST_CASE("run writes csv and json") {
    RunOptions opt;
    opt.out_dir = scratch_dir("run");
    const auto a = run(ExperimentConfig::from_json(small_config()), opt);
    CHECK(a.report.t.size() == 12);
    CHECK(a.report.within_bound);
    CHECK(a.report.ledger_consistent);
    const auto csv = slurp(opt.out_dir / "unit.csv");
    CHECK(line_count(csv) == 13);
    CHECK(csv.rfind("t,op_norm_error,autocorr_error,gate_count,slices\n", 0) == 0);
    const auto j = nlohmann::json::parse(slurp(opt.out_dir / "unit.json"));
    const auto back = SynthesisReport::from_json(j);
    CHECK(back == a.report);
    CHECK(SynthesisReport::from_json(a.report.to_json()) == a.report);
  }

  TEST_CASE("runs are deterministic") {
    auto j = small_config();
    j["probe"] = "random";
    const auto cfg = ExperimentConfig::from_json(j);
    RunOptions o1, o2;
    o1.out_dir = scratch_dir("det1");
    o2.out_dir = scratch_dir("det2");
    o2.threads = 2;
    run(cfg, o1);
    run(cfg, o2);
    CHECK(slurp(o1.out_dir / "unit.csv") == slurp(o2.out_dir / "unit.csv"));
  }

  TEST_CASE("sweep writes a summary") {
    auto j = small_config();
    j["grid"] = {{"min", 0.01}, {"max", 0.1}, {"points", 2}, {"log", true}};
    j["sweep"] = nlohmann::json::array({{{"label", "a"}}, {{"label", "b"}, {"orders", {{"bch", 2}}}}});
    RunOptions opt;
    opt.out_dir = scratch_dir("sweep");
    const auto runs = sweep(ExperimentConfig::from_json(j), opt);
    CHECK(runs.size() == 2);
    CHECK(line_count(slurp(opt.out_dir / "unit_sweep.csv")) == 3);
    j["sweep"] = nlohmann::json::array({nlohmann::json::object()});
    CHECK_THROWS_AS(sweep(ExperimentConfig::from_json(j), opt), UsageError);
  }

  TEST_CASE("registry") {
    const auto names = list_applications();
    for (const char* n : {"conditional-rotation", "nonlinear-hamiltonian", "state-prep-T",
                          "state-prep-protected", "hom-beam-splitter", "effective-pauli",
                          "anharmonicity", "cross-kerr", "fswap"}) {
      CHECK(names.find(n) != std::string::npos);
    }
    const auto d = describe("state-prep-T");
    CHECK(d.find("(2n+1)") != std::string::npos);
    CHECK_THROWS_AS(describe("no-such-app"), UsageError);
  }

  TEST_CASE("format_double round-trips") {
    for (double v : {0.1, 1.0 / 3.0, 1e-300, 123456.789}) {
      CHECK(std::stod(format_double(v)) == v);
    }
  }

  TEST_CASE("cli exit codes") {
    const auto d = scratch_dir("cli");
    {
      std::ofstream(d / "ok.json") << small_config().dump();
      std::ofstream(d / "broken.json") << "{ not json";
    }
    const std::string out = " --out-dir " + d.string();
    CHECK(cli("list") == 0);
    CHECK(cli("describe state-prep-T") == 0);
    CHECK(cli("describe no-such-app") == 2);
    CHECK(cli("frobnicate") == 2);
    CHECK(cli("run " + (d / "ok.json").string() + out) == 0);
    CHECK(cli("run " + (d / "broken.json").string() + out) == 2);
    CHECK(cli("run " + (d / "missing.json").string() + out) == 2);
    CHECK(cli("run " + (d / "ok.json").string() + out + " --dim-cap 4") == 3);
    CHECK(cli("sweep " + (d / "ok.json").string() + out) == 2);
  }
}
