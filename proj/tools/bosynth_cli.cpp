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

#include <CLI11.hpp>
#include <iostream>

#include "bosynth/bench.hpp"

namespace {

enum Exit { kOk = 0, kFailure = 1, kUsage = 2, kResource = 3 };

void summarize(const bosynth::RunArtifacts& a) {
  const auto& r = a.report;
  std::cout << r.name << ": " << r.t.size() << " points, gate count per slice "
            << r.per_slice.total << ", within bound " << (r.within_bound ? "yes" : "no");
  if (r.fit)
    std::cout << ", exponent " << r.fit->exponent << " (residual " << r.fit->residual
              << (r.fit_reliable ? ")" : ", unreliable)");
  std::cout << "\n";
  for (const auto& w : r.warnings) std::cout << "  warning: " << w << "\n";
  for (const auto& p : a.written) std::cout << "  wrote " << p.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bosynth: gate synthesis for qubit-oscillator systems"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  unsigned threads = 1;
  std::size_t dim_cap = bosynth::tolerances().dim_cap;
  std::uint64_t seed = 0;
  std::string config_path;
  std::string app_name;

  auto add_run_flags = [&](CLI::App* sub) {
    sub->add_option("config", config_path, "experiment config (JSON)")->required();
    sub->add_option("--out-dir", out_dir, "output directory");
    sub->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--dim-cap", dim_cap, "maximum Hilbert-space dimension");
    sub->add_option("--seed", seed, "override the config seed");
  };
  auto* run_cmd = app.add_subcommand("run", "run one experiment");
  add_run_flags(run_cmd);
  auto* sweep_cmd = app.add_subcommand("sweep", "run every sweep entry of a config");
  add_run_flags(sweep_cmd);
  auto* list_cmd = app.add_subcommand("list", "list applications");
  auto* describe_cmd = app.add_subcommand("describe", "describe one application");
  describe_cmd->add_option("app", app_name, "application name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*list_cmd) {
      std::cout << bosynth::list_applications();
      return kOk;
    }
    if (*describe_cmd) {
      std::cout << bosynth::describe(app_name);
      return kOk;
    }
    bosynth::RunOptions opt;
    opt.out_dir = out_dir;
    opt.threads = threads;
    opt.dim_cap = dim_cap;
    const auto* active = *run_cmd ? run_cmd : sweep_cmd;
    if (active->count("--seed")) opt.seed = seed;
    const auto cfg = bosynth::ExperimentConfig::from_file(config_path);
    if (*run_cmd) {
      summarize(bosynth::run(cfg, opt));
    } else {
      for (const auto& a : bosynth::sweep(cfg, opt)) summarize(a);
    }
    return kOk;
  } catch (const bosynth::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const bosynth::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
