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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "bosynth/product_formulas.hpp"
#include "bosynth/registry.hpp"

namespace bosynth {

struct GridSpec {
  double min = 1e-3;
  double max = 1e-1;
  int points = 12;
  bool log = true;
  // Explicit values override min/max/points. NaN stands for the natural time.
  std::vector<double> values;

  std::vector<double> resolve(std::optional<double> natural_time) const;
};

struct Orders {
  int bch = 1;
  int trotter = 2;
  bool symmetrized = false;
};

struct DynamicsSpec {
  std::size_t steps = 0;
  double t_final = 0.0;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::string application;
  std::string label;
  std::size_t cutoff = 8;
  double omega = 1.0;
  double kappa = 1.0;
  double u = 1.0;
  double j = 1.0;
  std::size_t k = 2;
  double delta = 0.2;
  std::string axis = "z";
  std::string probe = "default";  // or "random", seeded
  Orders orders;
  GridSpec grid;
  std::size_t slices = 1;  // 0 selects automatic time slicing
  double epsilon = 1e-3;
  std::uint64_t seed = 1;
  std::optional<DynamicsSpec> dynamics;
  bool heatmap = false;
  std::vector<nlohmann::json> sweep;
  nlohmann::json raw;

  static ExperimentConfig from_json(const nlohmann::json& j);
  static ExperimentConfig from_file(const std::filesystem::path& path);
  nlohmann::json to_json() const;
  void validate() const;
};

struct RunOptions {
  std::filesystem::path out_dir = ".";
  unsigned threads = 1;
  std::size_t dim_cap = tolerances().dim_cap;
  std::optional<std::uint64_t> seed;
};

struct SynthesisReport {
  nlohmann::json config;
  std::string name;
  std::vector<double> t;
  std::vector<double> op_norm_error;
  std::vector<double> autocorr_error;
  std::vector<std::uint64_t> gate_count;
  std::vector<std::size_t> slices;
  GateCount per_slice;
  std::optional<PowerLawFit> fit;
  bool fit_reliable = false;
  double claimed_order = 0.0;
  double cost_bound = 0.0;
  bool within_bound = true;
  std::uint64_t lower_bound_depth = 0;
  std::optional<std::uint64_t> sequence_length;
  bool ledger_consistent = true;
  double wall_clock = 0.0;
  std::vector<std::string> warnings;

  nlohmann::json to_json() const;
  static SynthesisReport from_json(const nlohmann::json& j);
  bool operator==(const SynthesisReport&) const;
};

struct HeatmapData {
  double t = 0.0;
  Matrix exact;
  Matrix synthesized;
};

struct RunArtifacts {
  SynthesisReport report;
  std::optional<HeatmapData> heatmap;
  std::optional<DynamicsTrace> exact_dynamics;
  std::optional<DynamicsTrace> synth_dynamics;
  std::vector<std::string> population_labels;
  std::vector<std::filesystem::path> written;
};

RunArtifacts run(const ExperimentConfig& cfg, const RunOptions& opt);
// Runs each sweep entry merged over the base config, then a summary CSV.
std::vector<RunArtifacts> sweep(const ExperimentConfig& cfg, const RunOptions& opt);

void emit_csv(const SynthesisReport& r, const std::filesystem::path& path);
void emit_json(const SynthesisReport& r, const std::filesystem::path& path);
void emit_heatmap_csv(const HeatmapData& h, const std::filesystem::path& path);
void emit_dynamics_csv(const DynamicsTrace& exact, const DynamicsTrace& synth,
                       const std::vector<std::string>& population_labels,
                       const std::filesystem::path& path);

// Writes through a temporary sibling and renames into place.
void write_atomic(const std::filesystem::path& path, const std::string& content);
std::string format_double(double v);

}  // namespace bosynth
