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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bosynth/applications.hpp"

namespace bosynth {

struct ExperimentConfig;

// What the runner needs for one application: the synthesis, a probe state
// for autocorrelation, and optional dynamics observables.
struct Case {
  Synthesis synthesis;
  Vector psi0;
  Matrix leakage_projector;
  std::vector<std::pair<std::string, Matrix>> populations;
  // Characteristic evaluation time, e.g. the state-preparation time.
  std::optional<double> natural_time;
};

struct ParamDoc {
  std::string key;
  std::string meaning;
  std::string fallback;
};

struct AppInfo {
  std::string name;
  std::string summary;
  std::string target;
  std::vector<ParamDoc> params;
  std::string notes;
  std::function<Case(const ExperimentConfig&)> build;
};

const std::vector<AppInfo>& applications();
// Throws UsageError for unknown names.
const AppInfo& find_application(const std::string& name);

std::string list_applications();
std::string describe(const std::string& name);

}  // namespace bosynth
