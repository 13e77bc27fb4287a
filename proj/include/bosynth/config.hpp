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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bosynth {

// Central tolerance and resource record. Acceptance tests read these values.
struct Tolerances {
  double unitary = 1e-10;
  double unitary_composite = 1e-9;
  double hermitian = 1e-12;
  double expm_relative = 1e-12;
  double norm_relative = 1e-10;
  double fit_noise_floor = 1e-12;
  double fit_residual_cap = 0.1;  // RMS of log10 residuals
  double commutation_relative = 1e-8;
  std::size_t svd_max_dim = 512;
  std::size_t dim_cap = 4096;
  int power_iteration_max = 2000;
  double fit_t_min = 1e-3;
  double fit_t_max = 1e-1;
  int fit_points = 12;
  std::size_t timeslice_r_cap = 1u << 20;
};

const Tolerances& tolerances();

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LayoutError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bosynth
