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
#include <functional>
#include <utility>
#include <vector>

#include "bosynth/param_unitary.hpp"

namespace bosynth {

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  double residual = 0.0;  // RMS of log10 residuals
  std::size_t used = 0;
};

// Least-squares line through (log t, log err). Needs >= 4 positive samples.
PowerLawFit fit_power_law(const std::vector<double>& ts,
                          const std::vector<double>& errs);
// Drops samples with err below the noise floor before fitting.
PowerLawFit fit_power_law_above(const std::vector<double>& ts,
                                const std::vector<double>& errs,
                                double floor = tolerances().fit_noise_floor);

std::vector<double> log_grid(double lo, double hi, int points);
std::vector<double> linear_grid(double lo, double hi, int points);
std::vector<double> default_fit_grid();

// Spectral-norm error of U against a target unitary over a grid.
std::vector<double> error_sweep(const ParamUnitary& u,
                                const std::function<Matrix(double)>& target,
                                const std::vector<double>& ts);

// Suzuki constraint 4·m·5^{k-1}·τ/r <= 1 with τ = ‖H‖t.
bool trotter_constraint_ok(std::size_t m, int k, double tau, std::size_t r);

struct TimesliceResult {
  std::size_t r = 1;
  double r_theory = 1.0;
  double error = 0.0;
  ParamUnitary sliced;
  std::vector<std::pair<std::size_t, double>> trace;
};

// Smallest r with ‖U(t/r)^r - target(t)‖ <= eps: doubling search followed by
// bisection. r_theory = (C t)^{1+1/(p-1)} / eps^{1/(p-1)}.
TimesliceResult timeslice(const ParamUnitary& u,
                          const std::function<Matrix(double)>& target, double t,
                          double eps, double p, double c_norm,
                          std::size_t r_cap = tolerances().timeslice_r_cap);

}  // namespace bosynth
