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

#include "bosynth/product_formulas.hpp"

#include <cmath>
#include <stdexcept>

namespace bosynth {

PowerLawFit fit_power_law(const std::vector<double>& ts,
                          const std::vector<double>& errs) {
  if (ts.size() != errs.size()) throw std::invalid_argument("fit: size mismatch");
  if (ts.size() < 4) throw std::invalid_argument("fit: need at least 4 samples");
  const auto n = static_cast<double>(ts.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::vector<double> x(ts.size()), y(ts.size());
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (!(ts[i] > 0) || !(errs[i] > 0))
      throw std::invalid_argument("fit: samples must be positive");
    x[i] = std::log10(ts[i]);
    y[i] = std::log10(errs[i]);
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double den = n * sxx - sx * sx;
  if (den == 0.0) throw std::invalid_argument("fit: degenerate abscissae");
  PowerLawFit f;
  f.exponent = (n * sxy - sx * sy) / den;
  const double icpt = (sy - f.exponent * sx) / n;
  f.prefactor = std::pow(10.0, icpt);
  double ss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (icpt + f.exponent * x[i]);
    ss += r * r;
  }
  f.residual = std::sqrt(ss / n);
  f.used = ts.size();
  return f;
}

PowerLawFit fit_power_law_above(const std::vector<double>& ts,
                                const std::vector<double>& errs, double floor) {
  std::vector<double> t2, e2;
  for (std::size_t i = 0; i < ts.size() && i < errs.size(); ++i)
    if (errs[i] >= floor) {
      t2.push_back(ts[i]);
      e2.push_back(errs[i]);
    }
  return fit_power_law(t2, e2);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 1 || !(lo > 0) || !(hi > lo))
    throw UsageError("invalid logarithmic grid");
  std::vector<double> g;
  if (points == 1) return {lo};
  const double a = std::log10(lo), b = std::log10(hi);
  for (int i = 0; i < points; ++i)
    g.push_back(std::pow(10.0, a + (b - a) * i / (points - 1)));
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  if (points < 1 || !(hi > lo)) throw UsageError("invalid linear grid");
  std::vector<double> g;
  if (points == 1) return {lo};
  for (int i = 0; i < points; ++i) g.push_back(lo + (hi - lo) * i / (points - 1));
  return g;
}

std::vector<double> default_fit_grid() {
  const auto& tol = tolerances();
  return log_grid(tol.fit_t_min, tol.fit_t_max, tol.fit_points);
}

std::vector<double> error_sweep(const ParamUnitary& u,
                                const std::function<Matrix(double)>& target,
                                const std::vector<double>& ts) {
  std::vector<double> e;
  e.reserve(ts.size());
  for (double t : ts) e.push_back(distance(u.matrix(t), target(t)));
  return e;
}

bool trotter_constraint_ok(std::size_t m, int k, double tau, std::size_t r) {
  return 4.0 * static_cast<double>(m) * std::pow(5.0, k - 1) * tau /
             static_cast<double>(r) <=
         1.0;
}

TimesliceResult timeslice(const ParamUnitary& u,
                          const std::function<Matrix(double)>& target, double t,
                          double eps, double p, double c_norm, std::size_t r_cap) {
  if (!(p > 1)) throw std::invalid_argument("timeslice needs order p > 1");
  if (!(eps > 0)) throw std::invalid_argument("timeslice needs eps > 0");
  const Matrix goal = target(t);
  TimesliceResult res;
  res.r_theory = std::pow(c_norm * std::abs(t), 1.0 + 1.0 / (p - 1.0)) /
                 std::pow(eps, 1.0 / (p - 1.0));
  auto err_at = [&](std::size_t r) {
    const double e = distance(repeat(u, r).matrix(t), goal);
    res.trace.emplace_back(r, e);
    return e;
  };
  std::size_t hi = 1;
  double e_hi = err_at(hi);
  while (e_hi > eps) {
    if (hi >= r_cap)
      throw ResourceError("timeslice: r exceeds cap " + std::to_string(r_cap));
    hi = std::min(hi * 2, r_cap);
    e_hi = err_at(hi);
  }
  std::size_t lo = hi / 2;  // fails (or zero)
  while (lo >= 1 && hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const double e = err_at(mid);
    if (e <= eps) {
      hi = mid;
      e_hi = e;
    } else {
      lo = mid;
    }
  }
  res.r = hi;
  res.error = e_hi;
  res.sliced = repeat(u, hi);
  return res;
}

}  // namespace bosynth
