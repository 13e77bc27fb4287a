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

#include <Eigen/Dense>
#include <complex>

#include "bosynth/config.hpp"
#include "bosynth/layout.hpp"

namespace bosynth {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

// Dense square matrix tagged with the layout that fixes its index meaning.
class Operator {
 public:
  Operator() = default;
  Operator(HilbertLayout layout, Matrix data);

  static Operator identity(const HilbertLayout& layout);
  static Operator zero(const HilbertLayout& layout);

  const HilbertLayout& layout() const { return layout_; }
  const Matrix& data() const { return data_; }
  std::size_t dim() const { return static_cast<std::size_t>(data_.rows()); }
  cplx operator()(std::size_t r, std::size_t c) const { return data_(r, c); }

  Operator adjoint() const;

  Operator operator*(const Operator& o) const;
  Operator operator+(const Operator& o) const;
  Operator operator-(const Operator& o) const;
  Operator operator-() const;
  Operator operator*(cplx s) const;
  friend Operator operator*(cplx s, const Operator& o) { return o * s; }

 private:
  HilbertLayout layout_;
  Matrix data_;
};

Operator kron(const Operator& a, const Operator& b);

// Scaling-and-squaring Padé exponential. Throws ResourceError above dim_cap.
Operator expm(const Operator& a, std::size_t dim_cap = tolerances().dim_cap);
Matrix expm(const Matrix& a, std::size_t dim_cap = tolerances().dim_cap);

// e^{iθH} for Hermitian H through its eigendecomposition.
Operator expm_hermitian(const Operator& h, double theta);

double spectral_norm(const Matrix& a);
double spectral_norm(const Operator& a);

bool is_unitary(const Operator& a, double tol = tolerances().unitary);
bool is_hermitian(const Operator& a, double tol = tolerances().hermitian);
bool is_unitary(const Matrix& a, double tol = tolerances().unitary);

Operator commutator(const Operator& a, const Operator& b);
Operator anticommutator(const Operator& a, const Operator& b);

// Spectral-norm distance between two matrices of equal shape.
double distance(const Matrix& a, const Matrix& b);

}  // namespace bosynth
