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

#include "bosynth/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/KroneckerProduct>
#include <unsupported/Eigen/MatrixFunctions>
#include <cmath>
#include <string>

namespace bosynth {

const Tolerances& tolerances() {
  static const Tolerances t{};
  return t;
}

namespace {

void require_same_layout(const Operator& a, const Operator& b) {
  if (!(a.layout() == b.layout()))
    throw LayoutError("layout mismatch: " + a.layout().describe() + " vs " +
                      b.layout().describe());
}

void require_finite(const Matrix& m) {
  if (!m.allFinite()) throw std::domain_error("operator has non-finite entries");
}

}  // namespace

Operator::Operator(HilbertLayout layout, Matrix data)
    : layout_(std::move(layout)), data_(std::move(data)) {
  const auto d = layout_.dim();
  if (static_cast<std::size_t>(data_.rows()) != d ||
      static_cast<std::size_t>(data_.cols()) != d)
    throw LayoutError("matrix shape does not match layout " +
                      layout_.describe());
  require_finite(data_);
}

Operator Operator::identity(const HilbertLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dim());
  return Operator(layout, Matrix::Identity(d, d));
}

Operator Operator::zero(const HilbertLayout& layout) {
  const auto d = static_cast<Eigen::Index>(layout.dim());
  return Operator(layout, Matrix::Zero(d, d));
}

Operator Operator::adjoint() const { return Operator(layout_, data_.adjoint()); }

Operator Operator::operator*(const Operator& o) const {
  require_same_layout(*this, o);
  return Operator(layout_, data_ * o.data_);
}

Operator Operator::operator+(const Operator& o) const {
  require_same_layout(*this, o);
  return Operator(layout_, data_ + o.data_);
}

Operator Operator::operator-(const Operator& o) const {
  require_same_layout(*this, o);
  return Operator(layout_, data_ - o.data_);
}

Operator Operator::operator-() const { return Operator(layout_, -data_); }

Operator Operator::operator*(cplx s) const { return Operator(layout_, data_ * s); }

Operator kron(const Operator& a, const Operator& b) {
  Matrix k = Eigen::kroneckerProduct(a.data(), b.data()).eval();
  return Operator(a.layout().concat(b.layout()), std::move(k));
}

Matrix expm(const Matrix& a, std::size_t dim_cap) {
  if (static_cast<std::size_t>(a.rows()) > dim_cap)
    throw ResourceError("expm dimension " + std::to_string(a.rows()) +
                        " exceeds cap " + std::to_string(dim_cap));
  Matrix r = a.exp();
  require_finite(r);
  return r;
}

Operator expm(const Operator& a, std::size_t dim_cap) {
  return Operator(a.layout(), expm(a.data(), dim_cap));
}

Operator expm_hermitian(const Operator& h, double theta) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.data());
  const Vector phase = (kI * theta * es.eigenvalues().cast<cplx>()).array().exp();
  Matrix u = es.eigenvectors() * phase.asDiagonal() * es.eigenvectors().adjoint();
  return Operator(h.layout(), std::move(u));
}

double spectral_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  const auto d = static_cast<std::size_t>(std::max(a.rows(), a.cols()));
  if (d <= tolerances().svd_max_dim) {
    Eigen::BDCSVD<Matrix> svd(a);
    return svd.singularValues().size() ? svd.singularValues()(0) : 0.0;
  }
  // Power iteration on A†A from a fixed, deterministic start vector.
  const Matrix g = a.adjoint() * a;
  Vector v(g.cols());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v(i) = cplx(1.0 + 0.01 * static_cast<double>(i % 7), 0.003 * static_cast<double>(i % 5));
  v.normalize();
  double lambda = 0.0;
  for (int it = 0; it < tolerances().power_iteration_max; ++it) {
    Vector w = g * v;
    const double nw = w.norm();
    if (nw == 0.0) return 0.0;
    w /= nw;
    const double next = std::abs(w.dot(g * w));
    v = w;
    if (std::abs(next - lambda) <= 1e-14 * std::max(1.0, next)) {
      lambda = next;
      break;
    }
    lambda = next;
  }
  return std::sqrt(lambda);
}

double spectral_norm(const Operator& a) { return spectral_norm(a.data()); }

bool is_unitary(const Matrix& a, double tol) {
  const auto d = a.rows();
  return spectral_norm(Matrix(a.adjoint() * a - Matrix::Identity(d, d))) <= tol;
}

bool is_unitary(const Operator& a, double tol) { return is_unitary(a.data(), tol); }

bool is_hermitian(const Operator& a, double tol) {
  return spectral_norm(Matrix(a.data() - a.data().adjoint())) <= tol;
}

Operator commutator(const Operator& a, const Operator& b) {
  require_same_layout(a, b);
  return Operator(a.layout(), a.data() * b.data() - b.data() * a.data());
}

Operator anticommutator(const Operator& a, const Operator& b) {
  require_same_layout(a, b);
  return Operator(a.layout(), a.data() * b.data() + b.data() * a.data());
}

double distance(const Matrix& a, const Matrix& b) {
  return spectral_norm(Matrix(a - b));
}

}  // namespace bosynth
