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

#include "bosynth/gate_sequence.hpp"

#include <Eigen/Eigenvalues>
#include <limits>
#include <numeric>

namespace bosynth {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const auto m = std::numeric_limits<std::uint64_t>::max();
  return a > m - b ? m : a + b;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  const auto m = std::numeric_limits<std::uint64_t>::max();
  if (a == 0 || b == 0) return 0;
  return a > m / b ? m : a * b;
}

GateCount& GateCount::operator+=(const GateCount& o) {
  total = saturating_add(total, o.total);
  for (const auto& [k, v] : o.by_kind) by_kind[k] = saturating_add(by_kind[k], v);
  return *this;
}

GateCount GateCount::times(std::uint64_t m) const {
  GateCount r;
  r.total = saturating_mul(total, m);
  for (const auto& [k, v] : by_kind) r.by_kind[k] = saturating_mul(v, m);
  return r;
}

Generator::Generator(std::string kind, std::string label, Operator h,
                     std::vector<std::size_t> support)
    : kind_(std::move(kind)),
      label_(std::move(label)),
      h_(std::move(h)),
      support_(std::move(support)) {
  if (!is_hermitian(h_, 1e-10 * std::max(1.0, spectral_norm(h_))))
    throw std::invalid_argument("generator '" + label_ + "' is not Hermitian");
  decompose();
  if (support_.empty())
    for (std::size_t i = 0; i < h_.layout().size(); ++i) support_.push_back(i);
}

void Generator::decompose() {
  const Matrix herm = 0.5 * (h_.data() + h_.data().adjoint());
  const Eigen::Index d = herm.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(d));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto root = [&](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      auto& p = parent[static_cast<std::size_t>(i)];
      p = parent[static_cast<std::size_t>(p)];
      i = p;
    }
    return i;
  };
  for (Eigen::Index j = 0; j < d; ++j)
    for (Eigen::Index i = j + 1; i < d; ++i)
      if (herm(i, j) != cplx(0.0)) {
        const auto ri = root(i), rj = root(j);
        if (ri != rj) parent[static_cast<std::size_t>(std::max(ri, rj))] = std::min(ri, rj);
      }
  std::vector<std::vector<Eigen::Index>> groups(static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < d; ++i) groups[static_cast<std::size_t>(root(i))].push_back(i);
  blocks_.clear();
  std::size_t largest = 0;
  for (auto& g : groups) {
    largest = std::max(largest, g.size());
    if (g.empty()) continue;
    Block b;
    b.index = std::move(g);
    const auto n = static_cast<Eigen::Index>(b.index.size());
    Matrix sub(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) sub(r, c) = herm(b.index[r], b.index[c]);
    Eigen::SelfAdjointEigenSolver<Matrix> es(sub);
    b.vectors = es.eigenvectors();
    b.values = es.eigenvalues();
    blocks_.push_back(std::move(b));
  }
  local_ = 4 * largest <= static_cast<std::size_t>(d);
}

Matrix Generator::unitary(double theta) const {
  const auto d = static_cast<Eigen::Index>(h_.dim());
  Matrix u = Matrix::Zero(d, d);
  for (const auto& b : blocks_) {
    const Vector phase = (kI * theta * b.values.cast<cplx>()).array().exp();
    const Matrix ub = b.vectors * phase.asDiagonal() * b.vectors.adjoint();
    const auto n = static_cast<Eigen::Index>(b.index.size());
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) u(b.index[r], b.index[c]) = ub(r, c);
  }
  return u;
}

void Generator::right_multiply(Matrix& acc, double theta) const {
  for (const auto& b : blocks_) {
    const Vector phase = (kI * theta * b.values.cast<cplx>()).array().exp();
    if (b.index.size() == 1) {
      acc.col(b.index.front()) *= phase(0);
      continue;
    }
    const Matrix ub = b.vectors * phase.asDiagonal() * b.vectors.adjoint();
    const Matrix cols = acc(Eigen::all, b.index);
    acc(Eigen::all, b.index) = cols * ub;
  }
}

std::shared_ptr<const Generator> Generator::conjugated(
    const Matrix& w, const std::string& tag) const {
  auto g = std::shared_ptr<Generator>(new Generator());
  g->kind_ = kind_;
  g->label_ = tag + "·" + label_ + "·" + tag + "†";
  g->h_ = Operator(h_.layout(), w * h_.data() * w.adjoint());
  g->support_ = support_;
  g->decompose();
  return g;
}

GateSequence::GateSequence(HilbertLayout layout) : layout_(std::move(layout)) {}

void GateSequence::push(GeneratorPtr g, double theta) {
  if (!(g->layout() == layout_)) throw LayoutError("gate layout mismatch");
  calls_.push_back({std::move(g), theta});
}

void GateSequence::append(const GateSequence& other) {
  if (!(other.layout_ == layout_)) throw LayoutError("sequence layout mismatch");
  calls_.insert(calls_.end(), other.calls_.begin(), other.calls_.end());
}

void GateSequence::append_adjoint(const GateSequence& other) {
  if (!(other.layout_ == layout_)) throw LayoutError("sequence layout mismatch");
  for (auto it = other.calls_.rbegin(); it != other.calls_.rend(); ++it)
    calls_.push_back({it->gen, -it->theta});
}

GateSequence GateSequence::adjoint() const {
  GateSequence s(layout_);
  s.append_adjoint(*this);
  return s;
}

GateSequence GateSequence::reversed() const {
  GateSequence s(layout_);
  s.calls_.assign(calls_.rbegin(), calls_.rend());
  return s;
}

GateCount GateSequence::count() const {
  GateCount c;
  c.total = calls_.size();
  for (const auto& call : calls_) ++c.by_kind[call.gen->kind()];
  return c;
}

Operator GateSequence::evaluate() const {
  const auto d = static_cast<Eigen::Index>(layout_.dim());
  Matrix acc = Matrix::Identity(d, d);
  std::size_t i = 0;
  while (i < calls_.size()) {
    const auto& g = calls_[i].gen;
    double theta = calls_[i].theta;
    std::size_t j = i + 1;
    while (j < calls_.size() && calls_[j].gen == g) theta += calls_[j++].theta;
    acc = acc * g->unitary(theta);
    i = j;
  }
  return Operator(layout_, std::move(acc));
}

}  // namespace bosynth
