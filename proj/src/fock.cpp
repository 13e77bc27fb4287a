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

#include "bosynth/fock.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bosynth {

Axis parse_axis(const std::string& s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  throw UsageError("unknown axis '" + s + "'");
}

char axis_name(Axis a) {
  switch (a) {
    case Axis::X: return 'x';
    case Axis::Y: return 'y';
    case Axis::Z: return 'z';
  }
  return '?';
}

Operator annihilation(std::size_t cutoff) {
  const auto layout = HilbertLayout::mode(cutoff);
  const auto d = static_cast<Eigen::Index>(cutoff + 1);
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index n = 0; n + 1 < d; ++n)
    m(n, n + 1) = std::sqrt(static_cast<double>(n + 1));
  return Operator(layout, std::move(m));
}

Operator creation(std::size_t cutoff) { return annihilation(cutoff).adjoint(); }

Operator number(std::size_t cutoff) {
  const auto d = static_cast<Eigen::Index>(cutoff + 1);
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index n = 0; n < d; ++n) m(n, n) = static_cast<double>(n);
  return Operator(HilbertLayout::mode(cutoff), std::move(m));
}

Operator position(std::size_t cutoff) {
  const auto a = annihilation(cutoff);
  return (a + a.adjoint()) * cplx(0.5, 0.0);
}

Operator momentum(std::size_t cutoff) {
  const auto a = annihilation(cutoff);
  return (a - a.adjoint()) * cplx(0.0, -0.5);
}

Operator vacuum_projector_flip(std::size_t cutoff) {
  auto id = Operator::identity(HilbertLayout::mode(cutoff));
  Matrix m = id.data();
  m(0, 0) = -1.0;
  return Operator(id.layout(), std::move(m));
}

Operator fock_projector(std::size_t cutoff, std::size_t n_max) {
  const auto d = static_cast<Eigen::Index>(cutoff + 1);
  Matrix m = Matrix::Zero(d, d);
  for (Eigen::Index n = 0; n < d; ++n)
    if (static_cast<std::size_t>(n) <= n_max) m(n, n) = 1.0;
  return Operator(HilbertLayout::mode(cutoff), std::move(m));
}

Operator interior_projector(std::size_t cutoff, std::size_t k) {
  if (k > cutoff) throw UsageError("interior span is empty");
  return fock_projector(cutoff, cutoff - k);
}

Operator pauli(Axis axis) {
  Matrix m(2, 2);
  switch (axis) {
    case Axis::X: m << 0, 1, 1, 0; break;
    case Axis::Y: m << 0, -kI, kI, 0; break;
    case Axis::Z: m << 1, 0, 0, -1; break;
  }
  return Operator(HilbertLayout::qubit(), std::move(m));
}

QubitGate QubitGate::parse(const std::string& s) {
  using N = QubitGate::Name;
  if (s == "I") return {N::I, 0};
  if (s == "X") return {N::X, 0};
  if (s == "Y") return {N::Y, 0};
  if (s == "Z") return {N::Z, 0};
  if (s == "S") return {N::S, 0};
  if (s == "Sdg") return {N::Sdg, 0};
  if (s == "H") return {N::H, 0};
  auto paren = s.find('(');
  if (paren != std::string::npos && s.back() == ')') {
    const auto head = s.substr(0, paren);
    const double th = std::stod(s.substr(paren + 1, s.size() - paren - 2));
    if (head == "RZ") return {N::RZ, th};
    if (head == "RX") return {N::RX, th};
  }
  throw UsageError("unknown qubit gate '" + s + "'");
}

std::string QubitGate::label() const {
  using N = QubitGate::Name;
  switch (name) {
    case N::I: return "I";
    case N::X: return "X";
    case N::Y: return "Y";
    case N::Z: return "Z";
    case N::S: return "S";
    case N::Sdg: return "Sdg";
    case N::H: return "H";
    case N::RZ: return "RZ(" + std::to_string(theta) + ")";
    case N::RX: return "RX(" + std::to_string(theta) + ")";
  }
  return "?";
}

Operator qubit_gate(const QubitGate& g) {
  using N = QubitGate::Name;
  Matrix m(2, 2);
  const double r = 1.0 / std::numbers::sqrt2;
  switch (g.name) {
    case N::I: m << 1, 0, 0, 1; break;
    case N::X: return pauli(Axis::X);
    case N::Y: return pauli(Axis::Y);
    case N::Z: return pauli(Axis::Z);
    case N::S: m << 1, 0, 0, kI; break;
    case N::Sdg: m << 1, 0, 0, -kI; break;
    case N::H: m << r, r, r, -r; break;
    case N::RZ:
      m << std::exp(-kI * (g.theta / 2)), 0, 0, std::exp(kI * (g.theta / 2));
      break;
    case N::RX: {
      const double c = std::cos(g.theta / 2), s = std::sin(g.theta / 2);
      m << c, -kI * s, -kI * s, c;
      break;
    }
  }
  return Operator(HilbertLayout::qubit(), std::move(m));
}

Operator qubit_gate(QubitGate::Name name, double theta) {
  return qubit_gate(QubitGate{name, theta});
}

Operator embed(const Operator& op, const HilbertLayout& layout, std::size_t at) {
  return embed_product(layout, {{at, op}});
}

Operator embed_product(const HilbertLayout& layout,
                       const std::vector<std::pair<std::size_t, Operator>>& ops) {
  std::vector<const Operator*> slot(layout.size(), nullptr);
  for (const auto& [at, op] : ops) {
    if (at >= layout.size()) throw LayoutError("factor address out of range");
    if (slot[at]) throw LayoutError("factor addressed twice");
    const auto& f = layout.factors()[at];
    if (op.layout().size() != 1 || op.dim() != f.dim)
      throw LayoutError("operator does not fit factor " + std::to_string(at));
    if (op.layout().factors()[0].kind != f.kind)
      throw LayoutError("factor kind mismatch at " + std::to_string(at));
    slot[at] = &op;
  }
  Matrix m = Matrix::Ones(1, 1);
  for (std::size_t i = 0; i < layout.size(); ++i) {
    const auto d = static_cast<Eigen::Index>(layout.factors()[i].dim);
    Matrix f = slot[i] ? slot[i]->data() : Matrix(Matrix::Identity(d, d));
    Matrix k(m.rows() * d, m.cols() * d);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        k.block(r * d, c * d, d, d) = m(r, c) * f;
    m = std::move(k);
  }
  return Operator(layout, std::move(m));
}

Operator off_diagonal_block(const Operator& a) {
  const auto d = static_cast<Eigen::Index>(a.dim());
  Matrix m = Matrix::Zero(2 * d, 2 * d);
  m.block(0, d, d, d) = a.data();
  m.block(d, 0, d, d) = a.data().adjoint();
  return Operator(HilbertLayout::qubit().concat(a.layout()), std::move(m));
}

Operator diagonal_block(const Operator& upper, const Operator& lower) {
  if (!(upper.layout() == lower.layout()))
    throw LayoutError("block layouts differ");
  const auto d = static_cast<Eigen::Index>(upper.dim());
  Matrix m = Matrix::Zero(2 * d, 2 * d);
  m.block(0, 0, d, d) = upper.data();
  m.block(d, d, d, d) = lower.data();
  return Operator(HilbertLayout::qubit().concat(upper.layout()), std::move(m));
}

Operator qubit_block(const Operator& full, int r, int c) {
  const auto& l = full.layout();
  if (l.size() < 2 || l.factors()[0].kind != FactorKind::Qubit)
    throw LayoutError("leading factor must be a qubit");
  const auto d = static_cast<Eigen::Index>(full.dim() / 2);
  return Operator(l.tail(1), full.data().block(r * d, c * d, d, d));
}

Vector basis_state(const HilbertLayout& layout,
                   const std::vector<std::size_t>& digits) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(layout.dim()));
  v(static_cast<Eigen::Index>(layout.index_of(digits))) = 1.0;
  return v;
}

}  // namespace bosynth
