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

#include <string>
#include <utility>
#include <vector>

#include "bosynth/linalg.hpp"

namespace bosynth {

enum class Axis { X, Y, Z };

Axis parse_axis(const std::string& s);
char axis_name(Axis a);

// Truncated single-mode operators on span{|0>..|cutoff>}.
Operator annihilation(std::size_t cutoff);
Operator creation(std::size_t cutoff);
Operator number(std::size_t cutoff);
// x = (a + a†)/2, p = -i(a - a†)/2, so [x, p] = i/2 away from the top state.
Operator position(std::size_t cutoff);
Operator momentum(std::size_t cutoff);
// I - 2|0><0| on one mode.
Operator vacuum_projector_flip(std::size_t cutoff);
// Projector onto photon numbers <= cutoff - k.
Operator interior_projector(std::size_t cutoff, std::size_t k);
// Projector onto photon numbers <= n_max.
Operator fock_projector(std::size_t cutoff, std::size_t n_max);

Operator pauli(Axis axis);

struct QubitGate {
  enum class Name { I, X, Y, Z, S, Sdg, H, RZ, RX };
  Name name = Name::I;
  double theta = 0.0;

  static QubitGate parse(const std::string& s);
  std::string label() const;
};

// RZ(θ) = exp(-iθZ/2), RX(θ) = exp(-iθX/2).
Operator qubit_gate(const QubitGate& g);
Operator qubit_gate(QubitGate::Name name, double theta = 0.0);

// op acting on factor `at`, identity elsewhere.
Operator embed(const Operator& op, const HilbertLayout& layout, std::size_t at);
// Tensor product of single-factor operators placed at distinct addresses.
Operator embed_product(const HilbertLayout& layout,
                       const std::vector<std::pair<std::size_t, Operator>>& ops);

// Off-diagonal block operator |0><1| ⊗ A + |1><0| ⊗ A†.
Operator off_diagonal_block(const Operator& a);
// Block-diagonal operator |0><0| ⊗ upper + |1><1| ⊗ lower.
Operator diagonal_block(const Operator& upper, const Operator& lower);
// Extract block (r, c) of the leading qubit.
Operator qubit_block(const Operator& full, int r, int c);

Vector basis_state(const HilbertLayout& layout,
                   const std::vector<std::size_t>& digits);

}  // namespace bosynth
