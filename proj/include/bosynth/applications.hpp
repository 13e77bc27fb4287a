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

#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "bosynth/block_encoding.hpp"
#include "bosynth/fock.hpp"
#include "bosynth/param_unitary.hpp"

namespace bosynth {

// A synthesized program paired with the generator G of the unitary exp(itG)
// it approximates. `ideal` is the physics target when it differs from G only
// by truncation artefacts at the cutoff.
struct Synthesis {
  std::string name;
  ParamUnitary unitary;
  Operator generator;
  Operator ideal;
  double order = 1.0;
  double cost_bound = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t lower_bound_depth = 0;
  std::vector<std::string> warnings;

  std::function<Matrix(double)> exact_fn() const;
  std::function<Matrix(double)> ideal_fn() const;
};

// Cyclic partners (i, j) of axis k, so that [σⁱ, σʲ] = 2iσᵏ.
std::pair<Axis, Axis> cyclic_partners(Axis k);

// H = ω a†a + (κ/2)(a†)²a², upper-left block with the qubit in |0>.
Synthesis nonlinear_hamiltonian(double omega, double kappa, int q, std::size_t cutoff);

Synthesis conditional_rotation_phase_space(int p, std::size_t cutoff,
                                           Axis axis = Axis::Z);
Synthesis conditional_rotation_fock(int p, std::size_t cutoff);

double state_prep_exact_time(std::size_t k, std::size_t n, std::size_t cutoff,
                             bool protected_variant = false);

// Generators of T_k and of the protected P_k.
Operator state_prep_generator(std::size_t k, std::size_t cutoff);
Operator protected_generator(std::size_t k, std::size_t cutoff);

Synthesis state_prep_T(std::size_t k, double p, std::size_t cutoff);
Synthesis state_prep_protected(std::size_t k, double p, std::size_t cutoff,
                               std::size_t slices = 1);

// T2 as one ADD of two S1 with an explicit BCH variant, Trotter order and
// slice count. Variants: bch_order 1 or 2, optionally symmetrized.
struct BchVariant {
  int order = 1;
  bool symmetrized = false;
  std::string label() const;
};
Synthesis state_prep_T2_variant(const BchVariant& v, int trotter_order,
                                std::size_t slices, std::size_t cutoff);
Synthesis state_prep_P2_variant(const BchVariant& v, int trotter_order,
                                std::size_t slices, std::size_t cutoff);

struct SuccessReport {
  double delta = 0.0;
  double eps = 0.0;
  std::size_t r = 1;
  double r_theory = 1.0;
  double op_error = 0.0;
  double success_probability = 0.0;
  std::uint64_t s1_count = 0;
  double s1_bound = 0.0;
};
SuccessReport success_probability_bound(double delta, std::size_t k, double p,
                                        std::size_t cutoff, double t);

Synthesis conditional_beam_splitter(int p, std::size_t cutoff);
// Hermitian part of (a1†a2 + a1a2†)(1 - n1n2) conditioned on σᶻ.
Synthesis conditional_beam_splitter_projected(int p, std::size_t cutoff);

Synthesis effective_pauli_span01(Axis axis, int p, std::size_t cutoff);
Synthesis anharmonicity_gate(int p, std::size_t cutoff);
Synthesis cross_kerr(int p, std::size_t cutoff);

struct HubbardGates {
  Matrix same;
  Matrix hop;
  Matrix fswap;
  Matrix fswap_from_hop;
};
HubbardGates fermi_hubbard_gates(double u, double j, double tau);

// Observables along repeated application of a step unitary.
struct DynamicsTrace {
  std::vector<double> times;
  std::vector<double> autocorrelation;
  std::vector<double> leakage;
  std::vector<double> norm;
  std::vector<std::vector<double>> populations;
};
DynamicsTrace run_dynamics(const Matrix& step, double dt, std::size_t steps,
                           const Vector& psi0, const Matrix& leakage_projector,
                           const std::vector<Matrix>& population_projectors);

}  // namespace bosynth
