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
#include <limits>
#include <string>
#include <vector>

#include "bosynth/fock.hpp"
#include "bosynth/param_unitary.hpp"

namespace bosynth {

enum class BlockKind { OffDiagonal, UpperLeft };

// A ParamUnitary on [qubit, mode(s)] together with the Hermitian generator M
// of the unitary it approximates, exp(itM). M is tracked symbolically through
// every construction so oracle targets never come from the synthesized side.
struct BlockEncoding {
  ParamUnitary inner;
  Operator generator;
  double order_p = std::numeric_limits<double>::infinity();
  BlockKind kind = BlockKind::OffDiagonal;
  std::vector<std::string> warnings;

  // Upper-right block for off-diagonal encodings, upper-left otherwise.
  Operator block_target() const;
  Operator lower_block() const;
  Operator exact(double t) const;
  std::function<Matrix(double)> exact_fn() const;
  const HilbertLayout& layout() const { return generator.layout(); }
  const HilbertLayout mode_layout() const { return generator.layout().tail(1); }
};

struct SynthesisBudget {
  double p_l;
  double p_r;
  int q;
  int s;
  static SynthesisBudget from_orders(double p_l, double p_r);
};

// Block encoding built from a primitive whose generator is M itself.
BlockEncoding exact_encoding(const std::string& kind, const std::string& label,
                             const Operator& generator, BlockKind bk);

// S1(t) = exp(it[[0, a†],[a, 0]]) on [qubit, mode].
BlockEncoding s1(std::size_t cutoff);
// exp(itσˣ)⊗I, the block encoding of the identity.
BlockEncoding identity_encoding(std::size_t cutoff);

// α ↦ e^{i(π/2)n}·e^{iα(a†+a)σʸ}·e^{-i(π/2)n}·e^{iα(a†+a)σˣ}. To first
// order in α this is S1(2α).
ParamUnitary s1_from_conditional_displacements(std::size_t cutoff);
inline double s1_time_from_displacement(double alpha) { return 2.0 * alpha; }

BlockEncoding conjugate(const BlockEncoding& b, const QubitGate& g);
// Composite g_0·g_1···g_n applied as one conjugation.
BlockEncoding conjugate(const BlockEncoding& b, const std::vector<QubitGate>& gs);

// ‖[A, B]‖ on the span with at most cutoff/2 photons per mode.
double interior_commutator_norm(const Operator& a, const Operator& b);

// exp(it[[0, AB],[(AB)†, 0]]) from off-diagonal B_A, B_B with [A, B] = 0.
BlockEncoding add(const BlockEncoding& ba, const BlockEncoding& bb, double p_l,
                  double p_r);
struct AddOptions {
  int bch_order = 1;
  int trotter_order = 2;
  bool symmetrize_bch = false;
};
BlockEncoding add_with(const BlockEncoding& ba, const BlockEncoding& bb,
                       const AddOptions& opt);

// exp(it[[½(BA+(BA)†), 0],[0, -½(AB+(AB)†)]]) from off-diagonal B_A, B_B.
BlockEncoding mult(const BlockEncoding& ba, const BlockEncoding& bb, double p_l,
                   double p_r);
// Block target (a†)^k for k a power of two.
BlockEncoding power(std::size_t k, std::size_t cutoff, double p);
// Block target (a†)^k for any k >= 1, balanced recursion over the bits of k.
BlockEncoding arb_power(std::size_t k, std::size_t cutoff, double p);

double add_cost_bound(int q);
double mult_cost_bound(int q);
double power_cost_bound(std::size_t k, double p);
double arb_power_cost_bound(std::size_t n_bits, double p);
std::uint64_t add_cost_exact_factor(int q);
std::size_t bit_length(std::size_t k);

}  // namespace bosynth
