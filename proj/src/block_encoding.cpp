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

#include "bosynth/block_encoding.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bosynth {

namespace {

Operator full_gate(const HilbertLayout& layout, const QubitGate& g) {
  return embed(qubit_gate(g), layout, 0);
}

Operator mode_projector_half(const HilbertLayout& modes) {
  std::vector<std::pair<std::size_t, Operator>> ops;
  for (std::size_t i = 0; i < modes.size(); ++i) {
    const auto cutoff = modes.factors()[i].dim - 1;
    ops.emplace_back(i, fock_projector(cutoff, cutoff / 2));
  }
  return embed_product(modes, ops);
}

double order_of_add(double p_l, double p_r) { return std::min(p_l, p_r) / 2.0; }

}  // namespace

Operator BlockEncoding::block_target() const {
  return kind == BlockKind::OffDiagonal ? qubit_block(generator, 0, 1)
                                        : qubit_block(generator, 0, 0);
}

Operator BlockEncoding::lower_block() const { return qubit_block(generator, 1, 1); }

Operator BlockEncoding::exact(double t) const { return expm_hermitian(generator, t); }

std::function<Matrix(double)> BlockEncoding::exact_fn() const {
  auto g = std::make_shared<Generator>("target", "target", generator);
  return [g](double t) { return g->unitary(t); };
}

SynthesisBudget SynthesisBudget::from_orders(double p_l, double p_r) {
  const double pm = std::min(p_l, p_r);
  int q = 1;
  if (std::isfinite(pm)) q = std::max(static_cast<int>(std::ceil((pm - 1.0) / 2.0)), 1);
  return {p_l, p_r, q, q};
}

BlockEncoding exact_encoding(const std::string& kind, const std::string& label,
                             const Operator& generator, BlockKind bk) {
  BlockEncoding b;
  b.inner = primitive(kind, label, generator);
  b.generator = generator;
  b.kind = bk;
  return b;
}

BlockEncoding s1(std::size_t cutoff) {
  return exact_encoding("S1", "S1", off_diagonal_block(creation(cutoff)),
                        BlockKind::OffDiagonal);
}

BlockEncoding identity_encoding(std::size_t cutoff) {
  return exact_encoding("RX", "RX⊗1",
                        off_diagonal_block(Operator::identity(HilbertLayout::mode(cutoff))),
                        BlockKind::OffDiagonal);
}

ParamUnitary s1_from_conditional_displacements(std::size_t cutoff) {
  const auto layout = HilbertLayout::qubit_modes({cutoff});
  const auto x = annihilation(cutoff) + creation(cutoff);
  auto disp_y = primitive("cond_disp", "CD_y",
                          embed_product(layout, {{0, pauli(Axis::Y)}, {1, x}}));
  auto disp_x = primitive("cond_disp", "CD_x",
                          embed_product(layout, {{0, pauli(Axis::X)}, {1, x}}));
  auto delay = std::make_shared<Generator>("phase_delay", "n",
                                           embed(number(cutoff), layout, 1));
  const double half_pi = std::numbers::pi / 2;
  return product({fixed_primitive(delay, half_pi), disp_y,
                  fixed_primitive(delay, -half_pi), disp_x},
                 "S1~CD(α)");
}

BlockEncoding conjugate(const BlockEncoding& b, const QubitGate& g) {
  return conjugate(b, std::vector<QubitGate>{g});
}

BlockEncoding conjugate(const BlockEncoding& b, const std::vector<QubitGate>& gs) {
  Operator w = Operator::identity(b.layout());
  std::string tag;
  for (const auto& g : gs) {
    w = w * full_gate(b.layout(), g);
    tag += g.label();
  }
  BlockEncoding out;
  out.inner = conjugate(b.inner, w, tag);
  out.generator = w * b.generator * w.adjoint();
  out.order_p = b.order_p;
  out.warnings = b.warnings;
  const auto d = static_cast<Eigen::Index>(out.generator.dim() / 2);
  const auto& m = out.generator.data();
  const bool diag = m.block(0, d, d, d).norm() == 0.0 && m.block(d, 0, d, d).norm() == 0.0;
  out.kind = diag ? BlockKind::UpperLeft : BlockKind::OffDiagonal;
  return out;
}

double interior_commutator_norm(const Operator& a, const Operator& b) {
  const auto p = mode_projector_half(a.layout());
  return spectral_norm(p * commutator(a, b) * p);
}

BlockEncoding add(const BlockEncoding& ba, const BlockEncoding& bb, double p_l,
                  double p_r) {
  const auto budget = SynthesisBudget::from_orders(p_l, p_r);
  auto out = add_with(ba, bb, {budget.q, 2 * budget.s, false});
  out.order_p = order_of_add(p_l, p_r);
  return out;
}

BlockEncoding add_with(const BlockEncoding& ba, const BlockEncoding& bb,
                       const AddOptions& opt) {
  if (!(ba.layout() == bb.layout())) throw LayoutError("ADD layout mismatch");
  if (ba.kind != BlockKind::OffDiagonal || bb.kind != BlockKind::OffDiagonal)
    throw std::invalid_argument("ADD needs off-diagonal encodings");
  const Operator a = ba.block_target();
  const Operator b = bb.block_target();
  BlockEncoding out;
  const double defect = interior_commutator_norm(a, b);
  const double scale_ab = std::max(1.0, spectral_norm(a) * spectral_norm(b));
  if (defect > tolerances().commutation_relative * scale_ab)
    out.warnings.push_back("ADD: operands do not commute, ‖[A,B]‖ = " +
                           std::to_string(defect));
  const auto& l = ba.layout();
  const auto X = full_gate(l, {QubitGate::Name::X});
  const auto S = full_gate(l, {QubitGate::Name::S});
  const auto H = full_gate(l, {QubitGate::Name::H});
  const auto xbx = conjugate(bb.inner, X, "X");
  auto left = bch(opt.bch_order, 1, xbx, ba.inner);
  auto right = bch(opt.bch_order, 1, conjugate(ba.inner, S, "S"), xbx);
  if (opt.symmetrize_bch) {
    left = symmetrize(left);
    right = symmetrize(right);
  }
  const auto left_p = conjugate(left, S * H, "SH");
  const auto right_p = conjugate(right, H, "H");
  const auto tr = trotter(opt.trotter_order, {linearize(left_p), linearize(right_p)});
  out.inner = conjugate(scale(tr, 0.5), X, "X");
  out.generator = off_diagonal_block(a * b);
  out.order_p = std::min(ba.order_p, bb.order_p) / 2.0;
  out.kind = BlockKind::OffDiagonal;
  for (const auto* src : {&ba, &bb})
    out.warnings.insert(out.warnings.end(), src->warnings.begin(), src->warnings.end());
  return out;
}

BlockEncoding mult(const BlockEncoding& ba, const BlockEncoding& bb, double p_l,
                   double p_r) {
  if (!(ba.layout() == bb.layout())) throw LayoutError("MULT layout mismatch");
  if (ba.kind != BlockKind::OffDiagonal || bb.kind != BlockKind::OffDiagonal)
    throw std::invalid_argument("MULT needs off-diagonal encodings");
  const auto budget = SynthesisBudget::from_orders(p_l, p_r);
  const Operator a = ba.block_target();
  const Operator b = bb.block_target();
  BlockEncoding out;
  const Operator ba_prod = b * a;
  const Operator ab_prod = a * b;
  const double herm = spectral_norm(ba_prod - ba_prod.adjoint());
  if (herm > tolerances().commutation_relative * std::max(1.0, spectral_norm(ba_prod)))
    out.warnings.push_back("MULT: product is not Hermitian, defect " +
                           std::to_string(herm));
  const auto& l = ba.layout();
  const auto X = full_gate(l, {QubitGate::Name::X});
  const auto S = full_gate(l, {QubitGate::Name::S});
  const auto c = bch(budget.q, 1, conjugate(bb.inner, S, "S"), conjugate(ba.inner, X, "X"));
  out.inner = scale(linearize(c), 0.5);
  out.generator = diagonal_block((ba_prod + ba_prod.adjoint()) * cplx(0.5),
                                 (ab_prod + ab_prod.adjoint()) * cplx(-0.5));
  out.order_p = order_of_add(p_l, p_r);
  out.kind = BlockKind::UpperLeft;
  for (const auto* src : {&ba, &bb})
    out.warnings.insert(out.warnings.end(), src->warnings.begin(), src->warnings.end());
  return out;
}

namespace {

BlockEncoding power_impl(std::size_t k, std::size_t cutoff, double p,
                         const BlockEncoding& base) {
  if (k == 1) return base;
  const double p2 = 2.0 * p;
  const auto half = power_impl(k / 2, cutoff, p2, base);
  auto out = add(half, half, p2, p2);
  out.order_p = p;
  return out;
}

BlockEncoding arb_impl(std::size_t k, std::size_t l, std::size_t r,
                       std::size_t cutoff, double p, const BlockEncoding& base,
                       const BlockEncoding& ident) {
  if (l == r) {
    if ((k >> r) & 1u) return power_impl(std::size_t{1} << r, cutoff, p, base);
    auto id = ident;
    id.order_p = p;
    return id;
  }
  const std::size_t mid = l + (r - l) / 2;
  const double p2 = 2.0 * p;
  const auto lo = arb_impl(k, l, mid, cutoff, p2, base, ident);
  const auto hi = arb_impl(k, mid + 1, r, cutoff, p2, base, ident);
  auto out = add(lo, hi, p2, p2);
  out.order_p = p;
  return out;
}

}  // namespace

BlockEncoding power(std::size_t k, std::size_t cutoff, double p) {
  if (k == 0 || (k & (k - 1)) != 0)
    throw std::invalid_argument("POWER needs k a power of two");
  return power_impl(k, cutoff, p, s1(cutoff));
}

std::size_t bit_length(std::size_t k) {
  std::size_t n = 0;
  while (k) {
    ++n;
    k >>= 1u;
  }
  return n;
}

BlockEncoding arb_power(std::size_t k, std::size_t cutoff, double p) {
  if (k == 0) throw std::invalid_argument("ARB_POWER needs k >= 1");
  const std::size_t n = bit_length(k);
  return arb_impl(k, 0, n - 1, cutoff, p, s1(cutoff), identity_encoding(cutoff));
}

double add_cost_bound(int q) { return 1.07 * std::pow(30.0, q); }

double mult_cost_bound(int q) { return 8.0 * std::pow(6.0, q - 1); }

double power_cost_bound(std::size_t k, double p) {
  return std::pow(6.0, std::log2(static_cast<double>(k))) *
         std::pow(420.0, static_cast<double>(k) * p / 2.0);
}

double arb_power_cost_bound(std::size_t n_bits, double p) {
  const double n = static_cast<double>(n_bits);
  return std::pow(n, 1.6) * std::pow(30.0, n * p) * std::pow(420.0, n * n * p / 2.0) *
         std::pow(6.0, std::log2(n) + 1.0);
}

std::uint64_t add_cost_exact_factor(int q) {
  std::uint64_t c = 16;
  for (int i = 1; i < q; ++i) c = saturating_mul(c, 30);
  return c;
}

}  // namespace bosynth
