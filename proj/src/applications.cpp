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

#include "bosynth/applications.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "bosynth/product_formulas.hpp"

namespace bosynth {

namespace {

using Placement = std::vector<std::pair<std::size_t, Operator>>;

ParamUnitary prim(const std::string& kind, const std::string& label,
                  const HilbertLayout& layout, const Placement& ops, double c = 1.0) {
  return primitive(kind, label, embed_product(layout, ops) * cplx(c));
}

// Linearised BCH_p of e^{iτ c_a H_a} and e^{iτ c_b H_b}: approximates
// exp(h·[i c_a H_a, i c_b H_b]).
ParamUnitary commutator_term(int p, const ParamUnitary& ua, const ParamUnitary& ub) {
  return linearize(bch(p, 1, ua, ub));
}

std::uint64_t depth_of(const std::vector<ParamUnitary>& terms) {
  std::uint64_t d = 0;
  for (const auto& t : terms) d += t.cost().total;
  return d;
}

int trotter_half_order_for(double p) {
  return std::max(1, static_cast<int>(std::ceil((p - 0.5) / 2.0)));
}

// Trotter_{2k} over m terms, each costing at most `term`.
double trotter_cost_bound(std::size_t m, int k, double term) {
  return 2.0 * static_cast<double>(m) * std::pow(5.0, k - 1) * term;
}

double bch_cost_bound(int p) { return 8.0 * std::pow(6.0, p - 1); }

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

Operator power_of(const Operator& a, std::size_t k) {
  Operator r = Operator::identity(a.layout());
  for (std::size_t i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace

std::function<Matrix(double)> Synthesis::exact_fn() const {
  auto g = std::make_shared<Generator>("target", "target", generator);
  return [g](double t) { return g->unitary(t); };
}

std::function<Matrix(double)> Synthesis::ideal_fn() const {
  auto g = std::make_shared<Generator>("ideal", "ideal", ideal);
  return [g](double t) { return g->unitary(t); };
}

std::pair<Axis, Axis> cyclic_partners(Axis k) {
  switch (k) {
    case Axis::X: return {Axis::Y, Axis::Z};
    case Axis::Y: return {Axis::Z, Axis::X};
    case Axis::Z: return {Axis::X, Axis::Y};
  }
  return {Axis::X, Axis::Y};
}

Synthesis nonlinear_hamiltonian(double omega, double kappa, int q, std::size_t cutoff) {
  if (omega < 0 || kappa < 0) throw std::invalid_argument("ω, κ must be nonnegative");
  if (q < 1) throw std::invalid_argument("q must be at least 1");
  const double p = 2.0 * q;
  const auto S1 = s1(cutoff);
  const QubitGate X{QubitGate::Name::X};
  const auto m_omega = mult(conjugate(S1, X), S1, p, p);
  const auto S2 = power(2, cutoff, p);
  const auto m_kappa = mult(conjugate(S2, X), S2, p, p);
  const int s = std::max(1, static_cast<int>(std::ceil((q - 0.75) / 2.0)));
  Synthesis out;
  out.name = "nonlinear-hamiltonian";
  out.unitary = trotter(2 * s, {scale(m_omega.inner, omega), scale(m_kappa.inner, kappa / 2)});
  out.generator = m_omega.generator * cplx(omega) + m_kappa.generator * cplx(kappa / 2);
  const auto n = number(cutoff);
  const auto ad = creation(cutoff);
  const auto a = annihilation(cutoff);
  const Operator h = n * cplx(omega) + ad * ad * a * a * cplx(kappa / 2);
  out.ideal = diagonal_block(h, qubit_block(out.generator, 1, 1));
  out.order = q + 0.25;
  out.cost_bound = 192.0 * std::pow(2900.0, q);
  out.warnings = m_omega.warnings;
  out.warnings.insert(out.warnings.end(), m_kappa.warnings.begin(), m_kappa.warnings.end());
  return out;
}

Synthesis conditional_rotation_phase_space(int p, std::size_t cutoff, Axis axis) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  const auto l = HilbertLayout::qubit_modes({cutoff});
  const auto [ai, aj] = cyclic_partners(axis);
  const auto x = position(cutoff);
  const auto pm = momentum(cutoff);
  const double r = 1.0 / std::numbers::sqrt2;
  auto terms_at = [&](int order) {
    auto xi = prim("cond_x", "xσ", l, {{0, pauli(ai)}, {1, x}}, r);
    auto xj = prim("cond_x", "xσ", l, {{0, pauli(aj)}, {1, x}}, -r);
    auto pi = prim("cond_p", "pσ", l, {{0, pauli(ai)}, {1, pm}}, r);
    auto pj = prim("cond_p", "pσ", l, {{0, pauli(aj)}, {1, pm}}, -r);
    auto phase = prim("qubit_rot", "σ/2", l, {{0, pauli(axis)}}, -0.5);
    return std::vector<ParamUnitary>{commutator_term(order, xi, xj),
                                     commutator_term(order, pi, pj), phase};
  };
  Synthesis out;
  out.name = "conditional-rotation";
  out.unitary = trotter(2 * trotter_half_order_for(p), terms_at(p));
  const auto sig = pauli(axis);
  const Operator quad = x * x + pm * pm - Operator::identity(x.layout()) * cplx(0.5);
  out.generator = embed_product(l, {{0, sig}, {1, quad}});
  out.ideal = embed_product(l, {{0, sig}, {1, number(cutoff)}});
  out.order = p + 0.5;
  out.cost_bound = 6.0 * std::pow(14.0, p);
  out.lower_bound_depth = depth_of(terms_at(1));
  return out;
}

Synthesis conditional_rotation_fock(int p, std::size_t cutoff) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  const auto S1 = s1(cutoff);
  const auto m = mult(conjugate(S1, QubitGate{QubitGate::Name::X}), S1, 2.0 * p, 2.0 * p);
  const auto l = m.layout();
  Matrix lower = Matrix::Zero(2, 2);
  lower(1, 1) = 1.0;
  const Operator corr = embed(Operator(HilbertLayout::qubit(), lower), l, 0);
  Synthesis out;
  out.name = "conditional-rotation-fock";
  out.unitary = product({m.inner, primitive("qubit_phase", "|1><1|", corr)}, "MULT·phase");
  out.generator = m.generator + corr;
  out.ideal = embed_product(l, {{0, pauli(Axis::Z)}, {1, number(cutoff)}});
  out.order = p;
  out.cost_bound = mult_cost_bound(SynthesisBudget::from_orders(2.0 * p, 2.0 * p).q) + 1;
  out.warnings = m.warnings;
  return out;
}

double state_prep_exact_time(std::size_t k, std::size_t n, std::size_t cutoff,
                             bool protected_variant) {
  if (k < 1 || k > cutoff) throw std::invalid_argument("need 1 <= k <= cutoff");
  const double denom = (protected_variant ? 4.0 : 2.0) * std::sqrt(factorial(k));
  return (2.0 * static_cast<double>(n) + 1.0) * std::numbers::pi / denom;
}

Operator state_prep_generator(std::size_t k, std::size_t cutoff) {
  return off_diagonal_block(power_of(creation(cutoff), k));
}

Operator protected_generator(std::size_t k, std::size_t cutoff) {
  const auto vac = fock_projector(cutoff, 0);
  return off_diagonal_block(power_of(creation(cutoff), k) * vac) * cplx(2.0);
}

namespace {

ParamUnitary protect(const ParamUnitary& t_slice, std::size_t cutoff) {
  const auto l = HilbertLayout::qubit_modes({cutoff});
  const auto rz0 = embed(vacuum_projector_flip(cutoff), l, 1);
  const auto mirrored = conjugate(t_slice, rz0, "RZ0");
  return trotter(2, {t_slice, scale(mirrored, -1.0)}, 1, true);
}

}  // namespace

Synthesis state_prep_T(std::size_t k, double p, std::size_t cutoff) {
  const auto b = arb_power(k, cutoff, p);
  Synthesis out;
  out.name = "state-prep-T";
  out.unitary = b.inner;
  out.generator = b.generator;
  out.ideal = state_prep_generator(k, cutoff);
  out.order = p;
  out.cost_bound = arb_power_cost_bound(bit_length(k), p);
  out.warnings = b.warnings;
  return out;
}

Synthesis state_prep_protected(std::size_t k, double p, std::size_t cutoff,
                               std::size_t slices) {
  const auto t = state_prep_T(k, p, cutoff);
  Synthesis out;
  out.name = "state-prep-protected";
  out.unitary = repeat(protect(t.unitary, cutoff), slices);
  out.generator = protected_generator(k, cutoff);
  out.ideal = out.generator;
  out.order = std::min(p, 3.0);
  out.cost_bound = static_cast<double>(slices) * 2.0 * std::pow(5.0, p / 2.0) *
                   arb_power_cost_bound(bit_length(k), p);
  out.warnings = t.warnings;
  return out;
}

std::string BchVariant::label() const {
  return std::to_string(order) + (symmetrized ? "'" : "");
}

Synthesis state_prep_T2_variant(const BchVariant& v, int trotter_order,
                                std::size_t slices, std::size_t cutoff) {
  const auto S1 = s1(cutoff);
  const auto b = add_with(S1, S1, {v.order, trotter_order, v.symmetrized});
  Synthesis out;
  out.name = "state-prep-T2[" + v.label() + "]";
  out.unitary = repeat(b.inner, slices);
  out.generator = b.generator;
  out.ideal = state_prep_generator(2, cutoff);
  out.order = v.order + 0.5;
  out.cost_bound = static_cast<double>(slices) * add_cost_bound(v.order) *
                   (v.symmetrized ? 2.0 : 1.0);
  return out;
}

Synthesis state_prep_P2_variant(const BchVariant& v, int trotter_order,
                                std::size_t slices, std::size_t cutoff) {
  const auto t = state_prep_T2_variant(v, trotter_order, 1, cutoff);
  Synthesis out;
  out.name = "state-prep-P2[" + v.label() + "]";
  out.unitary = repeat(protect(t.unitary, cutoff), slices);
  out.generator = protected_generator(2, cutoff);
  out.ideal = out.generator;
  out.order = std::min(t.order, 3.0);
  out.cost_bound = 3.0 * static_cast<double>(slices) * t.cost_bound;
  return out;
}

SuccessReport success_probability_bound(double delta, std::size_t k, double p,
                                        std::size_t cutoff, double t) {
  if (!(delta > 0) || !(delta <= 1)) throw std::invalid_argument("need 0 < δ <= 1");
  const auto slice = state_prep_protected(k, p, cutoff, 1);
  SuccessReport rep;
  rep.delta = delta;
  rep.eps = delta / 2.0;
  const double c = spectral_norm(slice.generator);
  const double p_eff = std::max(slice.order, 1.5);
  auto res = timeslice(slice.unitary, slice.exact_fn(), t, rep.eps, p_eff, c);
  rep.r = res.r;
  rep.r_theory = res.r_theory;
  rep.op_error = res.error;
  const auto l = HilbertLayout::qubit_modes({cutoff});
  const Vector psi = res.sliced.matrix(t) * basis_state(l, {1, 0});
  rep.success_probability = std::norm(psi(static_cast<Eigen::Index>(l.index_of({0, k}))));
  rep.s1_count = res.sliced.cost().by_kind.count("S1") ? res.sliced.cost().by_kind.at("S1") : 0;
  rep.s1_bound = static_cast<double>(res.r) * 2.0 * std::pow(5.0, p / 2.0) *
                 arb_power_cost_bound(bit_length(k), p);
  return rep;
}

Synthesis conditional_beam_splitter(int p, std::size_t cutoff) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  const auto l = HilbertLayout::qubit_modes({cutoff, cutoff});
  const auto x = position(cutoff);
  const auto pm = momentum(cutoff);
  auto terms_at = [&](int order) {
    auto x1 = prim("cond_x", "x1σx", l, {{0, pauli(Axis::X)}, {1, x}});
    auto x2 = prim("cond_x", "x2σy", l, {{0, pauli(Axis::Y)}, {2, x}});
    auto p1 = prim("cond_p", "p1σx", l, {{0, pauli(Axis::X)}, {1, pm}});
    auto p2 = prim("cond_p", "p2σy", l, {{0, pauli(Axis::Y)}, {2, pm}});
    return std::vector<ParamUnitary>{commutator_term(order, x1, x2),
                                     commutator_term(order, p1, p2)};
  };
  Synthesis out;
  out.name = "hom-beam-splitter";
  out.unitary = trotter(2 * trotter_half_order_for(p), terms_at(p));
  const auto a = annihilation(cutoff);
  const auto hop = embed_product(l, {{0, pauli(Axis::Z)}, {1, a.adjoint()}, {2, a}});
  out.generator = (hop + hop.adjoint()) * cplx(-1.0);
  out.ideal = out.generator;
  out.order = p + 0.5;
  out.cost_bound = 6.0 * std::pow(14.0, p);
  out.lower_bound_depth = depth_of(terms_at(1));
  return out;
}

Synthesis cross_kerr(int p, std::size_t cutoff) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  const auto l = HilbertLayout::qubit_modes({cutoff, cutoff});
  const auto n = number(cutoff);
  const double r = 1.0 / std::numbers::sqrt2;
  auto term_at = [&](int order) {
    auto a = prim("cond_n", "n1σx", l, {{0, pauli(Axis::X)}, {1, n}}, r);
    auto b = prim("cond_n", "n2σy", l, {{0, pauli(Axis::Y)}, {2, n}}, -r);
    return commutator_term(order, a, b);
  };
  Synthesis out;
  out.name = "cross-kerr";
  out.unitary = term_at(p);
  out.generator = embed_product(l, {{0, pauli(Axis::Z)}, {1, n}, {2, n}});
  out.ideal = out.generator;
  out.order = p + 0.5;
  out.cost_bound = bch_cost_bound(p);
  out.lower_bound_depth = term_at(1).cost().total;
  return out;
}

Synthesis conditional_beam_splitter_projected(int p, std::size_t cutoff) {
  const auto hom = conditional_beam_splitter(p, cutoff);
  const auto kerr = cross_kerr(p, cutoff);
  const auto& l = hom.generator.layout();
  const auto H = embed(qubit_gate(QubitGate::Name::H), l, 0);
  const auto S = embed(qubit_gate(QubitGate::Name::S), l, 0);
  // [i(-G)σˣ, i(n1n2)σʸ] = i{G, n1n2}σᶻ.
  const auto anti = linearize(bch(std::max(1, p), 1, conjugate(hom.unitary, H, "H"),
                                  conjugate(kerr.unitary, S * H, "SH")));
  Synthesis out;
  out.name = "cond-beam-projector";
  out.unitary = trotter(2, {hom.unitary, scale(anti, 0.5)});
  const auto a = annihilation(cutoff);
  const auto n = number(cutoff);
  const auto ml = HilbertLayout::qubit_modes({cutoff, cutoff}).tail(1);
  const auto g = embed_product(ml, {{0, a.adjoint()}, {1, a}});
  const auto gh = g + g.adjoint();
  const auto nn = embed_product(ml, {{0, n}, {1, n}});
  const Operator herm = gh - anticommutator(gh, nn) * cplx(0.5);
  out.generator = embed_product(l, {{0, pauli(Axis::Z)}}) *
                  kron(Operator::identity(HilbertLayout::qubit()), herm) * cplx(-1.0);
  out.ideal = out.generator;
  out.order = 0.0;
  out.cost_bound = trotter_cost_bound(
      2, 1, std::max(hom.cost_bound,
                     0.5 * bch_cost_bound(std::max(1, p)) * (hom.cost_bound + kerr.cost_bound)));
  out.warnings.push_back("order of the nested construction is not claimed");
  return out;
}

Synthesis effective_pauli_span01(Axis axis, int p, std::size_t cutoff) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  const auto l = HilbertLayout::qubit_modes({cutoff});
  const auto a = annihilation(cutoff);
  const auto ad = creation(cutoff);
  const auto n = number(cutoff);
  const auto x = position(cutoff);
  const auto pm = momentum(cutoff);
  const auto id = Operator::identity(n.layout());
  const Operator b = ad * (id - n);
  const auto sx = pauli(Axis::X), sy = pauli(Axis::Y), sz = pauli(Axis::Z);
  Synthesis out;
  out.name = std::string("span01-") + axis_name(axis);
  out.order = p + 0.5;
  if (axis == Axis::Z) {
    const auto zz = prim("qubit_rot", "σz", l, {{0, sz}});
    const auto nz = prim("cond_n", "nσz", l, {{0, sz}, {1, n}}, -2.0);
    out.unitary = product({zz, nz}, "span01-z");
    out.generator = embed_product(l, {{0, sz}, {1, id - n * cplx(2.0)}});
    out.ideal = out.generator;
    out.lower_bound_depth = 2;
    out.cost_bound = 2.0;
    out.order = std::numeric_limits<double>::infinity();
    return out;
  }
  auto terms_at = [&](int order) {
    if (axis == Axis::X) {
      auto t1 = commutator_term(order, prim("cond_x", "xσx", l, {{0, sx}, {1, x}}),
                                prim("cond_n", "nσy", l, {{0, sy}, {1, n}}));
      auto t2 = commutator_term(order, prim("disp_p", "p", l, {{1, pm}}),
                                prim("cond_n", "nσz", l, {{0, sz}, {1, n}}));
      auto t3 = prim("cond_x", "2xσz", l, {{0, sz}, {1, x}}, 2.0);
      return std::vector<ParamUnitary>{t1, t2, t3};
    }
    auto t1 = commutator_term(order, prim("cond_n", "nσz", l, {{0, sz}, {1, n}}),
                              prim("disp_x", "x", l, {{1, x}}));
    auto t2 = commutator_term(order, prim("cond_p", "pσx", l, {{0, sx}, {1, pm}}),
                              prim("cond_n", "nσy", l, {{0, sy}, {1, n}}));
    auto t3 = prim("cond_p", "2pσz", l, {{0, sz}, {1, pm}}, 2.0);
    return std::vector<ParamUnitary>{t1, t2, t3};
  };
  out.unitary = trotter(2 * trotter_half_order_for(p), terms_at(p));
  out.cost_bound = trotter_cost_bound(3, trotter_half_order_for(p), bch_cost_bound(p));
  const Operator eff = axis == Axis::X ? b + b.adjoint() : (b - b.adjoint()) * kI;
  out.generator = embed_product(l, {{0, sz}, {1, eff}});
  out.ideal = out.generator;
  out.lower_bound_depth = depth_of(terms_at(1));
  return out;
}

Synthesis anharmonicity_gate(int p, std::size_t cutoff) {
  if (p < 1) throw std::invalid_argument("p must be at least 1");
  const auto l = HilbertLayout::qubit_modes({cutoff});
  const auto n = number(cutoff);
  const double r = 1.0 / std::numbers::sqrt2;
  auto terms_at = [&](int order) {
    auto a = prim("cond_n", "nσx", l, {{0, pauli(Axis::X)}, {1, n}}, r);
    auto b = prim("cond_n", "nσy", l, {{0, pauli(Axis::Y)}, {1, n}}, -r);
    auto lin = prim("cond_n", "nσz", l, {{0, pauli(Axis::Z)}, {1, n}}, -1.0);
    return std::vector<ParamUnitary>{commutator_term(order, a, b), lin};
  };
  Synthesis out;
  out.name = "anharmonicity";
  out.cost_bound = trotter_cost_bound(2, trotter_half_order_for(p), bch_cost_bound(p));
  out.unitary = trotter(2 * trotter_half_order_for(p), terms_at(p));
  const auto id = Operator::identity(n.layout());
  out.generator = embed_product(l, {{0, pauli(Axis::Z)}, {1, n * (n - id)}});
  out.ideal = out.generator;
  out.order = p + 0.5;
  out.lower_bound_depth = depth_of(terms_at(1));
  return out;
}

HubbardGates fermi_hubbard_gates(double u, double j, double tau) {
  // Hard-core restriction: two modes with cutoff 1, basis |n1 n2>.
  const auto ml = HilbertLayout::qubit_modes({1, 1}).tail(1);
  const auto a = annihilation(1);
  const auto n = number(1);
  const auto nn = embed_product(ml, {{0, n}, {1, n}});
  const auto g = embed_product(ml, {{0, a.adjoint()}, {1, a}});
  const auto hop = g + g.adjoint();
  HubbardGates h;
  h.same = expm_hermitian(nn, -u * tau).data();
  h.hop = expm_hermitian(hop, j * tau).data();
  h.fswap = Matrix::Zero(4, 4);
  h.fswap(0, 0) = 1;
  h.fswap(1, 2) = 1;
  h.fswap(2, 1) = 1;
  h.fswap(3, 3) = -1;
  const auto ntot = embed(n, ml, 0) + embed(n, ml, 1);
  h.fswap_from_hop = expm_hermitian(ntot, std::numbers::pi / 2).data() *
                     expm_hermitian(hop, -std::numbers::pi / 2).data();
  return h;
}

DynamicsTrace run_dynamics(const Matrix& step, double dt, std::size_t steps,
                           const Vector& psi0, const Matrix& leakage_projector,
                           const std::vector<Matrix>& population_projectors) {
  DynamicsTrace tr;
  tr.populations.resize(population_projectors.size());
  Vector psi = psi0;
  for (std::size_t i = 0; i <= steps; ++i) {
    tr.times.push_back(dt * static_cast<double>(i));
    tr.autocorrelation.push_back(psi0.dot(psi).real());
    tr.norm.push_back(psi.squaredNorm());
    if (leakage_projector.size())
      tr.leakage.push_back((leakage_projector * psi).squaredNorm());
    for (std::size_t k = 0; k < population_projectors.size(); ++k)
      tr.populations[k].push_back((population_projectors[k] * psi).squaredNorm());
    if (i < steps) psi = step * psi;
  }
  return tr;
}

}  // namespace bosynth
