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

#include "bosynth/registry.hpp"

#include <numbers>
#include <sstream>

#include "bosynth/bench.hpp"

namespace bosynth {

namespace {

Matrix outside(const HilbertLayout& l, const Operator& inside) {
  return Matrix::Identity(static_cast<Eigen::Index>(l.dim()),
                          static_cast<Eigen::Index>(l.dim())) -
         inside.data();
}

Case with_state(Synthesis s, const std::vector<std::size_t>& digits) {
  Case c;
  c.psi0 = basis_state(s.generator.layout(), digits);
  c.synthesis = std::move(s);
  return c;
}

Case build_conditional_rotation(const ExperimentConfig& c) {
  return with_state(conditional_rotation_phase_space(c.orders.bch, c.cutoff, parse_axis(c.axis)),
                    {0, 2});
}

Case build_conditional_rotation_fock(const ExperimentConfig& c) {
  return with_state(conditional_rotation_fock(c.orders.bch, c.cutoff), {0, 2});
}

Case build_nonlinear(const ExperimentConfig& c) {
  return with_state(nonlinear_hamiltonian(c.omega, c.kappa, c.orders.bch, c.cutoff), {0, 2});
}

Case build_state_prep_T(const ExperimentConfig& c) {
  auto out = with_state(state_prep_T(c.k, c.orders.bch, c.cutoff), {1, 0});
  out.natural_time = state_prep_exact_time(c.k, 0, c.cutoff);
  return out;
}

Case build_state_prep_protected(const ExperimentConfig& c) {
  auto out = with_state(state_prep_protected(c.k, c.orders.bch, c.cutoff, 1), {1, 0});
  out.natural_time = state_prep_exact_time(c.k, 0, c.cutoff, true);
  return out;
}

Case build_T2(const ExperimentConfig& c) {
  const BchVariant v{c.orders.bch, c.orders.symmetrized};
  auto out = with_state(state_prep_T2_variant(v, c.orders.trotter, 1, c.cutoff), {1, 0});
  out.natural_time = state_prep_exact_time(2, 0, c.cutoff);
  return out;
}

Case build_P2(const ExperimentConfig& c) {
  const BchVariant v{c.orders.bch, c.orders.symmetrized};
  auto out = with_state(state_prep_P2_variant(v, c.orders.trotter, 1, c.cutoff), {1, 0});
  out.natural_time = state_prep_exact_time(2, 0, c.cutoff, true);
  return out;
}

Case build_hom(const ExperimentConfig& c) {
  auto out = with_state(conditional_beam_splitter(c.orders.bch, c.cutoff), {0, 1, 1});
  const auto& l = out.synthesis.generator.layout();
  const auto low = fock_projector(c.cutoff, 2);
  out.leakage_projector = outside(l, embed_product(l, {{1, low}, {2, low}}));
  for (std::size_t n = 0; n <= 2; ++n) {
    const auto pn = fock_projector(c.cutoff, n) - (n ? fock_projector(c.cutoff, n - 1)
                                                      : Operator::zero(low.layout()));
    out.populations.emplace_back("mode1_n" + std::to_string(n), embed(pn, l, 1).data());
  }
  const auto one = fock_projector(c.cutoff, 1) - fock_projector(c.cutoff, 0);
  out.populations.emplace_back("both_single", embed_product(l, {{1, one}, {2, one}}).data());
  out.natural_time = std::numbers::pi / 4;
  return out;
}

Case build_projected(const ExperimentConfig& c) {
  return with_state(conditional_beam_splitter_projected(c.orders.bch, c.cutoff), {0, 1, 1});
}

Case build_pauli(const ExperimentConfig& c) {
  auto out = with_state(effective_pauli_span01(parse_axis(c.axis), c.orders.bch, c.cutoff), {0, 0});
  const auto& l = out.synthesis.generator.layout();
  out.leakage_projector = outside(l, embed(fock_projector(c.cutoff, 1), l, 1));
  return out;
}

Case build_anharmonicity(const ExperimentConfig& c) {
  return with_state(anharmonicity_gate(c.orders.bch, c.cutoff), {0, 2});
}

Case build_cross_kerr(const ExperimentConfig& c) {
  return with_state(cross_kerr(c.orders.bch, c.cutoff), {0, 1, 1});
}

Case build_fswap(const ExperimentConfig&) {
  const HilbertLayout l({Factor{FactorKind::Mode, 2}, Factor{FactorKind::Mode, 2}});
  const auto a = annihilation(1);
  const auto n = number(1);
  const auto g = embed_product(l, {{0, a.adjoint()}, {1, a}});
  const auto hop = g + g.adjoint();
  const auto ntot = embed(n, l, 0) + embed(n, l, 1);
  Synthesis s;
  s.name = "fswap";
  s.unitary = product({primitive("number_phase", "n1+n2", ntot),
                       scale(primitive("hop", "hop", hop), -1.0)},
                      "fswap");
  s.generator = ntot - hop;
  s.ideal = s.generator;
  s.order = std::numeric_limits<double>::infinity();
  s.cost_bound = 2.0;
  s.lower_bound_depth = 2;
  auto out = with_state(std::move(s), {1, 1});
  out.natural_time = std::numbers::pi / 2;
  return out;
}

Case build_s1_displacement(const ExperimentConfig& c) {
  Synthesis s;
  s.name = "s1-displacement";
  s.unitary = s1_from_conditional_displacements(c.cutoff);
  s.generator = s1(c.cutoff).generator * cplx(s1_time_from_displacement(1.0));
  s.ideal = s.generator;
  s.order = 2.0;
  s.cost_bound = 4.0;
  return with_state(std::move(s), {1, 0});
}

std::vector<ParamDoc> orders_doc(const std::string& meaning) {
  return {{"cutoff", "photon cutoff per mode", "8"}, {"orders.bch", meaning, "1"}};
}

std::vector<AppInfo> make_registry() {
  std::vector<AppInfo> r;
  r.push_back({"conditional-rotation", "qubit-conditioned phase-space rotation from x, p primitives",
               "exp(it n σᵏ), built as exp(it (x² + p² - 1/2) σᵏ)",
               [] {
                 auto d = orders_doc("target order p, error O(t^{p+1/2})");
                 d.push_back({"axis", "conditioning axis k", "z"});
                 return d;
               }(),
               "probe state |g,2>; exact autocorrelation cos 2t",
               build_conditional_rotation});
  r.push_back({"conditional-rotation-fock", "conditional rotation from MULT of S1 encodings",
               "exp(it n σᶻ) via diag(n, I - aa†)", orders_doc("order p; MULT runs at 2p"),
               "probe state |g,2>", build_conditional_rotation_fock});
  r.push_back({"nonlinear-hamiltonian", "Kerr-type Hamiltonian from MULT and POWER encodings",
               "upper-left block exp(it (ω a†a + (κ/2) a†² a²))",
               [] {
                 auto d = orders_doc("q, error O(t^{q+1/4})");
                 d.push_back({"omega", "linear frequency ω", "1"});
                 d.push_back({"kappa", "Kerr strength κ", "1"});
                 return d;
               }(),
               "probe state |g,2>", build_nonlinear});
  r.push_back({"state-prep-T", "Fock state preparation T_k from ARB_POWER",
               "exp(it [[0, a†^k], [a^k, 0]])",
               [] {
                 auto d = orders_doc("order p");
                 d.push_back({"k", "target Fock state", "2"});
                 return d;
               }(),
               "exact time t = (2n+1)π/(2√k!) maps |1,0> to |0,k>", build_state_prep_T});
  r.push_back({"state-prep-protected", "protected preparation P_k with error syndrome",
               "exp(it [[0, a†^k |0><0|], [|0><0| a^k, 0]])",
               [] {
                 auto d = orders_doc("order p");
                 d.push_back({"k", "target Fock state", "2"});
                 return d;
               }(),
               "exact time t = (2n+1)π/(4√k!); |1,b> fixed for b != 0",
               build_state_prep_protected});
  r.push_back({"state-prep-T2", "T_2 as one ADD of two S1 per slice",
               "exp(it [[0, a†²], [a², 0]])",
               {{"cutoff", "photon cutoff", "8"},
                {"orders.bch", "BCH level 1 or 2", "1"},
                {"orders.symmetrized", "symmetrized BCH", "false"},
                {"orders.trotter", "Trotter order", "2"},
                {"slices", "time slices", "1"}},
               "exact time t = π/(2√2)", build_T2});
  r.push_back({"state-prep-P2", "protected T_2, Strang split of T̃_2 and its R_Z0 mirror",
               "exp(it [[0, a†² |0><0|], [|0><0| a², 0]])",
               {{"cutoff", "photon cutoff", "8"},
                {"orders.bch", "BCH level 1 or 2", "1"},
                {"orders.symmetrized", "symmetrized BCH", "false"},
                {"orders.trotter", "Trotter order", "2"},
                {"slices", "time slices", "1"}},
               "exact time t = π/(4√2)", build_P2});
  r.push_back({"hom-beam-splitter", "conditional beam splitter from x1x2 and p1p2 commutators",
               "exp(-it (a1†a2 + a1a2†) σᶻ)", orders_doc("order p, error O(t^{p+1/2})"),
               "probe |g,1,1>; both-single probability vanishes at t = π/4", build_hom});
  r.push_back({"cond-beam-projector", "conditional beam splitter with the (1 - n1n2) projector",
               "Hermitian part of -(a1†a2 + a1a2†)(1 - n1n2) σᶻ", orders_doc("BCH level"),
               "overall order not claimed", build_projected});
  r.push_back({"effective-pauli", "effective Pauli rotations on span{|0>,|1>}",
               "exp(it σ_eff σᶻ)",
               [] {
                 auto d = orders_doc("order p");
                 d.push_back({"axis", "x, y or z", "z"});
                 return d;
               }(),
               "t plays the role of λ²; z is exact on the restricted span", build_pauli});
  r.push_back({"anharmonicity", "anharmonicity gate", "exp(it n(n-1) σᶻ)",
               orders_doc("order p"), "identity on span{|0>,|1>}", build_anharmonicity});
  r.push_back({"cross-kerr", "cross-Kerr gate from one BCH commutator", "exp(it n1 n2 σᶻ)",
               orders_doc("order p"), "same-site interaction of the hard-core Hubbard model",
               build_cross_kerr});
  r.push_back({"fswap", "fermionic SWAP from number phase and hopping",
               "exp(it (n1 + n2 - hop)) on two hard-core modes", {},
               "equals FSWAP at t = π/2", build_fswap});
  r.push_back({"s1-displacement", "S1 from conditional displacements",
               "S1(2α) at displacement α", {{"cutoff", "photon cutoff", "8"}},
               "agreement to O(α²)", build_s1_displacement});
  return r;
}

}  // namespace

const std::vector<AppInfo>& applications() {
  static const std::vector<AppInfo> reg = make_registry();
  return reg;
}

const AppInfo& find_application(const std::string& name) {
  for (const auto& a : applications())
    if (a.name == name) return a;
  throw UsageError("unknown application: " + name);
}

std::string list_applications() {
  std::ostringstream os;
  for (const auto& a : applications()) os << a.name << "  " << a.summary << "\n";
  return os.str();
}

std::string describe(const std::string& name) {
  const auto& a = find_application(name);
  std::ostringstream os;
  os << a.name << "\n  " << a.summary << "\n  target: " << a.target << "\n";
  if (!a.params.empty()) {
    os << "  parameters:\n";
    for (const auto& p : a.params)
      os << "    " << p.key << ": " << p.meaning << " (default " << p.fallback << ")\n";
  }
  os << "  " << a.notes << "\n";
  return os.str();
}

}  // namespace bosynth
