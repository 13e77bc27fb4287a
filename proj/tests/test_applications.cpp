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


#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "bosynth/applications.hpp"
#include "bosynth/product_formulas.hpp"

using namespace bosynth;

namespace {

constexpr double kPi = std::numbers::pi;

Operator ket_bra(int r, int c) {
  Matrix m = Matrix::Zero(2, 2);
  m(r, c) = 1.0;
  return Operator(HilbertLayout::qubit(), m);
}

Operator block_generator(const Operator& a) {
  return kron(ket_bra(0, 1), a) + kron(ket_bra(1, 0), a.adjoint());
}

Operator creation_power(std::size_t cutoff, std::size_t k) {
  Operator r = Operator::identity(HilbertLayout::mode(cutoff));
  for (std::size_t i = 0; i < k; ++i) r = r * creation(cutoff);
  return r;
}

Matrix evolve(const Operator& g, double t) { return expm(Matrix(g.data() * cplx(0.0, t))); }

std::complex<double> amp(const Matrix& u, const HilbertLayout& l,
                         std::vector<std::size_t> out, std::vector<std::size_t> in) {
  return u(static_cast<Eigen::Index>(l.index_of(out)), static_cast<Eigen::Index>(l.index_of(in)));
}

double fitted(const Synthesis& s, const std::vector<double>& grid) {
  return fit_power_law_above(grid, error_sweep(s.unitary, s.exact_fn(), grid)).exponent;
}

const std::vector<double>& small_grid() {
  static const auto g = log_grid(1e-6, 1e-3, 12);
  return g;
}

}  // namespace

TEST_SUITE("applications") {
  TEST_CASE("nonlinear hamiltonian reference phases") {
    const std::size_t cut = 6;
    const auto l = HilbertLayout::qubit_modes({cut});
    const double t = 0.37;
    const auto lin = nonlinear_hamiltonian(1.3, 0.0, 1, cut);
    const Matrix e = lin.exact_fn()(t);
    for (std::size_t n = 0; n <= cut; ++n) {
      const auto z = amp(e, l, {0, n}, {0, n});
      CHECK(std::abs(z - std::polar(1.0, 1.3 * t * static_cast<double>(n))) < 1e-12);
    }
    const auto kerr = nonlinear_hamiltonian(0.0, 0.8, 1, cut);
    CHECK(std::abs(amp(kerr.exact_fn()(t), l, {0, 2}, {0, 2}) - std::polar(1.0, 0.8 * t)) <
          1e-12);
    CHECK(std::abs(amp(kerr.exact_fn()(t), l, {0, 1}, {0, 1}) - 1.0) < 1e-12);
  }

  TEST_CASE("nonlinear hamiltonian synthesis order") {
    const auto s = nonlinear_hamiltonian(1.0, 1.0, 1, 8);
    CHECK(s.order == doctest::Approx(1.25));
    CHECK(fitted(s, log_grid(1e-5, 1e-2, 10)) >= s.order - 0.3);
    CHECK(static_cast<double>(s.unitary.cost().total) <= s.cost_bound);
    CHECK(distance(s.unitary.matrix(0.0), Matrix::Identity(s.generator.dim(), s.generator.dim())) <
          1e-10);
  }

  TEST_CASE("conditional rotation exact autocorrelation") {
    const std::size_t cut = 14;
    const auto s = conditional_rotation_phase_space(1, cut);
    const auto l = HilbertLayout::qubit_modes({cut});
    const Vector psi = basis_state(l, {0, 2});
    for (double t : {0.0, 0.3, 1.1, 2.5}) {
      const Vector v = s.ideal_fn()(t) * psi;
      CHECK(std::real(psi.dot(v)) == doctest::Approx(std::cos(2.0 * t)).epsilon(1e-12));
    }
    const Matrix id = Matrix::Identity(l.dim(), l.dim());
    CHECK(distance(s.unitary.matrix(0.0), id) < 1e-12);
  }

  TEST_CASE("conditional rotation routes") {
    const std::size_t cut = 8;
    const auto grid = log_grid(1e-5, 1e-2, 10);
    for (int p : {1, 2}) {
      const auto ps = conditional_rotation_phase_space(p, cut);
      CHECK(fitted(ps, grid) >= ps.order - 0.3);
      CHECK(static_cast<double>(ps.unitary.cost().total) <= ps.cost_bound);
    }
    const auto fr = conditional_rotation_fock(1, cut);
    CHECK(fitted(fr, grid) >= fr.order - 0.3);
    const auto l = HilbertLayout::qubit_modes({cut});
    const Matrix pr = embed(fock_projector(cut, cut - 2), l, 1).data();
    const auto ps = conditional_rotation_phase_space(1, cut);
    for (double t : {1e-3, 1e-2}) {
      const Matrix ideal = ps.ideal_fn()(t);
      const Matrix a = pr * ps.unitary.matrix(t) * pr;
      const Matrix b = pr * fr.unitary.matrix(t) * pr;
      const Matrix e = pr * ideal * pr;
      CHECK(distance(a, b) <= distance(a, e) + distance(b, e) + 1e-12);
    }
  }

  TEST_CASE("conditional rotation axes") {
    for (Axis k : {Axis::X, Axis::Y, Axis::Z}) {
      const auto [i, j] = cyclic_partners(k);
      const Matrix c = pauli(i).data() * pauli(j).data() - pauli(j).data() * pauli(i).data();
      CHECK(distance(c, pauli(k).data() * cplx(0.0, 2.0)) < 1e-14);
      const auto s = conditional_rotation_phase_space(1, 6, k);
      CHECK(fitted(s, log_grid(1e-5, 1e-2, 10)) >= s.order - 0.3);
    }
  }

  TEST_CASE("state preparation exact times") {
    CHECK(state_prep_exact_time(2, 0, 8) == doctest::Approx(kPi / (2.0 * std::sqrt(2.0))));
    CHECK(state_prep_exact_time(1, 0, 8) == doctest::Approx(kPi / 2.0));
    CHECK(state_prep_exact_time(2, 0, 8, true) == doctest::Approx(kPi / (4.0 * std::sqrt(2.0))));
    CHECK(state_prep_exact_time(3, 1, 8) == doctest::Approx(3.0 * kPi / (2.0 * std::sqrt(6.0))));
    CHECK_THROWS_AS(state_prep_exact_time(9, 0, 8), std::invalid_argument);
  }

  TEST_CASE("exact T_k transfers a qubit excitation into k bosons") {
    const std::size_t cut = 8;
    const auto l = HilbertLayout::qubit_modes({cut});
    for (std::size_t k = 1; k <= 3; ++k) {
      const Operator g = block_generator(creation_power(cut, k));
      CHECK(distance(g.data(), state_prep_generator(k, cut).data()) < 1e-12);
      const Matrix u = evolve(g, state_prep_exact_time(k, 0, cut));
      CHECK(std::abs(amp(u, l, {0, k}, {1, 0})) == doctest::Approx(1.0).epsilon(1e-10));
      CHECK(std::abs(amp(u, l, {0, 0}, {0, 0}) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("exact protected P_k and its syndrome") {
    const std::size_t cut = 8;
    const auto l = HilbertLayout::qubit_modes({cut});
    const Operator r = embed(vacuum_projector_flip(cut), l, 1);
    for (std::size_t k = 1; k <= 3; ++k) {
      const Operator g = block_generator(creation_power(cut, k));
      const Operator proj = g - r * g * r;
      CHECK(distance(proj.data(), protected_generator(k, cut).data()) < 1e-12);
      const Matrix u = evolve(proj, state_prep_exact_time(k, 0, cut, true));
      CHECK(std::abs(amp(u, l, {0, k}, {1, 0})) == doctest::Approx(1.0).epsilon(1e-10));
      for (std::size_t b = 1; b <= 4; ++b) {
        CHECK(std::abs(amp(u, l, {1, b}, {1, b})) == doctest::Approx(1.0).epsilon(1e-10));
      }
      for (std::size_t b = 0; b <= 4; ++b) {
        const Vector v = u * basis_state(l, {1, b});
        double q0 = 0.0;
        for (std::size_t n = 0; n <= cut; ++n) {
          q0 += std::norm(v(static_cast<Eigen::Index>(l.index_of({0, n}))));
        }
        CHECK(std::abs(q0 - (b == 0 ? 1.0 : 0.0)) < 1e-10);
      }
      Matrix sector = Matrix::Zero(l.dim(), l.dim());
      for (std::size_t b = 1; b <= cut; ++b) {
        const auto i = static_cast<Eigen::Index>(l.index_of({1, b}));
        sector(i, i) = 1.0;
      }
      CHECK((sector * u - u * sector).norm() < 1e-10);
    }
  }

  TEST_CASE("synthesized T2 and P2 variants") {
    const std::size_t cut = 4;
    const double t = state_prep_exact_time(2, 0, cut);
    auto err = [&](const Synthesis& s, double at) {
      return distance(s.unitary.matrix(at), s.exact_fn()(at));
    };
    const auto t1 = state_prep_T2_variant({1, false}, 2, 15, cut);
    const auto t1s = state_prep_T2_variant({1, true}, 2, 15, cut);
    const auto t2 = state_prep_T2_variant({2, false}, 2, 15, cut);
    const auto t2s = state_prep_T2_variant({2, true}, 2, 15, cut);
    CHECK(t1s.unitary.cost().total == 480);
    CHECK(err(t1s, t) < 1e-1);
    CHECK(err(t1, t) > err(t1s, t));
    CHECK(err(t2, t) > err(t2s, t));
    CHECK(err(t1, t) > err(t2, t));
    const double tp = state_prep_exact_time(2, 0, cut, true);
    const auto p1s = state_prep_P2_variant({1, true}, 2, 10, cut);
    CHECK(p1s.unitary.cost().total == 960);
    CHECK(err(p1s, tp) < 1e-1);
    CHECK(BchVariant{1, true}.label() == "1'");
    CHECK(BchVariant{2, false}.label() == "2");
  }

  TEST_CASE("state-prep T through arbitrary powers") {
    const auto s = state_prep_T(2, 2.0, 6);
    CHECK(distance(s.generator.data(), state_prep_generator(2, 6).data()) < 1e-12);
    CHECK(fitted(s, log_grid(1e-4, 1e-2, 8)) >= 1.7);
  }

  TEST_CASE("success probability bound") {
    const double t = state_prep_exact_time(2, 0, 3, true);
    const auto rep = success_probability_bound(0.2, 2, 2.0, 3, t);
    CHECK(rep.eps == doctest::Approx(0.1));
    CHECK(rep.op_error <= rep.eps);
    CHECK(rep.success_probability >= 0.8);
    CHECK(static_cast<double>(rep.s1_count) <= rep.s1_bound);
    CHECK(success_probability_bound(1.0, 2, 2.0, 3, t).r == 1);
    CHECK_THROWS(success_probability_bound(0.0, 2, 2.0, 3, t));
  }

  TEST_CASE("HOM beam splitter exact dip") {
    const std::size_t cut = 4;
    const auto s = conditional_beam_splitter(1, cut);
    const auto l = HilbertLayout::qubit_modes({cut, cut});
    const Vector v = s.exact_fn()(kPi / 4.0) * basis_state(l, {0, 1, 1});
    CHECK(std::norm(v(static_cast<Eigen::Index>(l.index_of({0, 1, 1})))) < 1e-10);
    CHECK(std::norm(v(static_cast<Eigen::Index>(l.index_of({0, 2, 0})))) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(std::norm(v(static_cast<Eigen::Index>(l.index_of({0, 0, 2})))) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(s.lower_bound_depth == 8);
    CHECK(fitted(s, small_grid()) >= s.order - 0.3);
    CHECK(static_cast<double>(s.unitary.cost().total) <= s.cost_bound);
  }

  TEST_CASE("cross-Kerr and anharmonicity") {
    const auto k = cross_kerr(1, 6);
    CHECK(k.lower_bound_depth == 4);
    CHECK(fitted(k, small_grid()) >= k.order - 0.3);
    const auto a = anharmonicity_gate(2, 15);
    CHECK(a.lower_bound_depth == 5);
    CHECK(fitted(a, small_grid()) >= 2.0);
    const auto l = HilbertLayout::qubit_modes({15});
    const Matrix e = a.exact_fn()(0.4);
    for (std::size_t q = 0; q < 2; ++q) {
      for (std::size_t n = 0; n < 2; ++n) CHECK(std::abs(amp(e, l, {q, n}, {q, n}) - 1.0) < 1e-12);
    }
    CHECK(std::abs(amp(e, l, {0, 2}, {0, 2}) - std::polar(1.0, 0.8)) < 1e-12);
  }

  TEST_CASE("effective Pauli gates on span{0,1}") {
    const std::size_t cut = 15;
    const auto l = HilbertLayout::qubit_modes({cut});
    const Matrix pr = embed(fock_projector(cut, 1), l, 1).data();
    const auto z = effective_pauli_span01(Axis::Z, 1, cut);
    CHECK(z.lower_bound_depth == 2);
    for (double t : {0.1, 0.7}) {
      CHECK(distance(pr * z.unitary.matrix(t) * pr, pr * z.exact_fn()(t) * pr) < 1e-10);
    }
    for (Axis ax : {Axis::X, Axis::Y}) {
      const auto s = effective_pauli_span01(ax, 1, cut);
      CHECK(s.lower_bound_depth == 9);
      const Matrix g = pr * s.generator.data() * pr;
      Matrix expect = Matrix::Zero(l.dim(), l.dim());
      for (std::size_t q = 0; q < 2; ++q) {
        for (std::size_t n = 0; n < 2; ++n) {
          for (std::size_t m = 0; m < 2; ++m) {
            const cplx sig = pauli(ax).data()(static_cast<Eigen::Index>(n),
                                              static_cast<Eigen::Index>(m));
            expect(static_cast<Eigen::Index>(l.index_of({q, n})),
                   static_cast<Eigen::Index>(l.index_of({q, m}))) = sig * (q == 0 ? 1.0 : -1.0);
          }
        }
      }
      CHECK(distance(g, expect) < 1e-12);
      const Vector psi = basis_state(l, {0, 0});
      std::vector<double> lam, leak;
      for (double t : small_grid()) {
        const Vector v = s.unitary.matrix(t) * psi;
        lam.push_back(std::sqrt(t));
        leak.push_back((v - pr * v).squaredNorm());
      }
      CHECK(fit_power_law_above(lam, leak, 1e-28).exponent >= 3.5);
    }
  }

  TEST_CASE("projected conditional beam splitter") {
    const auto s = conditional_beam_splitter_projected(1, 3);
    CHECK_FALSE(s.warnings.empty());
    CHECK(fitted(s, small_grid()) >= 1.0);
  }

  TEST_CASE("Fermi-Hubbard gate matrices") {
    const double u = 0.9, j = 0.6, tau = 0.7;
    const auto h = fermi_hubbard_gates(u, j, tau);
    Matrix same = Matrix::Identity(4, 4);
    same(3, 3) = std::polar(1.0, -u * tau);
    CHECK(distance(h.same, same) < 1e-12);
    Matrix hop = Matrix::Identity(4, 4);
    hop(1, 1) = hop(2, 2) = std::cos(j * tau);
    hop(1, 2) = hop(2, 1) = cplx(0.0, std::sin(j * tau));
    CHECK(distance(h.hop, hop) < 1e-12);
    Matrix fs = Matrix::Zero(4, 4);
    fs(0, 0) = 1.0;
    fs(1, 2) = fs(2, 1) = 1.0;
    fs(3, 3) = -1.0;
    CHECK(distance(h.fswap, fs) < 1e-12);
    CHECK(distance(h.fswap_from_hop, fs) < 1e-12);
  }

  TEST_CASE("dynamics conserves probability") {
    const std::size_t cut = 6;
    const auto s = conditional_rotation_phase_space(1, cut);
    const auto l = HilbertLayout::qubit_modes({cut});
    const double dt = 0.01;
    const Matrix step = s.unitary.matrix(dt);
    const Matrix leak = Matrix::Identity(l.dim(), l.dim()) - embed(fock_projector(cut, cut - 1), l, 1).data();
    const auto tr = run_dynamics(step, dt, 50, basis_state(l, {0, 2}), leak,
                                 {embed(fock_projector(cut, 2), l, 1).data()});
    REQUIRE(tr.times.size() == 51);
    CHECK(tr.autocorrelation.front() == doctest::Approx(1.0));
    for (std::size_t i = 0; i < tr.times.size(); ++i) {
      CHECK(tr.norm[i] == doctest::Approx(1.0).epsilon(1e-9));
      CHECK(tr.leakage[i] >= 0.0);
      CHECK(tr.populations[0][i] <= 1.0 + 1e-9);
    }
  }
}
