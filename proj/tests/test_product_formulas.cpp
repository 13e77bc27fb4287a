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

#include "bosynth/fock.hpp"
#include "bosynth/product_formulas.hpp"

using namespace bosynth;

namespace {

constexpr std::size_t kCut = 15;

struct Testbed {
  HilbertLayout layout = HilbertLayout::qubit_modes({kCut});
  Operator ha = embed_product(layout, {{0, pauli(Axis::X)}, {1, position(kCut)}});
  Operator hb = embed_product(layout, {{0, pauli(Axis::Y)}, {1, position(kCut)}});
  ParamUnitary ua = primitive("cond_x", "xσx", ha);
  ParamUnitary ub = primitive("cond_x", "xσy", hb);

  // exp(t²[iA, iB]) by direct exponentiation of the commutator.
  std::function<Matrix(double)> target() const {
    const Matrix k = -(ha.data() * hb.data() - hb.data() * ha.data());
    return [k](double t) { return expm(Matrix(k * (t * t))); };
  }
};

double slope(const ParamUnitary& u, const std::function<Matrix(double)>& target) {
  const auto g = default_fit_grid();
  return fit_power_law_above(g, error_sweep(u, target, g)).exponent;
}

}  // namespace

TEST_SUITE("product_formulas") {
  TEST_CASE("primitive evaluation properties") {
    Testbed tb;
    CHECK(distance(tb.ua.matrix(0.0), Matrix::Identity(32, 32)) < 1e-10);
    for (double t : {-10.0, -0.3, 2.0, 10.0}) {
      CHECK(is_unitary(tb.ua.matrix(t), 1e-10));
      CHECK(distance(tb.ua.matrix(-t), tb.ua.matrix(t).adjoint()) < 1e-10);
    }
    const Matrix oracle = expm(Matrix(tb.ha.data() * cplx(0.0, 0.4)));
    CHECK(distance(tb.ua.matrix(0.4), oracle) < 1e-12);
  }

  TEST_CASE("BCH constants follow the closed form") {
    for (int p = 1; p <= 3; ++p)
      for (int k : {1, 3}) {
        const double e = (k + 1.0) / (2.0 * p + k + 1.0);
        const double r = std::pow(2.0, e) / (4.0 * (2.0 - std::pow(2.0, e)));
        const auto c = bch_constants(p, k);
        CHECK(c.r == doctest::Approx(r).epsilon(1e-15));
        CHECK(c.beta == doctest::Approx(std::pow(2.0 * r, 1.0 / (k + 1))).epsilon(1e-15));
        CHECK(c.gamma == doctest::Approx(std::pow(0.25 + r, 1.0 / (k + 1))).epsilon(1e-15));
      }
  }

  TEST_CASE("BCH of commuting generators is the identity") {
    Testbed tb;
    const auto u = bch(1, 1, tb.ua, tb.ua);
    CHECK(distance(u.matrix(0.3), Matrix::Identity(32, 32)) < 1e-12);
  }

  TEST_CASE("BCH error exponents on the conditional-position testbed") {
    Testbed tb;
    for (int p = 1; p <= 2; ++p) {
      const double s = slope(bch(p, 1, tb.ua, tb.ub), tb.target());
      CHECK(s >= 2 * p + 0.7);
      CHECK(s <= 2 * p + 1.3);
    }
  }

  TEST_CASE("BCH fit exponent lies in the expected window") {
    Testbed tb;
    const auto g = default_fit_grid();
    const auto f = fit_power_law_above(g, error_sweep(bch(1, 1, tb.ua, tb.ub), tb.target(), g));
    CHECK(f.exponent >= 2.7);
    CHECK(f.exponent <= 3.3);
    CHECK(f.residual < tolerances().fit_residual_cap);
  }

  TEST_CASE("BCH gate counts") {
    Testbed tb;
    for (int p = 1; p <= 3; ++p) {
      const auto u = bch(p, 1, tb.ua, tb.ub);
      const auto raw = static_cast<std::uint64_t>(4 * std::pow(6, p - 1));
      CHECK(u.cost().total == raw);
      CHECK(symmetrize(u).cost().total == 2 * raw);
      CHECK(u.cost().by_kind.at("cond_x") == raw);
      if (p <= 2) CHECK(u.compile(0.2).size() == raw);
    }
  }

  TEST_CASE("BCH inversion and compiled evaluation") {
    Testbed tb;
    for (int p = 1; p <= 2; ++p) {
      const auto u = bch(p, 1, tb.ua, tb.ub);
      const double t = 0.3;
      CHECK(distance(u.matrix(-t), u.matrix(t).adjoint()) < 1e-9);
      CHECK(distance(u.compile(t).evaluate().data(), u.matrix(t)) < 1e-10);
      CHECK(is_unitary(u.matrix(t), 1e-9));
    }
  }

  TEST_CASE("symmetrized BCH gains at least one order") {
    Testbed tb;
    const auto u = bch(1, 1, tb.ua, tb.ub);
    CHECK(slope(symmetrize(u), tb.target()) >= slope(u, tb.target()) + 1.0);
  }

  TEST_CASE("symmetrize of a palindrome is two half steps") {
    Testbed tb;
    const auto pal = product({tb.ua, tb.ub, tb.ua});
    const Matrix half = pal.matrix(0.2);
    CHECK(distance(symmetrize(pal).matrix(0.4), half * half) < 1e-12);
    CHECK(symmetrize(pal).cost().total == 2 * pal.cost().total);
  }

  TEST_CASE("Trotter of a single term and of commuting terms is exact") {
    Testbed tb;
    CHECK(distance(trotter(2, {tb.ua}).matrix(0.7), tb.ua.matrix(0.7)) < 1e-10);
    const auto l = tb.layout;
    const auto z = primitive("qubit_rot", "σz", embed(pauli(Axis::Z), l, 0));
    const auto n = primitive("rot", "n", embed(number(kCut), l, 1));
    const Operator g = embed(pauli(Axis::Z), l, 0) + embed(number(kCut), l, 1);
    CHECK(distance(trotter(4, {z, n}).matrix(0.9), expm_hermitian(g, 0.9).data()) < 1e-10);
  }

  TEST_CASE("Trotter error exponents") {
    const auto q = HilbertLayout::qubit();
    const auto x = primitive("q", "σx", pauli(Axis::X)), z = primitive("q", "σz", pauli(Axis::Z));
    const Operator g = pauli(Axis::X) + pauli(Axis::Z);
    const auto oracle = [g](double t) { return expm(Matrix(g.data() * cplx(0.0, t))); };
    for (int k = 1; k <= 2; ++k) CHECK(std::abs(slope(trotter(2 * k, {x, z}), oracle) - (2 * k + 1)) < 0.3);
    const auto l = HilbertLayout::qubit_modes({kCut});
    const auto x2 = embed_product(l, {{0, pauli(Axis::X)}, {1, position(kCut) * position(kCut)}});
    const auto p2 = embed_product(l, {{0, pauli(Axis::X)}, {1, momentum(kCut) * momentum(kCut)}});
    const auto sum = x2 + p2;
    const auto oracle2 = [sum](double t) { return expm(Matrix(sum.data() * cplx(0.0, t))); };
    for (int k = 1; k <= 2; ++k) {
      const auto tr = trotter(2 * k, {primitive("q", "x2", x2), primitive("q", "p2", p2)});
      CHECK(std::abs(slope(tr, oracle2) - (2 * k + 1)) < 0.3);
    }
    (void)q;
  }

  TEST_CASE("Trotter counts") {
    const auto x = primitive("q", "σx", pauli(Axis::X)), z = primitive("q", "σz", pauli(Axis::Z));
    CHECK(trotter(4, {x, z}).cost().total == 20);
    CHECK(trotter(2, {x, z}, 3).cost().total == 12);
    CHECK(trotter(2, {x, z}, 1, true).cost().total == 3);
    CHECK(distance(trotter(2, {x, z}, 1, true).matrix(0.3), trotter(2, {x, z}).matrix(0.3)) < 1e-14);
    CHECK(trotter_constraint_ok(2, 1, 0.1, 1));
    CHECK_FALSE(trotter_constraint_ok(2, 2, 1.0, 1));
  }

  TEST_CASE("timeslice") {
    const auto x = primitive("q", "σx", pauli(Axis::X)), z = primitive("q", "σz", pauli(Axis::Z));
    const Operator g = pauli(Axis::X) + pauli(Axis::Z);
    const std::function<Matrix(double)> oracle = [g](double t) {
      return expm(Matrix(g.data() * cplx(0.0, t)));
    };
    const auto tr = trotter(2, {x, z});
    const double t = 1.0;
    const double single = distance(tr.matrix(t), oracle(t));
    CHECK(timeslice(tr, oracle, t, 2 * single, 3.0, 2.0).r == 1);
    const auto a = timeslice(tr, oracle, t, 1e-4, 3.0, spectral_norm(g));
    const auto b = timeslice(tr, oracle, t, 5e-5, 3.0, spectral_norm(g));
    CHECK(a.error <= 1e-4);
    CHECK(static_cast<double>(b.r) <= 2.0 * std::pow(2.0, 1.0 / 2.0) * static_cast<double>(a.r));
    CHECK(distance(repeat(tr, a.r - 1).matrix(t), oracle(t)) > 1e-4);
    double prev = 1e9;
    for (std::size_t r : {1u, 2u, 4u, 8u, 16u}) {
      const double e = distance(repeat(tr, r).matrix(t), oracle(t));
      CHECK(e < prev);
      prev = e;
    }
    CHECK_THROWS_AS(timeslice(tr, oracle, t, 1e-14, 3.0, 2.0, 8), ResourceError);
    CHECK(is_unitary(a.sliced.matrix(t), 1e-9));
  }

  TEST_CASE("power-law fits on synthetic data") {
    const auto g = default_fit_grid();
    std::vector<double> cube, quad;
    for (double t : g) {
      cube.push_back(t * t * t);
      quad.push_back(5 * t * t);
    }
    const auto f3 = fit_power_law(g, cube);
    CHECK(std::abs(f3.exponent - 3.0) < 1e-9);
    const auto f2 = fit_power_law(g, quad);
    CHECK(f2.exponent == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(f2.prefactor == doctest::Approx(5.0).epsilon(1e-10));
    CHECK(f2.residual < 1e-12);
    CHECK_THROWS(fit_power_law({1, 2, 3}, {1, 2, 3}));
    std::vector<double> floored = cube;
    floored[0] = 1e-16;
    CHECK(fit_power_law_above(g, floored).used == g.size() - 1);
  }
}
