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
#include <numbers>
#include <random>

#include "bosynth/fock.hpp"
#include "bosynth/linalg.hpp"

using namespace bosynth;

namespace {

Matrix random_matrix(std::size_t d, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix m(d, d);
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

// Truncated Taylor series, summed until the terms vanish.
Matrix series_exp(const Matrix& a) {
  Matrix sum = Matrix::Identity(a.rows(), a.cols());
  Matrix term = sum;
  for (int n = 1; n < 200; ++n) {
    term = term * a / static_cast<double>(n);
    sum += term;
    if (term.norm() < 1e-18) break;
  }
  return sum;
}

// Largest singular value from the Hermitian eigenproblem of A†A.
double gram_norm(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.adjoint() * a);
  return std::sqrt(std::max(0.0, es.eigenvalues().maxCoeff()));
}

Operator plain(const Matrix& m) {
  return Operator(HilbertLayout::plain(static_cast<std::size_t>(m.rows())), m);
}

}  // namespace

TEST_SUITE("tensor_core") {
  TEST_CASE("layout dimension and mixed-radix indexing") {
    const auto l = HilbertLayout::qubit_modes({3});
    CHECK(l.dim() == 8);
    CHECK(l.index_of({1, 2}) == 1 * 4 + 2);
    CHECK(l.digits_of(6) == std::vector<std::size_t>{1, 2});
    const auto l2 = HilbertLayout::qubit_modes({2, 3});
    for (std::size_t i = 0; i < l2.dim(); ++i) CHECK(l2.index_of(l2.digits_of(i)) == i);
    CHECK(l2.dim() == 2 * 3 * 4);
  }

  TEST_CASE("layout rejects malformed factors") {
    CHECK_THROWS_AS(HilbertLayout(std::vector<Factor>{}), LayoutError);
    CHECK_THROWS_AS(HilbertLayout({Factor{FactorKind::Qubit, 3}}), LayoutError);
    CHECK_THROWS_AS(HilbertLayout::mode(0), LayoutError);
    CHECK_THROWS_AS(HilbertLayout::qubit_modes({2}).index_of({2, 0}), LayoutError);
  }

  TEST_CASE("operator rejects shape mismatch and non-finite entries") {
    CHECK_THROWS_AS(Operator(HilbertLayout::qubit(), Matrix::Identity(3, 3)), LayoutError);
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 1) = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS(Operator(HilbertLayout::qubit(), bad));
  }

  TEST_CASE("kron elementwise definition") {
    std::mt19937_64 rng(3);
    const Matrix a = random_matrix(2, rng), b = random_matrix(3, rng);
    const auto k = kron(plain(a), plain(b));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) CHECK(std::abs(k(3 * i + r, 3 * j + c) - a(i, j) * b(r, c)) < 1e-15);
  }

  TEST_CASE("kron examples") {
    const auto i2 = Operator::identity(HilbertLayout::qubit());
    CHECK(kron(i2, i2).data().isApprox(Matrix::Identity(4, 4)));
    Matrix p0 = Matrix::Zero(2, 2);
    p0(0, 0) = 1;
    const auto z0 = kron(pauli(Axis::Z), plain(p0));
    Matrix expect = Matrix::Zero(4, 4);
    expect(0, 0) = 1;
    expect(2, 2) = -1;
    CHECK((z0.data() - expect).norm() == doctest::Approx(0.0));
    const auto xa = kron(pauli(Axis::X), annihilation(1));
    CHECK(std::abs(xa(0, 3) - cplx(1.0)) < 1e-15);
    CHECK(xa.layout().dim() == 4);
  }

  TEST_CASE("kron mixed product and associativity") {
    std::mt19937_64 rng(5);
    const auto a = plain(random_matrix(2, rng)), b = plain(random_matrix(3, rng));
    const auto c = plain(random_matrix(2, rng)), d = plain(random_matrix(3, rng));
    CHECK(distance((kron(a, b) * kron(c, d)).data(), kron(a * c, b * d).data()) < 1e-12);
    const auto e = plain(random_matrix(2, rng));
    CHECK(distance(kron(kron(a, b), e).data(), kron(a, kron(b, e)).data()) < 1e-12);
    CHECK(kron(kron(a, b), e).layout() == kron(a, kron(b, e)).layout());
  }

  TEST_CASE("expm examples") {
    const auto z = Operator::zero(HilbertLayout::qubit());
    CHECK(distance(expm(z).data(), Matrix::Identity(2, 2)) < 1e-15);
    const auto rot = expm(pauli(Axis::X) * cplx(0.0, std::numbers::pi / 2));
    CHECK(distance(rot.data(), (pauli(Axis::X) * kI).data()) < 1e-14);
    const std::size_t cut = 6;
    const auto l = HilbertLayout::qubit_modes({cut});
    Matrix up = Matrix::Zero(2, 2), dn = Matrix::Zero(2, 2);
    up(0, 1) = 1;
    dn(1, 0) = 1;
    const auto g = embed_product(l, {{0, Operator(HilbertLayout::qubit(), up)}, {1, creation(cut)}}) +
                   embed_product(l, {{0, Operator(HilbertLayout::qubit(), dn)}, {1, annihilation(cut)}});
    const double t = 0.7;
    const Vector out = expm(g * cplx(0.0, t)).data() * basis_state(l, {1, 0});
    CHECK(std::abs(out(l.index_of({1, 0})) - std::cos(t)) < 1e-13);
    CHECK(std::abs(out(l.index_of({0, 1})) - kI * std::sin(t)) < 1e-13);
  }

  TEST_CASE("expm agrees with a Taylor series and the Hermitian path") {
    std::mt19937_64 rng(11);
    for (std::size_t d : {2u, 5u, 12u}) {
      Matrix a = random_matrix(d, rng);
      a *= 0.5 / gram_norm(a);
      CHECK(distance(expm(a), series_exp(a)) < 1e-13);
      const Matrix h = (a + a.adjoint()) * 0.5;
      CHECK(distance(expm_hermitian(plain(h), 1.3).data(), series_exp(h * cplx(0.0, 1.3))) < 1e-12);
    }
  }

  TEST_CASE("expm of anti-Hermitian matrices is unitary and invertible") {
    std::mt19937_64 rng(7);
    for (std::size_t d : {4u, 16u, 64u}) {
      Matrix a = random_matrix(d, rng);
      a = Matrix((a - a.adjoint()) * 0.5);
      a *= 10.0 / gram_norm(a);
      const Matrix u = expm(a);
      CHECK((u.adjoint() * u - Matrix::Identity(d, d)).norm() < 1e-10);
      CHECK(distance(expm(a) * expm(Matrix(-a)), Matrix::Identity(d, d)) < 1e-10);
    }
  }

  TEST_CASE("expm dimension cap") {
    CHECK_THROWS_AS(expm(Matrix::Zero(8, 8), 4), ResourceError);
  }

  TEST_CASE("spectral norm examples and oracle") {
    CHECK(spectral_norm(Matrix::Identity(5, 5)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(spectral_norm(annihilation(3)) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
    Matrix d = Matrix::Zero(2, 2);
    d(0, 0) = 1;
    d(1, 1) = -2;
    CHECK(spectral_norm(d) == doctest::Approx(2.0).epsilon(1e-14));
    std::mt19937_64 rng(13);
    for (std::size_t dim : {3u, 20u, 600u}) {
      const Matrix m = random_matrix(dim, rng);
      CHECK(spectral_norm(m) == doctest::Approx(gram_norm(m)).epsilon(1e-9));
    }
  }

  TEST_CASE("spectral norm is submultiplicative") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 10; ++trial) {
      const Matrix a = random_matrix(6, rng), b = random_matrix(6, rng);
      CHECK(spectral_norm(Matrix(a * b)) <= spectral_norm(a) * spectral_norm(b) + 1e-10);
    }
  }

  TEST_CASE("unitary and Hermitian predicates") {
    const auto i2 = Operator::identity(HilbertLayout::qubit());
    CHECK(is_unitary(i2));
    CHECK_FALSE(is_unitary(i2 * cplx(2.0)));
    CHECK(is_hermitian(pauli(Axis::Y)));
    CHECK_FALSE(is_hermitian(pauli(Axis::Y) * pauli(Axis::X)));
    CHECK(is_hermitian(pauli(Axis::Y) * pauli(Axis::X) * kI));
  }

  TEST_CASE("commutators") {
    CHECK(distance(commutator(pauli(Axis::X), pauli(Axis::Y)).data(),
                   (pauli(Axis::Z) * cplx(0.0, 2.0)).data()) < 1e-15);
    CHECK(spectral_norm(commutator(pauli(Axis::X), pauli(Axis::X))) == 0.0);
    Matrix expect = Matrix::Zero(4, 4);
    for (int i = 0; i < 3; ++i) expect(i, i) = cplx(0.0, 0.5);
    expect(3, 3) = cplx(0.0, -1.5);
    CHECK(distance(commutator(position(3), momentum(3)).data(), expect) < 1e-14);
    CHECK(distance(anticommutator(pauli(Axis::X), pauli(Axis::Y)).data(), Matrix::Zero(2, 2)) < 1e-15);
  }
}
