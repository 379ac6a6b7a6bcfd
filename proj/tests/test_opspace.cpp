// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qgt/opspace.hpp"

using namespace qgt;
using namespace qgt::test;

TEST_CASE("operator inner product") {
  CHECK(inner(pauli_i(), pauli_i()) == cplx{1, 0});
  CHECK(std::abs(inner(pauli_x(), pauli_y())) < 1e-15);
  CHECK(std::abs(inner(pauli_x(), pauli_x()) - cplx{1, 0}) < 1e-15);
  CHECK_THROWS_AS(inner(pauli_x(), ComplexMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("pauli basis") {
  const auto b = pauli_basis();
  REQUIRE(b->size() == 4);
  CHECK(b->object_dim == 2);
  CHECK(b->kind == BasisKind::Quantum);
  CHECK(max_abs_diff(b->elements[0], pauli_i()) == 0.0);
  CHECK(max_abs_diff(b->elements[1], pauli_x()) == 0.0);
  CHECK(max_abs_diff(b->elements[2], pauli_y()) == 0.0);
  CHECK(max_abs_diff(b->elements[3], pauli_z()) == 0.0);
  CHECK(verify_orthonormal(*b, 1e-12));
}

TEST_CASE("classical bases") {
  const auto b2 = classical_basis(2);
  REQUIRE(b2->size() == 2);
  CHECK(b2->kind == BasisKind::Classical);
  CHECK(max_abs_diff(b2->elements[0], pauli_i()) == 0.0);
  CHECK(max_abs_diff(b2->elements[1], pauli_x()) == 0.0);

  for (std::size_t d : {2, 3, 4}) CHECK(verify_orthonormal(*classical_basis(d), 1e-12));
  CHECK_THROWS_AS(classical_basis(1), std::invalid_argument);
}

TEST_CASE("heisenberg-weyl bases are orthonormal and unitary") {
  for (std::size_t d : {2, 3, 4}) {
    const auto b = heisenberg_weyl_basis(d);
    CHECK(b->size() == d * d);
    CHECK(verify_orthonormal(*b, 1e-12));
  }
}

TEST_CASE("custom basis validation") {
  CHECK_THROWS_AS(custom_basis({pauli_i(), mat2(1, 1, 1, 1)}), std::invalid_argument);
  CHECK_THROWS_AS(custom_basis({pauli_i(), pauli_i()}), std::invalid_argument);
  const auto b = custom_basis({pauli_i(), pauli_z()});
  CHECK(b->kind == BasisKind::Custom);
}

TEST_CASE("decompose") {
  const auto pauli = pauli_basis();

  const auto ci = decompose(pauli_i(), *pauli);
  CHECK(std::abs(ci[0] - cplx{1, 0}) < 1e-15);
  for (int k = 1; k < 4; ++k) CHECK(std::abs(ci[k]) < 1e-15);

  ComplexMatrix xy = pauli_x() + pauli_y();
  xy *= 1.0 / std::sqrt(2.0);
  const auto cxy = decompose(xy, *pauli);
  CHECK(std::abs(cxy[1] - cplx{1.0 / std::sqrt(2.0), 0}) < 1e-15);
  CHECK(std::abs(cxy[2] - cplx{1.0 / std::sqrt(2.0), 0}) < 1e-15);

  ComplexMatrix had = pauli_x() + pauli_z();
  had *= 1.0 / std::sqrt(2.0);
  const auto ch = decompose(had, *pauli);
  CHECK(std::abs(ch[0]) < 1e-15);
  CHECK(std::abs(ch[1] - cplx{1.0 / std::sqrt(2.0), 0}) < 1e-15);
  CHECK(std::abs(ch[2]) < 1e-15);
  CHECK(std::abs(ch[3] - cplx{1.0 / std::sqrt(2.0), 0}) < 1e-15);

  // outside the span of {I, X}
  CHECK_THROWS_AS(decompose(had, *classical_basis(2)), std::invalid_argument);
}

TEST_CASE("reconstruct") {
  const auto pauli = pauli_basis();
  CHECK(max_abs_diff(reconstruct({1, 0, 0, 0}, *pauli), pauli_i()) == 0.0);

  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix xy = pauli_x() + pauli_y();
  xy *= r;
  CHECK(max_abs_diff(reconstruct({0, r, r, 0}, *pauli), xy) < 1e-15);

  CHECK_THROWS_AS(reconstruct({1, 0}, *pauli), std::invalid_argument);
}

TEST_CASE("unitary_from_params") {
  CHECK(max_abs_diff(unitary_from_params({}), pauli_i()) < 1e-15);

  const double a = 0.7;
  ComplexMatrix phased = ComplexMatrix::identity(2);
  phased *= cplx{std::cos(a), std::sin(a)};
  CHECK(max_abs_diff(unitary_from_params({a, 0, 0, 0}), phased) < 1e-15);

  ComplexMatrix ix = pauli_x();
  ix *= cplx{0, 1};
  CHECK(max_abs_diff(unitary_from_params({0, M_PI, M_PI, 0}), ix) < 1e-15);
}

TEST_CASE("random params: unitarity and round trip") {
  Rng rng(21);
  const auto pauli = pauli_basis();
  for (int t = 0; t < 1000; ++t) {
    const ComplexMatrix u = unitary_from_params(random_params(rng));
    CHECK(is_unitary(u, 1e-10));
    const ComplexMatrix back = reconstruct(decompose(u, *pauli), *pauli);
    CHECK(max_abs_diff(back, u) <= 1e-12);
  }
}

TEST_CASE("pure_strategy_state") {
  const auto pauli = pauli_basis();

  ComplexMatrix xy = pauli_x() + pauli_y();
  xy *= 1.0 / std::sqrt(2.0);
  const auto s = pure_strategy_state(xy, pauli);
  CHECK(std::abs(s.rho(1, 1) - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(s.rho(1, 2) - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(s.rho(2, 1) - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(s.rho(2, 2) - cplx{0.5, 0}) < 1e-15);
  CHECK(std::abs(s.rho(0, 0)) < 1e-15);

  const auto si = pure_strategy_state(pauli_i(), pauli);
  CHECK(std::abs(si.rho(0, 0) - cplx{1, 0}) < 1e-15);

  ComplexMatrix ix = pauli_x();
  ix *= cplx{0, 1};
  const auto sx = pure_strategy_state(ix, pauli);
  CHECK(std::abs(sx.rho(1, 1) - cplx{1, 0}) < 1e-15);
  CHECK(std::abs(sx.rho(0, 0)) < 1e-15);
}

TEST_CASE("pure states: density, rank one, phase invariance") {
  Rng rng(22);
  const auto pauli = pauli_basis();
  for (int t = 0; t < 100; ++t) {
    const ComplexMatrix u = unitary_from_params(random_params(rng));
    const auto s = pure_strategy_state(u, pauli);
    CHECK(is_density_matrix(s.rho, 1e-9));
    const auto eig = hermitian_eigensystem(s.rho);
    CHECK(eig.values[1] <= 1e-10);

    const double theta = rng.uniform(0.0, 2.0 * M_PI);
    ComplexMatrix phased = u;
    phased *= cplx{std::cos(theta), std::sin(theta)};
    CHECK(max_abs_diff(pure_strategy_state(phased, pauli).rho, s.rho) <= 1e-12);
  }
}

TEST_CASE("classical_mixture_state") {
  const auto b2 = classical_basis(2);
  const auto half = classical_mixture_state({0.5, 0.5}, b2);
  CHECK(half.rho(0, 0) == cplx{0.5, 0});
  CHECK(half.rho(1, 1) == cplx{0.5, 0});
  CHECK(half.rho(0, 1) == cplx{});

  const auto point = classical_mixture_state({1.0, 0.0}, b2);
  CHECK(point.rho(0, 0) == cplx{1, 0});

  const auto pauli = pauli_basis();
  const auto uni = classical_mixture_state({0.25, 0.25, 0.25, 0.25}, pauli);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(uni.rho(i, i) == cplx{0.25, 0});
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) CHECK(uni.rho(i, j) == cplx{});
  }

  CHECK_THROWS_AS(classical_mixture_state({-0.1, 1.1}, b2), std::invalid_argument);
  CHECK_THROWS_AS(classical_mixture_state({0.4, 0.4}, b2), std::invalid_argument);
  CHECK_THROWS_AS(classical_mixture_state({1.0}, b2), std::invalid_argument);
}

TEST_CASE("density_state validation") {
  const auto b2 = classical_basis(2);
  CHECK_THROWS_AS(density_state(mat2(2, 0, 0, -1), b2), std::invalid_argument);
  const auto ok = density_state(mat2(0.5, 0, 0, 0.5), b2);
  CHECK(ok.rho(0, 0) == cplx{0.5, 0});
}
