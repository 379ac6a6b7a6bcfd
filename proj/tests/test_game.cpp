// SPDX-License-Identifier: Apache-2.0
#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "qgt/game.hpp"
#include "qgt/payoff.hpp"

using namespace qgt;
using namespace qgt::test;

TEST_CASE("make_pfg") {
  const GameDefinition g = make_pfg();
  CHECK(validate_game(g).empty());
  CHECK(g.object_dim == 2);
  CHECK(g.players.size() == 2);
  CHECK(g.classical());
  ComplexMatrix sum = g.players[0].scale + g.players[1].scale;
  CHECK(max_abs(sum) == 0.0);
  CHECK(g.joint_dim() == 4);
}

TEST_CASE("make_sfg") {
  const GameDefinition g = make_sfg();
  CHECK(validate_game(g).empty());
  CHECK_FALSE(g.classical());
  CHECK(g.players[0].basis->size() == 4);
  CHECK(g.joint_dim() == 16);
  CHECK(max_abs_diff(g.players[0].scale, pauli_z()) == 0.0);
}

TEST_CASE("validate_game reports violations") {
  GameDefinition g = make_pfg();
  g.initial_state = mat2(2, 0, 0, -1);
  const auto v1 = validate_game(g);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].find("density") != std::string::npos);

  GameDefinition g2 = make_pfg();
  g2.players[0].scale = mat2(0, 1, 0, 0);
  const auto v2 = validate_game(g2);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].find("Hermitian") != std::string::npos);
}

TEST_CASE("evolve_object") {
  const GameDefinition g = make_sfg();
  CHECK(max_abs_diff(evolve_object(g, {{pauli_i(), pauli_i()}}), mat2(1, 0, 0, 0)) == 0.0);
  CHECK(max_abs_diff(evolve_object(g, {{pauli_x(), pauli_i()}}), mat2(0, 0, 0, 1)) == 0.0);
  CHECK(max_abs_diff(evolve_object(g, {{pauli_x(), pauli_x()}}), mat2(1, 0, 0, 0)) == 0.0);

  CHECK_THROWS_AS(evolve_object(g, {{pauli_x()}}), std::invalid_argument);
  ComplexMatrix bad = pauli_x() + pauli_y();
  CHECK_THROWS_AS(evolve_object(g, {{bad, pauli_i()}}), std::invalid_argument);
}

TEST_CASE("evolve_object preserves trace and spectrum") {
  Rng rng(31);
  GameDefinition g = make_sfg();
  for (int t = 0; t < 20; ++t) {
    g.initial_state = random_density(2, rng);
    const ComplexMatrix out = evolve_object(
        g, {{unitary_from_params(random_params(rng)), unitary_from_params(random_params(rng))}});
    CHECK(std::abs(trace(out) - trace(g.initial_state)) < 1e-10);
    const auto before = hermitian_eigensystem(g.initial_state);
    const auto after = hermitian_eigensystem(out);
    for (std::size_t i = 0; i < 2; ++i)
      CHECK(std::abs(before.values[i] - after.values[i]) < 1e-10);
    CHECK(is_density_matrix(out, 1e-10));
  }
}

TEST_CASE("evolve_object order: later players act on the left") {
  const GameDefinition g = make_sfg();

  // (X, Y): L = Y * X = -iZ, so the end state equals Z rho Z.
  const ComplexMatrix via_profile = evolve_object(g, {{pauli_x(), pauli_y()}});
  const ComplexMatrix expect = matmul(matmul(pauli_z(), g.initial_state), pauli_z());
  CHECK(max_abs_diff(via_profile, expect) < 1e-15);

  // Order must matter for strategies that do not commute up to phase.
  ComplexMatrix had = pauli_x() + pauli_z();
  had *= 1.0 / std::sqrt(2.0);
  const ComplexMatrix xh = evolve_object(g, {{pauli_x(), had}});
  const ComplexMatrix hx = evolve_object(g, {{had, pauli_x()}});
  CHECK(max_abs_diff(xh, hx) > 0.5);

  const ComplexMatrix l = matmul(had, pauli_x());  // player 1 plays X first
  const ComplexMatrix manual = matmul(matmul(l, g.initial_state), adjoint(l));
  CHECK(max_abs_diff(xh, manual) < 1e-15);
}

TEST_CASE("manipulative_payoff") {
  const GameDefinition sfg = make_sfg();
  auto p = manipulative_payoff(sfg, {{pauli_i(), pauli_i()}});
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(-1.0).epsilon(1e-14));

  p = manipulative_payoff(sfg, {{pauli_y(), pauli_y()}});
  CHECK(p[0] == doctest::Approx(1.0).epsilon(1e-14));

  const GameDefinition pfg = make_pfg();
  p = manipulative_payoff(pfg, {{pauli_x(), pauli_i()}});
  CHECK(p[0] == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("demo games are zero sum on random profiles") {
  Rng rng(32);
  const GameDefinition sfg = make_sfg();
  for (int t = 0; t < 50; ++t) {
    const auto p = manipulative_payoff(
        sfg, {{unitary_from_params(random_params(rng)), unitary_from_params(random_params(rng))}});
    CHECK(std::abs(p[0] + p[1]) <= 1e-12);
  }
  const GameDefinition pfg = make_pfg();
  const auto& b = *pfg.players[0].basis;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto p = manipulative_payoff(pfg, {{b.elements[i], b.elements[j]}});
      CHECK(std::abs(p[0] + p[1]) <= 1e-12);
    }
}

TEST_CASE("pfg reproduces the classical matching-pennies table") {
  const GameDefinition g = make_pfg();
  const auto& b = *g.players[0].basis;
  const double expected[2][2] = {{1.0, -1.0}, {-1.0, 1.0}};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      const auto p = manipulative_payoff(g, {{b.elements[i], b.elements[j]}});
      CHECK(p[0] == doctest::Approx(expected[i][j]).epsilon(1e-14));
    }
}

TEST_CASE("classical_game_from_table") {
  const auto g = classical_game_from_table({{1, -1, -1, 1}, {-1, 1, 1, -1}}, 2, 2);
  CHECK(g.joint_dim() == 4);

  const auto constant = classical_game_from_table({{3, 3, 3, 3}}, 2, 2);
  const auto h = classical_payoff_operator(constant, 0);
  for (std::size_t k = 0; k < 4; ++k) CHECK(h.matrix(k, k) == cplx{3, 0});

  const auto wide = classical_game_from_table(
      {std::vector<double>(9, 0.0), std::vector<double>(9, 0.0)}, 3, 2);
  CHECK(wide.joint_dim() == 9);

  CHECK_THROWS_AS(classical_game_from_table({{1, 2, 3}}, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(classical_game_from_table({{1, 2, 3, 4}}, 2, 2), std::invalid_argument);
}

TEST_CASE("joint index helpers") {
  const std::vector<std::size_t> sizes = {4, 4};
  CHECK(flatten_index({1, 2}, sizes) == 6);
  const auto digits = unflatten_index(6, sizes);
  CHECK(digits[0] == 1);
  CHECK(digits[1] == 2);
  for (std::size_t k = 0; k < 16; ++k) CHECK(flatten_index(unflatten_index(k, sizes), sizes) == k);
}
