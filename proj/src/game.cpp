// SPDX-License-Identifier: Apache-2.0
#include "qgt/game.hpp"

#include <cmath>
#include <stdexcept>

#include "qgt/linalg.hpp"

namespace qgt {

namespace {

constexpr double kImagResidueTol = 1e-10;

ComplexMatrix heads_projector() {
  ComplexMatrix rho(2);
  rho(0, 0) = 1.0;
  return rho;
}

ComplexMatrix z_scale() {
  ComplexMatrix p(2);
  p(0, 0) = 1.0;
  p(1, 1) = -1.0;
  return p;
}

GameDefinition two_player_penny_game(BasisPtr basis) {
  GameDefinition g;
  g.object_dim = 2;
  g.initial_state = heads_projector();
  const ComplexMatrix p1 = z_scale();
  ComplexMatrix p2 = p1;
  p2 *= -1.0;
  g.players.push_back({"player1", basis, p1});
  g.players.push_back({"player2", basis, p2});
  return g;
}

// sN ... s1: later players multiply on the left.
ComplexMatrix compose(const std::vector<ComplexMatrix>& strategies, std::size_t dim) {
  ComplexMatrix l = ComplexMatrix::identity(dim);
  for (const auto& s : strategies) l = matmul(s, l);
  return l;
}

}  // namespace

bool GameDefinition::classical() const {
  for (const auto& p : players)
    if (!p.basis || p.basis->kind != BasisKind::Classical) return false;
  return !players.empty();
}

std::vector<std::size_t> GameDefinition::basis_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(players.size());
  for (const auto& p : players) sizes.push_back(p.basis ? p.basis->size() : 0);
  return sizes;
}

std::size_t GameDefinition::joint_dim() const {
  std::size_t j = 1;
  for (const auto& p : players) j *= p.basis ? p.basis->size() : 0;
  return j;
}

std::size_t ClassicalTableGame::joint_dim() const {
  std::size_t j = 1;
  for (std::size_t i = 0; i < n_players; ++i) j *= n_strategies;
  return j;
}

GameDefinition make_pfg() { return two_player_penny_game(classical_basis(2)); }

GameDefinition make_sfg() { return two_player_penny_game(pauli_basis()); }

std::vector<std::string> validate_game(const GameDefinition& g) {
  std::vector<std::string> violations;
  if (g.object_dim == 0) violations.push_back("object_dim must be positive");
  if (g.initial_state.dim() != g.object_dim)
    violations.push_back("initial_state dimension does not match object_dim");
  else if (!is_density_matrix(g.initial_state, kDefaultTol))
    violations.push_back("initial_state is not a density matrix");
  if (g.players.empty()) violations.push_back("game needs at least one player");
  for (std::size_t i = 0; i < g.players.size(); ++i) {
    const auto& p = g.players[i];
    const std::string who = "player " + std::to_string(i + 1);
    if (!p.basis) {
      violations.push_back(who + ": missing strategy basis");
      continue;
    }
    if (p.basis->object_dim != g.object_dim)
      violations.push_back(who + ": basis dimension does not match object_dim");
    if (p.scale.dim() != g.object_dim)
      violations.push_back(who + ": scale dimension does not match object_dim");
    else if (!all_finite(p.scale))
      violations.push_back(who + ": scale has non-finite entries");
    else if (max_abs_diff(p.scale, adjoint(p.scale)) > kDefaultTol)
      violations.push_back(who + ": scale operator is not Hermitian");
  }
  return violations;
}

ComplexMatrix evolve_object(const GameDefinition& g, const PureProfile& p) {
  if (p.strategies.size() != g.player_count())
    throw std::invalid_argument("evolve_object: profile length does not match player count");
  for (std::size_t i = 0; i < p.strategies.size(); ++i) {
    if (p.strategies[i].dim() != g.object_dim)
      throw std::invalid_argument("evolve_object: strategy dimension mismatch for player " +
                                  std::to_string(i + 1));
    if (!is_unitary(p.strategies[i], kDefaultTol))
      throw std::invalid_argument("evolve_object: strategy of player " + std::to_string(i + 1) +
                                  " is not unitary");
  }
  const ComplexMatrix l = compose(p.strategies, g.object_dim);
  return matmul(matmul(l, g.initial_state), adjoint(l));
}

std::vector<double> manipulative_payoff(const GameDefinition& g, const PureProfile& p) {
  const ComplexMatrix rho_end = evolve_object(g, p);
  std::vector<double> payoffs;
  payoffs.reserve(g.player_count());
  for (const auto& player : g.players) {
    const cplx value = trace_product(player.scale, rho_end);
    if (std::abs(value.imag()) > kImagResidueTol)
      throw std::runtime_error("manipulative_payoff: imaginary residue " +
                               std::to_string(value.imag()));
    payoffs.push_back(value.real());
  }
  return payoffs;
}

ClassicalTableGame classical_game_from_table(std::vector<std::vector<double>> tables,
                                             std::size_t n_strategies, std::size_t n_players) {
  if (n_players == 0) throw std::invalid_argument("classical_game_from_table: no players");
  if (n_strategies == 0) throw std::invalid_argument("classical_game_from_table: no strategies");
  if (tables.size() != n_players)
    throw std::invalid_argument("classical_game_from_table: need one table per player");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < n_players; ++i) expected *= n_strategies;
  for (const auto& t : tables) {
    if (t.size() != expected)
      throw std::invalid_argument("classical_game_from_table: table does not cover all profiles");
    for (double v : t)
      if (!std::isfinite(v))
        throw std::invalid_argument("classical_game_from_table: non-finite payoff");
  }
  return {n_players, n_strategies, std::move(tables)};
}

std::size_t flatten_index(const std::vector<std::size_t>& digits,
                          const std::vector<std::size_t>& sizes) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) idx = idx * sizes[i] + digits[i];
  return idx;
}

std::vector<std::size_t> unflatten_index(std::size_t idx, const std::vector<std::size_t>& sizes) {
  std::vector<std::size_t> digits(sizes.size());
  for (std::size_t i = sizes.size(); i-- > 0;) {
    digits[i] = idx % sizes[i];
    idx /= sizes[i];
  }
  return digits;
}

}  // namespace qgt
