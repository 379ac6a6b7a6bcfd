// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "qgt/opspace.hpp"

namespace qgt {

struct PlayerSpec {
  std::string name;
  BasisPtr basis;       // the player's strategy space spans this basis
  ComplexMatrix scale;  // Hermitian readout operator P^i
};

/// Manipulative definition of a game: initial object state, per-player
/// strategy spaces and payoff scales. The composition rule is fixed:
/// later players multiply on the left, L(s1,...,sN) = sN ... s1.
struct GameDefinition {
  std::size_t object_dim = 0;
  ComplexMatrix initial_state;
  std::vector<PlayerSpec> players;

  std::size_t player_count() const { return players.size(); }
  bool classical() const;  // every strategy space is a classical basis
  std::vector<std::size_t> basis_sizes() const;
  std::size_t joint_dim() const;
};

struct PureProfile {
  std::vector<ComplexMatrix> strategies;  // one unitary per player
};

/// Classical game given directly by per-player payoff tables in joint-index
/// order (player 1 major).
struct ClassicalTableGame {
  std::size_t n_players = 0;
  std::size_t n_strategies = 0;  // per player
  std::vector<std::vector<double>> tables;

  std::size_t joint_dim() const;
};

/// Penny-flipping demo: coin starting heads, strategy sets {I, X},
/// P1 = diag(1,-1) = -P2.
GameDefinition make_pfg();

/// Spin-flipping demo: identical to the penny game except both strategy
/// spaces span the full Pauli basis.
GameDefinition make_sfg();

/// Empty when all invariants hold, otherwise human-readable descriptions.
std::vector<std::string> validate_game(const GameDefinition& g);

/// L * rho_0 * adjoint(L) with L = sN ... s1.
ComplexMatrix evolve_object(const GameDefinition& g, const PureProfile& p);

/// payoff[i] = Re tr(P^i * evolve_object(g, p)); the imaginary residue must
/// stay below 1e-10.
std::vector<double> manipulative_payoff(const GameDefinition& g, const PureProfile& p);

ClassicalTableGame classical_game_from_table(std::vector<std::vector<double>> tables,
                                             std::size_t n_strategies,
                                             std::size_t n_players);

// Joint-index helpers; digits[0] belongs to player 1 and varies slowest.
std::size_t flatten_index(const std::vector<std::size_t>& digits,
                          const std::vector<std::size_t>& sizes);
std::vector<std::size_t> unflatten_index(std::size_t idx, const std::vector<std::size_t>& sizes);

}  // namespace qgt
