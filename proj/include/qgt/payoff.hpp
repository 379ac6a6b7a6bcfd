// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "qgt/game.hpp"

namespace qgt {

/// Hermitian payoff operator H^i over the joint operator basis. Contracting
/// it with a joint strategy state yields the player's expected payoff.
struct PayoffOperator {
  std::size_t player = 0;  // 0-based
  std::size_t joint_dim = 0;
  ComplexMatrix matrix;
};

struct JointStrategyState {
  ComplexMatrix matrix;
  std::vector<StrategyDensity> factors;  // retained when built as a product
};

struct ConsistencyReport {
  std::size_t trials = 0;
  double max_deviation = 0.0;
  bool pass = false;
};

/// Builds H^i for one player. For games whose strategy spaces are all
/// classical the operator is the strictly diagonal table of pure-profile
/// payoffs; otherwise the entry at (row mu, col nu) is
/// tr(P^i * M_nu * rho_0 * adjoint(M_mu)) with M the joint-basis monomial
/// composed by the game's rule (later players on the left).
PayoffOperator build_payoff_operator(const GameDefinition& g, std::size_t player);

std::vector<PayoffOperator> build_all_payoff_operators(const GameDefinition& g);

/// Diagonal operator straight from a classical payoff table.
PayoffOperator classical_payoff_operator(const ClassicalTableGame& g, std::size_t player);

/// Kronecker product of the per-player states, player 1 major. Each state's
/// basis must match the corresponding player's basis.
JointStrategyState joint_state(const GameDefinition& g, const std::vector<StrategyDensity>& states);

/// Re tr(state * H); the imaginary residue must stay below 1e-9.
double expected_payoff(const JointStrategyState& s, const PayoffOperator& h);

/// Samples random pure profiles inside each player's strategy space and
/// compares the trace-formula payoff against the direct manipulative payoff.
/// Passes when the largest deviation stays below 1e-10.
ConsistencyReport consistency_check(const GameDefinition& g, std::size_t trials,
                                    std::uint64_t seed);

}  // namespace qgt
